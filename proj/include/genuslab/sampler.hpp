#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "genuslab/rng.hpp"
#include "genuslab/rooted_map.hpp"

namespace genuslab {

struct SamplerStats {
  std::uint64_t attempts = 0;
  std::uint64_t accepted = 0;
  std::uint64_t rejected_disconnected = 0;
  std::uint64_t rejected_genus = 0;
  std::uint64_t seed = 0;

  SamplerStats& operator+=(const SamplerStats& o) {
    attempts += o.attempts;
    accepted += o.accepted;
    rejected_disconnected += o.rejected_disconnected;
    rejected_genus += o.rejected_genus;
    return *this;
  }
};

/// One uniform gluing of 2n triangles: alpha drawn as a uniform fixed-point
/// free involution on 6n darts, sigma = phi∘alpha, root = dart 0. Empty when
/// the gluing is disconnected (rejection is a value, not an error).
std::optional<RootedMap> sample_gluing(int n, SplitMix64& rng);

/// Rejection sampling until connected with the requested genus; exactly
/// uniform on rooted triangulations with 2n faces and genus g. Throws
/// EmptyClass when n < 2g-1, Exhausted after max_attempts rejections.
Triangulation sample_uniform(int n, int g, SplitMix64& rng,
                             std::uint64_t max_attempts = 100'000'000,
                             SamplerStats* stats = nullptr);

struct BatchResult {
  std::vector<Triangulation> maps;  // in seed order
  std::vector<SamplerStats> per_seed;
  SamplerStats total;
};

/// `count` maps split evenly across independent per-seed streams; maps and
/// stats are deterministic functions of (n, g, count, seeds). OpenMP across
/// seeds.
BatchResult batch_sample(int n, int g, int count, const std::vector<std::uint64_t>& seeds,
                         std::uint64_t max_attempts = 100'000'000);
BatchResult batch_sample_serial(int n, int g, int count, const std::vector<std::uint64_t>& seeds,
                                std::uint64_t max_attempts = 100'000'000);

}  // namespace genuslab
