#include "genuslab/sampler.hpp"

#include <numeric>

#include "genuslab/census.hpp"

namespace genuslab {

namespace {

// uniform fixed-point-free involution: repeatedly pair the first free dart
// with a uniform other free dart
void random_matching(int nd, SplitMix64& rng, std::vector<Dart>& alpha, std::vector<Dart>& pool) {
  alpha.resize(nd);
  pool.resize(nd);
  std::iota(pool.begin(), pool.end(), 0);
  std::size_t size = pool.size();
  while (size > 0) {
    Dart a = pool[0];
    std::size_t j = 1 + rng.next_below(size - 1);
    Dart b = pool[j];
    alpha[a] = b;
    alpha[b] = a;
    pool[j] = pool[size - 1];
    --size;
    pool[0] = pool[size - 1];
    --size;
  }
}

bool connected_gluing(int nd, const std::vector<Dart>& alpha, std::vector<Dart>& stack,
                      std::vector<char>& seen) {
  seen.assign(nd, 0);
  stack.clear();
  stack.push_back(0);
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    Dart nb[2] = {triangle_phi(alpha[d]), alpha[d]};
    for (Dart e : nb) {
      if (!seen[e]) {
        seen[e] = 1;
        ++reached;
        stack.push_back(e);
      }
    }
  }
  return reached == nd;
}

int gluing_genus(int n, int nd, const std::vector<Dart>& alpha, std::vector<char>& seen) {
  seen.assign(nd, 0);
  int vertices = 0;
  for (Dart d = 0; d < static_cast<Dart>(nd); ++d) {
    if (seen[d]) continue;
    ++vertices;
    for (Dart e = d; !seen[e]; e = triangle_phi(alpha[e])) seen[e] = 1;
  }
  return (2 - vertices + n) / 2;
}

}  // namespace

std::optional<RootedMap> sample_gluing(int n, SplitMix64& rng) {
  const int nd = 6 * n;
  std::vector<Dart> alpha, pool, stack;
  std::vector<char> seen;
  random_matching(nd, rng, alpha, pool);
  if (!connected_gluing(nd, alpha, stack, seen)) return std::nullopt;
  return gluing_map(n, alpha, 0);
}

Triangulation sample_uniform(int n, int g, SplitMix64& rng, std::uint64_t max_attempts,
                             SamplerStats* stats) {
  if (n < 1 || g < 0 || n < 2 * g - 1)
    throw Error(ErrorCode::EmptyClass,
                "no triangulations with n=" + std::to_string(n) + " g=" + std::to_string(g));
  const int nd = 6 * n;
  std::vector<Dart> alpha, pool, stack;
  std::vector<char> seen;
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    if (stats) ++stats->attempts;
    random_matching(nd, rng, alpha, pool);
    if (!connected_gluing(nd, alpha, stack, seen)) {
      if (stats) ++stats->rejected_disconnected;
      continue;
    }
    if (gluing_genus(n, nd, alpha, seen) != g) {
      if (stats) ++stats->rejected_genus;
      continue;
    }
    if (stats) ++stats->accepted;
    return Triangulation::from_map(gluing_map(n, alpha, 0));
  }
  throw Error(ErrorCode::Exhausted, "no accepted sample in " + std::to_string(max_attempts) + " attempts");
}

namespace {

BatchResult batch_impl(int n, int g, int count, const std::vector<std::uint64_t>& seeds,
                       std::uint64_t max_attempts, bool parallel) {
  if (seeds.empty()) throw Error(ErrorCode::ConfigError, "need at least one seed");
  const int s = static_cast<int>(seeds.size());
  std::vector<int> quota(s, count / s);
  for (int i = 0; i < count % s; ++i) ++quota[i];

  BatchResult out;
  out.per_seed.assign(s, SamplerStats{});
  std::vector<std::vector<Triangulation>> chunks(s);
  std::exception_ptr error;  // exceptions must not unwind out of the omp region
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < s; ++i) {
    try {
      SplitMix64 rng(seeds[i]);
      SamplerStats st;
      st.seed = seeds[i];
      for (int k = 0; k < quota[i]; ++k)
        chunks[i].push_back(sample_uniform(n, g, rng, max_attempts, &st));
      out.per_seed[i] = st;
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  for (int i = 0; i < s; ++i) {
    out.total += out.per_seed[i];
    for (auto& m : chunks[i]) out.maps.push_back(std::move(m));
  }
  out.total.seed = seeds[0];
  return out;
}

}  // namespace

BatchResult batch_sample(int n, int g, int count, const std::vector<std::uint64_t>& seeds,
                         std::uint64_t max_attempts) {
  return batch_impl(n, g, count, seeds, max_attempts, true);
}

BatchResult batch_sample_serial(int n, int g, int count, const std::vector<std::uint64_t>& seeds,
                                std::uint64_t max_attempts) {
  return batch_impl(n, g, count, seeds, max_attempts, false);
}

}  // namespace genuslab
