#pragma once
#include <cstdint>

namespace genuslab {

/// SplitMix64: tiny counter-based generator. Every output is a pure function
/// of (state counter), so streams can be split deterministically with mix().
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) {
    // rejection on the top of the range
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  double next_unit() {  // [0,1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Derive an independent stream for (seed, index) without advancing this one.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    g.next();
    return g;
  }

 private:
  std::uint64_t state_;
};

}  // namespace genuslab
