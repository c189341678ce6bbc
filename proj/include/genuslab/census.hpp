#pragma once
#include <cstdint>
#include <vector>

#include "genuslab/rooted_map.hpp"

namespace genuslab {

/// Exhaustive enumeration of the gluings of 2n labeled triangles: every
/// fixed-point-free involution alpha on 6n darts with phi fixed as 2n
/// 3-cycles, sigma = phi∘alpha. Rooted isomorphism classes are collected by
/// canonical form, per genus.
struct GluingCensus {
  int n = 0;
  std::uint64_t matchings_total = 0;
  std::uint64_t connected_total = 0;
  std::vector<std::uint64_t> connected_by_genus;        // matchings, indexed by genus
  std::vector<std::vector<CanonicalForm>> classes;      // per genus, sorted

  std::uint64_t class_count(int g) const {
    return g >= 0 && g < static_cast<int>(classes.size()) ? classes[g].size() : 0;
  }
  int max_genus() const { return static_cast<int>(classes.size()) - 1; }
  /// Index of a canonical form among the genus-g classes, or -1.
  int class_index(int g, const CanonicalForm& cf) const;
};

/// n <= 3 (matchings number (6n-1)!!). OpenMP over matching prefixes.
GluingCensus brute_force_census(int n);
/// Single-threaded reference implementation.
GluingCensus brute_force_census_serial(int n);

/// Map glued from 2n fixed triangles by the matching alpha; sigma = phi∘alpha.
/// Throws Disconnected when the gluing is not connected.
RootedMap gluing_map(int n, const std::vector<Dart>& alpha, Dart root);

/// phi on 6n darts as 2n 3-cycles (0 1 2)(3 4 5)...
inline Dart triangle_phi(Dart d) { return d % 3 == 2 ? d - 2 : d + 1; }

}  // namespace genuslab
