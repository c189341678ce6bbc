#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "genuslab/rng.hpp"
#include "genuslab/rooted_map.hpp"

namespace genuslab {

struct ProfileEntry {
  int k1 = 0;
  int cut_any = -1;  // -1 when no separation of this split size was found
  std::vector<int> witness_any;
  int cut_multicurve = -1;  // best cut whose edge set certifies as a multicurve
  std::vector<int> witness_multicurve;
};

struct IsoperimetricProfile {
  bool exact = false;
  std::vector<ProfileEntry> entries;  // k1 = 1 .. n_faces/2

  const ProfileEntry& at(int k1) const { return entries.at(k1 - 1); }
};

/// Minimum separating-cut length per split size, over face bipartitions with
/// both sides face-connected. Exhaustive when 2n <= exact_limit, otherwise
/// randomized contraction runs plus ball-boundary seeds (upper bounds only).
IsoperimetricProfile isoperimetric_profile(const Triangulation& t, int exact_limit = 16,
                                           std::uint64_t seed = 1);
/// Single-threaded exact scan, reference for the parallel one.
IsoperimetricProfile isoperimetric_profile_serial(const Triangulation& t, int exact_limit = 16,
                                                  std::uint64_t seed = 1);

struct MulticurveCandidate {
  std::vector<Dart> edges;                // canonical darts (d < alpha(d))
  std::vector<std::vector<Dart>> cycles;  // decomposition into oriented closed walks
  std::vector<int> lengths;               // cycle lengths
  bool valid = false;
  std::string failure;  // "crossing" or "cycle not simple" when invalid
};

/// Decompose an edge set into cycles and certify the multicurve conditions:
/// each cycle simple, cycles edge-disjoint, no two cycles crossing at a shared
/// vertex (four-edge interleaving in sigma's cyclic order). Throws
/// NotAClosedUnion when the set has an odd-degree vertex.
MulticurveCandidate multicurve_validate(const Triangulation& t, const std::vector<Dart>& edges);

/// Edges with exactly one incident face inside the set, as canonical darts.
std::vector<Dart> cut_edge_set(const Triangulation& t, const std::vector<int>& faces);

struct CheegerResult {
  bool infinite = false;  // single-vertex map
  long long boundary = 0;
  long long size = 1;  // h = boundary / size
  std::vector<int> witness;
  bool exact = false;

  double value() const { return infinite ? 0.0 : static_cast<double>(boundary) / size; }
};

/// min over vertex subsets V1 with |V1| <= |V|/2 of |edges leaving V1| / |V1|,
/// edge multiplicity counted. Exact by connected-subset enumeration when
/// |V| <= exact_limit, otherwise BFS-sweep heuristics (upper bound, flagged).
CheegerResult cheeger(const Triangulation& t, int exact_limit = 16);
CheegerResult cheeger_serial(const Triangulation& t, int exact_limit = 16);

struct IsolatedFacesResult {
  bool exact = false;
  int count = 0;
  std::vector<int> faces;
};

/// Faces f admitting a separating multicurve with f in the k1 side,
/// k2 >= ceil(sqrt(n)) and total length <= eps * min(k1, k2); candidate cuts
/// must certify via multicurve_validate.
IsolatedFacesResult isolated_faces(const Triangulation& t, double eps, int exact_limit = 16);

}  // namespace genuslab
