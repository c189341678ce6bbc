#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "genuslab/rng.hpp"
#include "genuslab/rooted_map.hpp"

namespace genuslab {

/// Rooted plane tree; tentacles correspond to trees where every vertex has an
/// even number of children.
struct PlaneTree {
  std::vector<PlaneTree> children;

  bool operator==(const PlaneTree&) const = default;
  std::size_t edge_count() const;
  bool all_even() const;
  PlaneTree mirrored() const;      // reverse children, recursively
  std::string to_string() const;   // nested parentheses
};

/// Lukasiewicz coding of forests of even plane trees: visiting vertices in
/// preorder, a vertex with 2c children contributes c steps +2 followed by one
/// step -1. A forest of a trees with 2b edges total maps to a walk of length
/// a+3b ending at -a and staying above -a before the end.
std::vector<int> lukasiewicz_encode(const std::vector<PlaneTree>& forest);
std::vector<PlaneTree> lukasiewicz_decode(const std::vector<int>& walk);

struct InsertionResult {
  RootedMap map;
  /// The 2k new inner edges open to further insertions, ordered
  /// (u-side path 1, v-side path 1, ..., u-side path k, v-side path k)
  /// reading along the dart the insertion was applied to; each given by its
  /// along-path dart. Existing dart ids are preserved.
  std::vector<Dart> fat_darts;
};

/// Open the edge of `edge_dart` into a 2-gon and triangulate it with k-1
/// edges and k paths of length 2. Adds 2k faces, preserves genus.
InsertionResult k_insert(const RootedMap& map, Dart edge_dart, int k);

/// Recursive insertions following an even plane tree: a node with 2k children
/// is a k-insertion, child j continuing on fat edge j. Throws OddChildCount.
RootedMap attach_tree(const RootedMap& map, Dart edge_dart, const PlaneTree& tree);

/// Stellar subdivision of a face: new center vertex joined to every corner.
/// spokes[i] is the dart from the i-th corner (in face-walk order starting at
/// face_dart) toward the center.
struct SubdivisionResult {
  RootedMap map;
  std::vector<Dart> spokes;
};
SubdivisionResult subdivide_face(const RootedMap& map, Dart face_dart);

/// The 10-face 2-gon pattern whose interior B_4 is a maximal tentacle,
/// inserted into the given edge. Used by maximality tests.
RootedMap insert_pattern_a(const RootedMap& map, Dart edge_dart);

struct Tentacle {
  Dart core_dart = 0;   // dart of the core edge, in core labels
  PlaneTree tree;       // children read along core_dart
  std::size_t face_count = 0;
};

struct CoreDecomposition {
  bool degenerate = false;  // map collapsed entirely (sphere of nested 2-gons)
  RootedMap core;           // single-edge sentinel when degenerate
  std::vector<Tentacle> tentacles;  // one per core edge, trivial ones included
  std::size_t tentacle_count = 0;   // T_n
  std::size_t tentacle_faces = 0;   // M_n
  int root_displacement = 0;        // R1 hops forced on the root dart
};

/// Fixpoint of the two reductions
///   R1: delete an internal degree-2 vertex whose incident faces are two
///       distinct triangles, merging them into a 2-gon face;
///   R2: collapse a 2-gon face with distinct side edges into a single edge;
/// recording the removed structure per core edge as an even plane tree.
CoreDecomposition core_decomposition(const Triangulation& t);
/// Reductions applied in random order; fixpoint should not depend on it.
CoreDecomposition core_decomposition_randomized(const Triangulation& t, SplitMix64& rng);

/// Closed map made of the tentacle with this tree: one 2-gon boundary face,
/// edge_count(tree) internal triangles. Inverse of tentacle_to_tree.
RootedMap tree_to_tentacle(const PlaneTree& tree);
PlaneTree tentacle_to_tree(const RootedMap& tentacle_map);

/// Ladder tentacle B_ell as an even tree; 2(ell-1) edges.
PlaneTree ladder_tree(int ell);
/// w_ell, its Lukasiewicz word; length 3*ell - 2 with ell-1 steps +2.
std::vector<int> ladder_word(int ell);

struct TentacleStats {
  bool degenerate = false;
  std::size_t tentacle_count = 0;  // T_n
  std::size_t tentacle_faces = 0;  // M_n
  int ell_max = 0;  // largest ell >= 2 with w_ell inside some tentacle word
  int ell_witness = -1;  // index into the decomposition's tentacle list
  std::vector<std::uint64_t> height_histogram;  // darts per height H(e)
};

/// T_n, M_n, max ladder height and the per-dart height profile (distance to
/// the base edge of the containing tentacle; 0 on the core).
TentacleStats tentacle_stats(const Triangulation& t);

}  // namespace genuslab
