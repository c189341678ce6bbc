#pragma once
#include <array>
#include <cstdint>
#include <vector>

#include "genuslab/error.hpp"

namespace genuslab {

using Dart = std::uint32_t;
inline constexpr Dart kNoDart = ~Dart(0);

/// Canonical relabeling of a rooted map; two rooted maps are isomorphic
/// (by a root-preserving isomorphism) iff their canonical forms are equal.
/// The root is always dart 0.
struct CanonicalForm {
  std::vector<Dart> sigma;
  std::vector<Dart> alpha;

  bool operator==(const CanonicalForm&) const = default;
  bool operator<(const CanonicalForm& o) const {
    return sigma != o.sigma ? sigma < o.sigma : alpha < o.alpha;
  }
};

/// Oriented rooted map encoded as a rotation system on darts:
/// sigma is the counterclockwise rotation at each vertex, alpha the
/// fixed-point-free edge involution. The face permutation is phi = sigma∘alpha.
/// Immutable after construction; vertex/face orbits and genus are precomputed.
class RootedMap {
 public:
  /// Empty placeholder; real maps come from build().
  RootedMap() = default;

  /// Validates and builds. Throws Error with code NotAPermutation,
  /// AlphaFixedPoint or Disconnected.
  static RootedMap build(std::vector<Dart> sigma, std::vector<Dart> alpha, Dart root);

  std::size_t dart_count() const { return sigma_.size(); }
  std::size_t edge_count() const { return sigma_.size() / 2; }

  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart phi(Dart d) const { return sigma_[alpha_[d]]; }
  Dart root() const { return root_; }

  const std::vector<Dart>& sigma_perm() const { return sigma_; }
  const std::vector<Dart>& alpha_perm() const { return alpha_; }

  int vertex_count() const { return n_vertices_; }
  int face_count() const { return n_faces_; }
  int genus() const { return genus_; }

  int vertex_of(Dart d) const { return vertex_id_[d]; }
  int face_of(Dart d) const { return face_id_[d]; }
  int face_size(int face) const { return face_size_[face]; }
  /// One representative dart per face, indexed by face id.
  Dart face_rep(int face) const { return face_rep_[face]; }
  Dart vertex_rep(int vertex) const { return vertex_rep_[vertex]; }

  bool is_triangulation() const;

  CanonicalForm canonical_form() const;

  /// The same map with darts renamed by `perm` (new_dart = perm[old_dart]).
  RootedMap relabeled(const std::vector<Dart>& perm) const;

  /// Identical map rooted elsewhere.
  RootedMap rerooted(Dart new_root) const;

 private:
  void index_orbits();

  std::vector<Dart> sigma_, sigma_inv_, alpha_;
  Dart root_ = 0;
  std::vector<std::int32_t> vertex_id_, face_id_;
  std::vector<std::int32_t> face_size_;
  std::vector<Dart> face_rep_, vertex_rep_;
  int n_vertices_ = 0, n_faces_ = 0, genus_ = 0;
};

/// Genus from Euler counts; throws NonOrientableInconsistency when
/// 2 - V + E - F is negative or odd.
int genus_from_counts(int vertices, int edges, int faces);

/// Triangulation: every phi-orbit has size 3. 2n faces, 3n edges,
/// n+2-2g vertices.
class Triangulation {
 public:
  static Triangulation from_map(RootedMap map);

  const RootedMap& map() const { return map_; }
  int n() const { return half_faces_; }
  int genus() const { return map_.genus(); }

 private:
  explicit Triangulation(RootedMap map, int n) : map_(std::move(map)), half_faces_(n) {}
  RootedMap map_;
  int half_faces_;
};

/// Sub-map spanned by a set of internal faces, cut out of its parent as a
/// closed map: one external face per boundary walk, shared boundary vertices
/// duplicated per walk.
struct BorderedSubmap {
  RootedMap map;
  std::size_t internal_face_count = 0;
  std::size_t boundary_length = 0;  // boundary edge-sides (darts), not edges
  int genus = 0;
  std::vector<int> external_faces;                 // face ids in `map`
  std::vector<std::vector<Dart>> boundary_walks;   // per external face, parent boundary darts
  std::vector<Dart> parent_dart;                   // new dart -> parent dart it came from
};

BorderedSubmap submap_of_faces(const RootedMap& parent, const std::vector<int>& faces);

/// Multigraph on faces: one dual edge per map edge (loops allowed).
struct DualGraph {
  int n_faces = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> adj;  // neighbor face per incident edge side, multiplicity kept
};

DualGraph dual_graph(const Triangulation& tri);

/// Hand-built reference maps used across tests and docs.
RootedMap tetrahedron_map();
RootedMap one_vertex_torus_map();
RootedMap single_edge_map();

}  // namespace genuslab
