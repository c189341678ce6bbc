#include "genuslab/rooted_map.hpp"

#include <algorithm>
#include <numeric>

namespace genuslab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::AlphaFixedPoint: return "AlphaFixedPoint";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonOrientableInconsistency: return "NonOrientableInconsistency";
    case ErrorCode::EmptyFaceSet: return "EmptyFaceSet";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::NotSeeded: return "NotSeeded";
    case ErrorCode::NonIntegralEntry: return "NonIntegralEntry";
    case ErrorCode::InconsistentSeed: return "InconsistentSeed";
    case ErrorCode::TableTooSmall: return "TableTooSmall";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::OddChildCount: return "OddChildCount";
    case ErrorCode::MalformedWalk: return "MalformedWalk";
    case ErrorCode::NotAClosedUnion: return "NotAClosedUnion";
    case ErrorCode::DegenerateTotalCollapse: return "DegenerateTotalCollapse";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

namespace {

bool is_permutation(const std::vector<Dart>& p) {
  std::vector<bool> seen(p.size(), false);
  for (Dart v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

RootedMap RootedMap::build(std::vector<Dart> sigma, std::vector<Dart> alpha, Dart root) {
  const std::size_t n = sigma.size();
  if (n == 0 || alpha.size() != n || n % 2 != 0)
    throw Error(ErrorCode::NotAPermutation, "dart arrays must have equal even positive length");
  if (!is_permutation(sigma)) throw Error(ErrorCode::NotAPermutation, "sigma is not a permutation");
  if (!is_permutation(alpha)) throw Error(ErrorCode::NotAPermutation, "alpha is not a permutation");
  for (Dart d = 0; d < n; ++d) {
    if (alpha[d] == d) throw Error(ErrorCode::AlphaFixedPoint, "alpha fixes dart " + std::to_string(d));
    if (alpha[alpha[d]] != d)
      throw Error(ErrorCode::NotAPermutation, "alpha is not an involution at dart " + std::to_string(d));
  }
  if (root >= n) throw Error(ErrorCode::NotAPermutation, "root dart out of range");

  // connectivity under <sigma, alpha>
  std::vector<bool> seen(n, false);
  std::vector<Dart> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart e : {sigma[d], alpha[d]}) {
      if (!seen[e]) {
        seen[e] = true;
        ++reached;
        stack.push_back(e);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::Disconnected, "dart set is not connected");

  RootedMap m;
  m.sigma_ = std::move(sigma);
  m.alpha_ = std::move(alpha);
  m.root_ = root;
  m.sigma_inv_.assign(n, 0);
  for (Dart d = 0; d < n; ++d) m.sigma_inv_[m.sigma_[d]] = d;
  m.index_orbits();
  return m;
}

void RootedMap::index_orbits() {
  const std::size_t n = sigma_.size();
  vertex_id_.assign(n, -1);
  face_id_.assign(n, -1);
  n_vertices_ = 0;
  for (Dart d = 0; d < n; ++d) {
    if (vertex_id_[d] >= 0) continue;
    vertex_rep_.push_back(d);
    for (Dart e = d; vertex_id_[e] < 0; e = sigma_[e]) vertex_id_[e] = n_vertices_;
    ++n_vertices_;
  }
  n_faces_ = 0;
  for (Dart d = 0; d < n; ++d) {
    if (face_id_[d] >= 0) continue;
    face_rep_.push_back(d);
    int size = 0;
    for (Dart e = d; face_id_[e] < 0; e = phi(e)) {
      face_id_[e] = n_faces_;
      ++size;
    }
    face_size_.push_back(size);
    ++n_faces_;
  }
  genus_ = genus_from_counts(n_vertices_, static_cast<int>(n / 2), n_faces_);
}

int genus_from_counts(int vertices, int edges, int faces) {
  const int deficit = 2 - vertices + edges - faces;  // = 2g
  if (deficit < 0 || deficit % 2 != 0)
    throw Error(ErrorCode::NonOrientableInconsistency,
                "Euler count 2-V+E-F = " + std::to_string(deficit));
  return deficit / 2;
}

bool RootedMap::is_triangulation() const {
  for (int f = 0; f < n_faces_; ++f)
    if (face_size_[f] != 3) return false;
  return true;
}

CanonicalForm RootedMap::canonical_form() const {
  const std::size_t n = sigma_.size();
  std::vector<Dart> label(n, kNoDart);
  std::vector<Dart> order;
  order.reserve(n);
  label[root_] = 0;
  order.push_back(root_);
  // breadth-first, sigma-successor before alpha-partner
  for (std::size_t head = 0; head < order.size(); ++head) {
    Dart d = order[head];
    for (Dart e : {sigma_[d], alpha_[d]}) {
      if (label[e] == kNoDart) {
        label[e] = static_cast<Dart>(order.size());
        order.push_back(e);
      }
    }
  }
  CanonicalForm cf;
  cf.sigma.resize(n);
  cf.alpha.resize(n);
  for (Dart d = 0; d < n; ++d) {
    cf.sigma[label[d]] = label[sigma_[d]];
    cf.alpha[label[d]] = label[alpha_[d]];
  }
  return cf;
}

RootedMap RootedMap::relabeled(const std::vector<Dart>& perm) const {
  const std::size_t n = sigma_.size();
  std::vector<Dart> s(n), a(n);
  for (Dart d = 0; d < n; ++d) {
    s[perm[d]] = perm[sigma_[d]];
    a[perm[d]] = perm[alpha_[d]];
  }
  return build(std::move(s), std::move(a), perm[root_]);
}

RootedMap RootedMap::rerooted(Dart new_root) const {
  RootedMap m = *this;
  if (new_root >= dart_count()) throw Error(ErrorCode::InvalidEdge, "root dart out of range");
  m.root_ = new_root;
  return m;
}

Triangulation Triangulation::from_map(RootedMap map) {
  for (int f = 0; f < map.face_count(); ++f)
    if (map.face_size(f) != 3)
      throw Error(ErrorCode::NotAPermutation,
                  "face " + std::to_string(f) + " has degree " + std::to_string(map.face_size(f)));
  if (map.face_count() % 2 != 0)
    throw Error(ErrorCode::NonOrientableInconsistency, "odd number of triangular faces");
  const int n = map.face_count() / 2;
  return Triangulation(std::move(map), n);
}

BorderedSubmap submap_of_faces(const RootedMap& parent, const std::vector<int>& faces) {
  if (faces.empty()) throw Error(ErrorCode::EmptyFaceSet, "face set is empty");
  const std::size_t nd = parent.dart_count();
  std::vector<bool> face_in(parent.face_count(), false);
  for (int f : faces) {
    if (f < 0 || f >= parent.face_count())
      throw Error(ErrorCode::EmptyFaceSet, "face id out of range");
    face_in[f] = true;
  }

  // D_S = darts of internal faces; boundary darts have alpha-partner outside.
  std::vector<bool> in(nd, false);
  for (Dart d = 0; d < nd; ++d) in[d] = face_in[parent.face_of(d)];

  std::vector<Dart> new_id(nd, kNoDart);
  std::vector<Dart> old_of;
  for (Dart d = 0; d < nd; ++d) {
    if (in[d]) {
      new_id[d] = static_cast<Dart>(old_of.size());
      old_of.push_back(d);
    }
  }
  const std::size_t internal_darts = old_of.size();
  std::vector<Dart> bar(nd, kNoDart);
  std::vector<Dart> boundary;  // internal-side boundary darts, in dart order
  for (Dart d = 0; d < nd; ++d) {
    if (in[d] && !in[parent.alpha(d)]) {
      bar[d] = static_cast<Dart>(internal_darts + boundary.size());
      boundary.push_back(d);
    }
  }
  const std::size_t total = internal_darts + boundary.size();

  std::vector<Dart> sigma(total, kNoDart), alpha(total, kNoDart);
  for (Dart d : old_of) {
    Dart a = parent.alpha(d);
    alpha[new_id[d]] = in[a] ? new_id[a] : bar[d];
    if (!in[a]) alpha[bar[d]] = new_id[d];
  }

  // Rotations per vertex copy. Walking the sigma-cycle at a parent vertex, the
  // corner after slot x belongs to an internal face iff alpha(x) is internal;
  // slots with an external corner end a vertex copy. A slot emits the submap
  // dart living there: x itself when internal, otherwise the twin of its
  // internal partner (the slot is the outside of a boundary edge).
  std::vector<bool> visited(nd, false);
  for (Dart start = 0; start < nd; ++start) {
    if (visited[start]) continue;
    std::vector<Dart> cycle;
    for (Dart e = start; !visited[e]; e = parent.sigma(e)) {
      visited[e] = true;
      cycle.push_back(e);
    }
    auto emitted = [&](Dart x) -> Dart {
      if (in[x]) return new_id[x];
      Dart a = parent.alpha(x);
      if (in[a]) return bar[a];
      return kNoDart;
    };
    auto is_break = [&](Dart x) { return !in[parent.alpha(x)]; };

    std::size_t k = cycle.size();
    std::size_t first_break = k;
    for (std::size_t i = 0; i < k; ++i)
      if (is_break(cycle[i])) {
        first_break = i;
        break;
      }
    if (first_break == k) {
      // interior vertex: full rotation survives
      for (std::size_t i = 0; i < k; ++i) {
        Dart cur = emitted(cycle[i]);
        Dart nxt = emitted(cycle[(i + 1) % k]);
        if (cur != kNoDart) sigma[cur] = nxt;
      }
      continue;
    }
    // runs between breaks
    std::vector<Dart> run;
    auto flush = [&]() {
      for (std::size_t i = 0; i < run.size(); ++i)
        sigma[run[i]] = run[(i + 1) % run.size()];
      run.clear();
    };
    for (std::size_t step = 1; step <= k; ++step) {
      Dart x = cycle[(first_break + step) % k];
      Dart e = emitted(x);
      if (e != kNoDart) run.push_back(e);
      if (is_break(x)) flush();
    }
  }

  // root: keep the parent's root when it is internal
  Dart root = 0;
  if (in[parent.root()]) root = new_id[parent.root()];

  BorderedSubmap out;
  out.map = RootedMap::build(std::move(sigma), std::move(alpha), root);
  out.internal_face_count = faces.size();
  out.boundary_length = boundary.size();
  out.genus = out.map.genus();
  out.parent_dart.assign(total, kNoDart);
  for (Dart d : old_of) out.parent_dart[new_id[d]] = d;
  for (Dart d : boundary) out.parent_dart[bar[d]] = d;

  // external faces are exactly the orbits made of twin darts
  std::vector<char> face_has_bar(out.map.face_count(), 0), face_has_int(out.map.face_count(), 0);
  for (Dart d = 0; d < total; ++d) {
    if (d < internal_darts)
      face_has_int[out.map.face_of(d)] = 1;
    else
      face_has_bar[out.map.face_of(d)] = 1;
  }
  for (int f = 0; f < out.map.face_count(); ++f) {
    if (face_has_bar[f] && face_has_int[f])
      throw Error(ErrorCode::NonOrientableInconsistency, "mixed internal/external face in submap");
    if (face_has_bar[f]) {
      out.external_faces.push_back(f);
      std::vector<Dart> walk;
      Dart d0 = out.map.face_rep(f);
      for (Dart e = d0;;) {
        walk.push_back(out.parent_dart[e]);
        e = out.map.phi(e);
        if (e == d0) break;
      }
      out.boundary_walks.push_back(std::move(walk));
    }
  }
  return out;
}

DualGraph dual_graph(const Triangulation& tri) {
  const RootedMap& m = tri.map();
  DualGraph g;
  g.n_faces = m.face_count();
  g.adj.resize(g.n_faces);
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (d < m.alpha(d)) {
      int f1 = m.face_of(d), f2 = m.face_of(m.alpha(d));
      g.edges.push_back({f1, f2});
      g.adj[f1].push_back(f2);
      g.adj[f2].push_back(f1);
    }
  }
  return g;
}

RootedMap tetrahedron_map() {
  // K4 embedded on the sphere: 12 darts, 4 vertex rotations.
  std::vector<Dart> sigma(12), alpha(12);
  auto cyc = [&](std::initializer_list<Dart> c) {
    Dart prev = *std::rbegin(c);
    for (Dart d : c) {
      sigma[prev] = d;
      prev = d;
    }
  };
  cyc({0, 4, 2});
  cyc({6, 8, 1});
  cyc({3, 10, 7});
  cyc({11, 5, 9});
  for (Dart d = 0; d < 12; d += 2) {
    alpha[d] = d + 1;
    alpha[d + 1] = d;
  }
  return RootedMap::build(std::move(sigma), std::move(alpha), 0);
}

RootedMap one_vertex_torus_map() {
  std::vector<Dart> sigma = {1, 2, 3, 4, 5, 0};
  std::vector<Dart> alpha = {3, 4, 5, 0, 1, 2};
  return RootedMap::build(std::move(sigma), std::move(alpha), 0);
}

RootedMap single_edge_map() {
  return RootedMap::build({0, 1}, {1, 0}, 0);
}

}  // namespace genuslab
