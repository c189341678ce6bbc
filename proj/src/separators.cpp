#include "genuslab/separators.hpp"

#include <algorithm>
#include <numeric>

#include "genuslab/metrics.hpp"

namespace genuslab {

namespace {

using Mask = std::uint32_t;

int popcount(Mask m) { return __builtin_popcount(m); }

// dual adjacency as neighbor bitmask per face (multiplicity squashed)
std::vector<Mask> dual_neighbor_masks(const Triangulation& t) {
  const RootedMap& m = t.map();
  std::vector<Mask> nb(m.face_count(), 0);
  for (Dart d = 0; d < m.dart_count(); ++d) {
    int f = m.face_of(d), g = m.face_of(m.alpha(d));
    if (f != g) {
      nb[f] |= Mask(1) << g;
      nb[g] |= Mask(1) << f;
    }
  }
  return nb;
}

bool mask_connected(Mask set, const std::vector<Mask>& nb) {
  if (set == 0) return false;
  Mask seen = set & (~set + 1);  // lowest bit
  for (;;) {
    Mask grow = seen;
    Mask frontier = seen;
    while (frontier) {
      int f = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      grow |= nb[f] & set;
    }
    if (grow == seen) break;
    seen = grow;
  }
  return seen == set;
}

int cut_size(Mask set, const Triangulation& t) {
  const RootedMap& m = t.map();
  int cut = 0;
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (d >= m.alpha(d)) continue;
    bool a = set >> m.face_of(d) & 1, b = set >> m.face_of(m.alpha(d)) & 1;
    cut += a != b;
  }
  return cut;
}

std::vector<int> mask_faces(Mask set) {
  std::vector<int> out;
  while (set) {
    out.push_back(__builtin_ctz(set));
    set &= set - 1;
  }
  return out;
}

struct Candidate {
  int cut;
  Mask mask;
  bool operator<(const Candidate& o) const { return cut != o.cut ? cut < o.cut : mask < o.mask; }
};

// all face bipartitions with both sides connected, small side recorded
std::vector<std::vector<Candidate>> exact_separations(const Triangulation& t, bool parallel) {
  const int F = t.map().face_count();
  const auto nb = dual_neighbor_masks(t);
  const Mask full = F == 32 ? ~Mask(0) : (Mask(1) << F) - 1;
  const int half = F / 2;
  std::vector<std::vector<Candidate>> by_k1(half + 1);

  const long total = static_cast<long>(full);
#pragma omp parallel if (parallel)
  {
    std::vector<std::vector<Candidate>> local(half + 1);
#pragma omp for schedule(dynamic, 2048)
    for (long v = 1; v < total; ++v) {
      Mask set = static_cast<Mask>(v);
      int k1 = popcount(set);
      if (k1 > half) continue;
      if (k1 == half && !(set & 1)) continue;  // equal split counted once, side of face 0
      if (!mask_connected(set, nb) || !mask_connected(full & ~set, nb)) continue;
      local[k1].push_back({cut_size(set, t), set});
    }
#pragma omp critical
    for (int k = 1; k <= half; ++k)
      by_k1[k].insert(by_k1[k].end(), local[k].begin(), local[k].end());
  }
  for (auto& v : by_k1) std::sort(v.begin(), v.end());
  return by_k1;
}

IsoperimetricProfile profile_from_candidates(const Triangulation& t,
                                             std::vector<std::vector<Candidate>> by_k1,
                                             bool exact) {
  const int half = t.map().face_count() / 2;
  IsoperimetricProfile p;
  p.exact = exact;
  p.entries.resize(half);
  for (int k1 = 1; k1 <= half; ++k1) {
    ProfileEntry& e = p.entries[k1 - 1];
    e.k1 = k1;
    for (const Candidate& c : by_k1[k1]) {
      if (e.cut_any < 0) {
        e.cut_any = c.cut;
        e.witness_any = mask_faces(c.mask);
      }
      if (e.cut_multicurve < 0) {
        auto faces = mask_faces(c.mask);
        auto mc = multicurve_validate(t, cut_edge_set(t, faces));
        if (mc.valid) {
          e.cut_multicurve = c.cut;
          e.witness_multicurve = std::move(faces);
        }
      }
      if (e.cut_any >= 0 && e.cut_multicurve >= 0) break;
    }
  }
  return p;
}

// Karger-style contraction on the dual multigraph
struct ContractionRun {
  const Triangulation& t;
  std::vector<int> parent;

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // returns (side mask of faces merged into one endpoint, cut size)
  std::pair<Mask, int> run(SplitMix64& rng) {
    const RootedMap& m = t.map();
    const int F = m.face_count();
    std::vector<std::array<int, 2>> edges;
    for (Dart d = 0; d < m.dart_count(); ++d)
      if (d < m.alpha(d)) edges.push_back({m.face_of(d), m.face_of(m.alpha(d))});
    parent.resize(F);
    std::iota(parent.begin(), parent.end(), 0);
    int components = F;
    // random edge order
    for (std::size_t i = edges.size(); i > 1; --i)
      std::swap(edges[i - 1], edges[rng.next_below(i)]);
    for (const auto& e : edges) {
      if (components == 2) break;
      int a = find(e[0]), b = find(e[1]);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    Mask side = 0;
    int rep = find(0);
    for (int f = 0; f < F; ++f)
      if (find(f) == rep) side |= Mask(1) << f;
    int cut = 0;
    for (const auto& e : edges) cut += ((side >> e[0] & 1) != (side >> e[1] & 1));
    return {side, cut};
  }
};

std::vector<std::vector<Candidate>> heuristic_separations(const Triangulation& t,
                                                          std::uint64_t seed) {
  const int F = t.map().face_count();
  const int half = F / 2;
  const auto nb = dual_neighbor_masks(t);
  const Mask full = F == 32 ? ~Mask(0) : (Mask(1) << F) - 1;
  std::vector<std::vector<Candidate>> by_k1(half + 1);
  auto offer = [&](Mask set, int cut) {
    int k1 = popcount(set);
    if (k1 > half) {
      set = full & ~set;
      k1 = F - k1;
    }
    if (k1 < 1 || k1 > half) return;
    if (!mask_connected(set, nb) || !mask_connected(full & ~set, nb)) return;
    by_k1[k1].push_back({cut, set});
  };

  SplitMix64 rng(seed);
  ContractionRun karger{t, {}};
  const int runs = 200 * t.n();
  for (int i = 0; i < runs; ++i) {
    auto [side, cut] = karger.run(rng);
    offer(side, cut);
  }
  // ball boundaries as seeds
  const RootedMap& m = t.map();
  for (int v = 0; v < m.vertex_count(); ++v) {
    for (int r = 1;; ++r) {
      auto faces = ball_faces(t, v, r);
      if (static_cast<int>(faces.size()) == F) break;
      Mask set = 0;
      for (int f : faces) set |= Mask(1) << f;
      offer(set, cut_size(set, t));
    }
  }
  for (auto& v : by_k1) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(),
                        [](const Candidate& a, const Candidate& b) { return a.mask == b.mask; }),
            v.end());
    std::sort(v.begin(), v.end());
  }
  return by_k1;
}

}  // namespace

std::vector<Dart> cut_edge_set(const Triangulation& t, const std::vector<int>& faces) {
  const RootedMap& m = t.map();
  std::vector<char> in(m.face_count(), 0);
  for (int f : faces) in[f] = 1;
  std::vector<Dart> edges;
  for (Dart d = 0; d < m.dart_count(); ++d)
    if (d < m.alpha(d) && in[m.face_of(d)] != in[m.face_of(m.alpha(d))]) edges.push_back(d);
  return edges;
}

IsoperimetricProfile isoperimetric_profile(const Triangulation& t, int exact_limit,
                                           std::uint64_t seed) {
  const int F = t.map().face_count();
  if (F <= exact_limit && F <= 31) return profile_from_candidates(t, exact_separations(t, true), true);
  return profile_from_candidates(t, heuristic_separations(t, seed), false);
}

IsoperimetricProfile isoperimetric_profile_serial(const Triangulation& t, int exact_limit,
                                                  std::uint64_t seed) {
  const int F = t.map().face_count();
  if (F <= exact_limit && F <= 31) return profile_from_candidates(t, exact_separations(t, false), true);
  return profile_from_candidates(t, heuristic_separations(t, seed), false);
}

namespace {

// ---- multicurve certification ----

struct VertexEnds {
  int vertex;
  std::vector<Dart> ends;  // cut darts leaving this vertex, in sigma cyclic order
};

struct PairingSearch {
  const RootedMap& m;
  std::vector<VertexEnds> verts;
  // pairing[dart] = partner dart at the same vertex
  std::vector<Dart> mate;
  bool found_valid = false;
  bool found_simple = false;
  std::vector<std::vector<Dart>> best_cycles;

  explicit PairingSearch(const RootedMap& map) : m(map), mate(map.dart_count(), kNoDart) {}

  void search(std::size_t vi) {
    if (found_valid) return;
    if (vi == verts.size()) {
      evaluate();
      return;
    }
    pair_vertex(verts[vi].ends, 0, vi);
  }

  void pair_vertex(const std::vector<Dart>& ends, std::size_t next, std::size_t vi) {
    if (found_valid) return;
    std::size_t i = next;
    while (i < ends.size() && mate[ends[i]] != kNoDart) ++i;
    if (i == ends.size()) {
      search(vi + 1);
      return;
    }
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (mate[ends[j]] != kNoDart) continue;
      mate[ends[i]] = ends[j];
      mate[ends[j]] = ends[i];
      pair_vertex(ends, i + 1, vi);
      mate[ends[i]] = kNoDart;
      mate[ends[j]] = kNoDart;
      if (found_valid) return;
    }
  }

  void evaluate() {
    // trace walks: leave v by dart d, arrive at head(d), continue with the
    // mate of the arrival-side dart alpha(d)
    std::vector<char> used(m.dart_count(), 0);
    std::vector<std::vector<Dart>> cycles;
    bool simple = true;
    for (const auto& ve : verts) {
      for (Dart start : ve.ends) {
        if (used[start]) continue;
        std::vector<Dart> cyc;
        std::vector<int> visited;
        Dart d = start;
        do {
          used[d] = 1;
          used[m.alpha(d)] = 1;  // both sides of the edge consumed
          cyc.push_back(d);
          visited.push_back(m.vertex_of(d));
          d = mate[m.alpha(d)];
        } while (d != start && d != kNoDart);
        if (d == kNoDart) return;  // inconsistent pairing
        std::sort(visited.begin(), visited.end());
        if (std::adjacent_find(visited.begin(), visited.end()) != visited.end()) simple = false;
        cycles.push_back(std::move(cyc));
      }
    }
    if (!simple) return;
    found_simple = true;
    if (crossing_free(cycles)) {
      found_valid = true;
      best_cycles = cycles;
    }
  }

  bool crossing_free(const std::vector<std::vector<Dart>>& cycles) const {
    // cycle index per cut dart
    std::vector<int> owner(m.dart_count(), -1);
    for (std::size_t c = 0; c < cycles.size(); ++c)
      for (Dart d : cycles[c]) owner[d] = owner[m.alpha(d)] = static_cast<int>(c);
    for (const auto& ve : verts) {
      // owners of the ends in sigma cyclic order; two cycles cross iff their
      // ends interleave a b a b
      std::vector<int> seq;
      for (Dart d : ve.ends) seq.push_back(owner[d]);
      const std::size_t k = seq.size();
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
          for (std::size_t l = j + 1; l < k; ++l)
            for (std::size_t o = l + 1; o < k; ++o)
              if (seq[i] == seq[l] && seq[j] == seq[o] && seq[i] != seq[j]) return false;
    }
    return true;
  }
};

}  // namespace

MulticurveCandidate multicurve_validate(const Triangulation& t, const std::vector<Dart>& edges) {
  const RootedMap& m = t.map();
  if (edges.empty()) throw Error(ErrorCode::NotAClosedUnion, "empty edge set");
  MulticurveCandidate out;
  std::vector<char> is_cut(m.dart_count(), 0);
  for (Dart d : edges) {
    Dart c = std::min(d, m.alpha(d));
    if (is_cut[c]) continue;
    is_cut[c] = is_cut[m.alpha(c)] = 1;
    out.edges.push_back(c);
  }
  std::sort(out.edges.begin(), out.edges.end());

  PairingSearch ps(m);
  for (int v = 0; v < m.vertex_count(); ++v) {
    VertexEnds ve;
    ve.vertex = v;
    Dart rep = m.vertex_rep(v);
    Dart d = rep;
    do {
      if (is_cut[d]) ve.ends.push_back(d);
      d = m.sigma(d);
    } while (d != rep);
    if (ve.ends.empty()) continue;
    if (ve.ends.size() % 2 != 0)
      throw Error(ErrorCode::NotAClosedUnion,
                  "odd cut degree at vertex " + std::to_string(v));
    ps.verts.push_back(std::move(ve));
  }

  ps.search(0);
  if (ps.found_valid) {
    out.valid = true;
    out.cycles = ps.best_cycles;
    for (const auto& c : out.cycles) out.lengths.push_back(static_cast<int>(c.size()));
  } else {
    out.valid = false;
    out.failure = ps.found_simple ? "crossing" : "cycle not simple";
  }
  return out;
}

// ---- Cheeger ----

namespace {

struct EdgeList {
  std::vector<std::array<int, 2>> edges;  // endpoints per map edge, loops included
};

EdgeList vertex_edges(const Triangulation& t) {
  const RootedMap& m = t.map();
  EdgeList el;
  for (Dart d = 0; d < m.dart_count(); ++d)
    if (d < m.alpha(d)) el.edges.push_back({m.vertex_of(d), m.vertex_of(m.alpha(d))});
  return el;
}

std::vector<Mask> vertex_neighbor_masks(const Triangulation& t) {
  const RootedMap& m = t.map();
  std::vector<Mask> nb(m.vertex_count(), 0);
  for (Dart d = 0; d < m.dart_count(); ++d) {
    int a = m.vertex_of(d), b = m.vertex_of(m.alpha(d));
    if (a != b) {
      nb[a] |= Mask(1) << b;
      nb[b] |= Mask(1) << a;
    }
  }
  return nb;
}

long long boundary_of(Mask set, const EdgeList& el) {
  long long cut = 0;
  for (const auto& e : el.edges) cut += ((set >> e[0] & 1) != (set >> e[1] & 1));
  return cut;
}

// a/b < c/d for nonneg fractions
bool ratio_less(long long a, long long b, long long c, long long d) { return a * d < c * b; }

CheegerResult cheeger_exact(const Triangulation& t, bool parallel) {
  const int V = t.map().vertex_count();
  CheegerResult best;
  best.exact = true;
  if (V <= 1) {
    best.infinite = true;
    return best;
  }
  const EdgeList el = vertex_edges(t);
  const auto nb = vertex_neighbor_masks(t);
  const long total = (V >= 31) ? 0x7fffffffL : ((1L << V) - 1);
  const int half = V / 2;

  Mask best_mask = 0;
  long long bb = 1, bs = 0;  // sentinel infinity as 1/0
#pragma omp parallel if (parallel)
  {
    long long lb = 1, ls = 0;
    Mask lmask = 0;
#pragma omp for schedule(static)
    for (long v = 1; v <= total; ++v) {
      Mask set = static_cast<Mask>(v);
      int size = popcount(set);
      if (size > half) continue;
      if (!mask_connected(set, nb)) continue;
      long long cut = boundary_of(set, el);
      if (ls == 0 || ratio_less(cut, size, lb, ls) ||
          (cut * ls == lb * size && set < lmask)) {
        lb = cut;
        ls = size;
        lmask = set;
      }
    }
#pragma omp critical
    {
      if (ls != 0 && (bs == 0 || ratio_less(lb, ls, bb, bs) || (lb * bs == bb * ls && lmask < best_mask))) {
        bb = lb;
        bs = ls;
        best_mask = lmask;
      }
    }
  }
  if (bs == 0) {
    best.infinite = true;
    return best;
  }
  best.boundary = bb;
  best.size = bs;
  for (int v = 0; v < V; ++v)
    if (best_mask >> v & 1) best.witness.push_back(v);
  return best;
}

CheegerResult cheeger_heuristic(const Triangulation& t) {
  const RootedMap& m = t.map();
  const int V = m.vertex_count();
  CheegerResult best;
  best.exact = false;
  if (V <= 1) {
    best.infinite = true;
    return best;
  }
  const VertexGraph g = vertex_graph(m);
  // adjacency with multiplicity for incremental cut updates
  std::vector<std::vector<int>> inc(V);
  const EdgeList el = vertex_edges(t);
  for (std::size_t i = 0; i < el.edges.size(); ++i) {
    auto [a, b] = el.edges[i];
    if (a != b) {
      inc[a].push_back(b);
      inc[b].push_back(a);
    }
  }
  long long bb = 1, bs = 0;
  std::vector<int> best_set;
  for (int src = 0; src < V; ++src) {
    auto dist = bfs_distances(g, src);
    std::vector<int> order(V);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
    std::vector<char> in(V, 0);
    long long cut = 0;
    for (int k = 0; k < V / 2; ++k) {
      int v = order[k];
      for (int w : inc[v]) cut += in[w] ? -1 : 1;
      in[v] = 1;
      if (bs == 0 || ratio_less(cut, k + 1, bb, bs)) {
        bb = cut;
        bs = k + 1;
        best_set.assign(order.begin(), order.begin() + k + 1);
      }
    }
  }
  best.boundary = bb;
  best.size = bs;
  best.witness = best_set;
  std::sort(best.witness.begin(), best.witness.end());
  return best;
}

}  // namespace

CheegerResult cheeger(const Triangulation& t, int exact_limit) {
  const int V = t.map().vertex_count();
  if (V <= exact_limit && V <= 30) return cheeger_exact(t, true);
  return cheeger_heuristic(t);
}

CheegerResult cheeger_serial(const Triangulation& t, int exact_limit) {
  const int V = t.map().vertex_count();
  if (V <= exact_limit && V <= 30) return cheeger_exact(t, false);
  return cheeger_heuristic(t);
}

IsolatedFacesResult isolated_faces(const Triangulation& t, double eps, int exact_limit) {
  if (!(eps > 0)) throw Error(ErrorCode::DomainError, "eps must be positive");
  const int F = t.map().face_count();
  const int n = t.n();
  int sqrt_ceil = 0;
  while (sqrt_ceil * sqrt_ceil < n) ++sqrt_ceil;

  IsolatedFacesResult out;
  out.exact = F <= exact_limit && F <= 31;
  auto by_k1 = out.exact ? exact_separations(t, true) : heuristic_separations(t, 1);
  std::vector<char> marked(F, 0);
  const Mask full = F == 32 ? ~Mask(0) : (Mask(1) << F) - 1;
  for (const auto& bucket : by_k1) {
    for (const Candidate& c : bucket) {
      const int ka = popcount(c.mask), kb = F - ka;
      const int len = c.cut;
      const bool mark_a = kb >= sqrt_ceil && len <= eps * std::min(ka, kb);
      const bool mark_b = ka >= sqrt_ceil && len <= eps * std::min(ka, kb);
      if (!mark_a && !mark_b) continue;
      auto mc = multicurve_validate(t, cut_edge_set(t, mask_faces(c.mask)));
      if (!mc.valid) continue;
      if (mark_a)
        for (int f : mask_faces(c.mask)) marked[f] = 1;
      if (mark_b)
        for (int f : mask_faces(full & ~c.mask)) marked[f] = 1;
    }
  }
  for (int f = 0; f < F; ++f)
    if (marked[f]) out.faces.push_back(f);
  out.count = static_cast<int>(out.faces.size());
  return out;
}

}  // namespace genuslab
