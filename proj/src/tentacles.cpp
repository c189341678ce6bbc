#include "genuslab/tentacles.hpp"

#include <algorithm>
#include <numeric>

#include "genuslab/metrics.hpp"

namespace genuslab {

std::size_t PlaneTree::edge_count() const {
  std::size_t total = children.size();
  for (const auto& c : children) total += c.edge_count();
  return total;
}

bool PlaneTree::all_even() const {
  if (children.size() % 2 != 0) return false;
  for (const auto& c : children)
    if (!c.all_even()) return false;
  return true;
}

PlaneTree PlaneTree::mirrored() const {
  PlaneTree out;
  out.children.reserve(children.size());
  for (auto it = children.rbegin(); it != children.rend(); ++it)
    out.children.push_back(it->mirrored());
  return out;
}

std::string PlaneTree::to_string() const {
  std::string s = "(";
  for (const auto& c : children) s += c.to_string();
  s += ")";
  return s;
}

namespace {

void encode_tree(const PlaneTree& t, std::vector<int>& walk) {
  if (t.children.size() % 2 != 0)
    throw Error(ErrorCode::OddChildCount, "vertex with odd child count");
  for (std::size_t i = 0; i < t.children.size() / 2; ++i) walk.push_back(+2);
  walk.push_back(-1);
  for (const auto& c : t.children) encode_tree(c, walk);
}

PlaneTree decode_tree(const std::vector<int>& walk, std::size_t& pos) {
  std::size_t c = 0;
  while (pos < walk.size() && walk[pos] == 2) {
    ++c;
    ++pos;
  }
  if (pos >= walk.size() || walk[pos] != -1)
    throw Error(ErrorCode::MalformedWalk, "expected -1 step at position " + std::to_string(pos));
  ++pos;
  PlaneTree t;
  t.children.resize(2 * c);
  for (std::size_t i = 0; i < 2 * c; ++i) t.children[i] = decode_tree(walk, pos);
  return t;
}

}  // namespace

std::vector<int> lukasiewicz_encode(const std::vector<PlaneTree>& forest) {
  std::vector<int> walk;
  for (const auto& t : forest) encode_tree(t, walk);
  return walk;
}

std::vector<PlaneTree> lukasiewicz_decode(const std::vector<int>& walk) {
  for (int s : walk)
    if (s != 2 && s != -1) throw Error(ErrorCode::MalformedWalk, "steps must be +2 or -1");
  std::vector<PlaneTree> forest;
  std::size_t pos = 0;
  while (pos < walk.size()) forest.push_back(decode_tree(walk, pos));
  return forest;
}

namespace {

// rotation insertion helper on plain arrays: place `d` right after `after`
struct MapBuilder {
  std::vector<Dart> sigma, alpha;

  explicit MapBuilder(const RootedMap& m) : sigma(m.sigma_perm()), alpha(m.alpha_perm()) {}

  Dart add_darts(int count) {
    Dart first = static_cast<Dart>(sigma.size());
    sigma.resize(sigma.size() + count, kNoDart);
    alpha.resize(alpha.size() + count, kNoDart);
    return first;
  }

  void insert_after(Dart after, Dart d) {
    sigma[d] = sigma[after];
    sigma[after] = d;
  }

  void pair(Dart a, Dart b) {
    alpha[a] = b;
    alpha[b] = a;
  }
};

}  // namespace

InsertionResult k_insert(const RootedMap& map, Dart edge_dart, int k) {
  if (edge_dart >= map.dart_count()) throw Error(ErrorCode::InvalidEdge, "dart out of range");
  if (k < 1) throw Error(ErrorCode::InvalidEdge, "k must be >= 1");
  const Dart d0 = edge_dart, d1 = map.alpha(d0);
  MapBuilder b(map);

  // open the edge into a 2-gon: n0 partners d0, n1 partners d1
  const Dart n0 = b.add_darts(2), n1 = n0 + 1;
  b.insert_after(d1, n0);
  b.insert_after(d0, n1);
  b.pair(d0, n0);
  b.pair(d1, n1);
  // bigon face is (n1, n0); fill frame aligned with d0: u = origin(d0)

  // path darts pu_i (u->x_i), px_i, qx_i (x_i->v), qv_i; middles mu_i, mv_i
  std::vector<Dart> pu(k), px(k), qx(k), qv(k), mu(std::max(0, k - 1)), mv(std::max(0, k - 1));
  for (int i = 0; i < k; ++i) {
    Dart base = b.add_darts(4);
    pu[i] = base;
    px[i] = base + 1;
    qx[i] = base + 2;
    qv[i] = base + 3;
    b.pair(pu[i], px[i]);
    b.pair(qx[i], qv[i]);
    b.sigma[px[i]] = qx[i];  // x_i rotation (px_i qx_i)
    b.sigma[qx[i]] = px[i];
  }
  for (int i = 0; i + 1 < k; ++i) {
    Dart base = b.add_darts(2);
    mu[i] = base;
    mv[i] = base + 1;
    b.pair(mu[i], mv[i]);
  }
  // u-side chain between d0 and the bigon side n1:
  //   d0 -> pu_k -> mu_{k-1} -> pu_{k-1} -> ... -> mu_1 -> pu_1 -> n1
  {
    Dart cur = d0;
    const Dart succ = b.sigma[d0];  // = n1 from the opening
    for (int i = k - 1; i >= 0; --i) {
      b.sigma[cur] = pu[i];
      cur = pu[i];
      if (i >= 1) {
        b.sigma[cur] = mu[i - 1];
        cur = mu[i - 1];
      }
    }
    b.sigma[cur] = succ;
  }
  // v-side chain between d1 and the bigon side n0:
  //   d1 -> qv_1 -> mv_1 -> qv_2 -> ... -> mv_{k-1} -> qv_k -> n0
  {
    Dart cur = d1;
    const Dart succ = b.sigma[d1];  // = n0 from the opening
    for (int i = 0; i < k; ++i) {
      b.sigma[cur] = qv[i];
      cur = qv[i];
      if (i + 1 < k) {
        b.sigma[cur] = mv[i];
        cur = mv[i];
      }
    }
    b.sigma[cur] = succ;
  }

  InsertionResult out{RootedMap::build(std::move(b.sigma), std::move(b.alpha), map.root()), {}};
  for (int i = 0; i < k; ++i) {
    out.fat_darts.push_back(pu[i]);
    out.fat_darts.push_back(qx[i]);
  }
  return out;
}

RootedMap attach_tree(const RootedMap& map, Dart edge_dart, const PlaneTree& tree) {
  if (tree.children.size() % 2 != 0) throw Error(ErrorCode::OddChildCount, "root has odd child count");
  if (tree.children.empty()) return map;
  const int k = static_cast<int>(tree.children.size() / 2);
  InsertionResult ins = k_insert(map, edge_dart, k);
  RootedMap m = std::move(ins.map);
  for (std::size_t j = 0; j < tree.children.size(); ++j)
    m = attach_tree(m, ins.fat_darts[j], tree.children[j]);
  return m;
}

SubdivisionResult subdivide_face(const RootedMap& map, Dart face_dart) {
  // face walk f_1..f_m from face_dart; spokes r_i at origin(f_i), t_i at the
  // new center; faces become (f_i, r_{i+1}, t_i)
  std::vector<Dart> walk;
  for (Dart d = face_dart;;) {
    walk.push_back(d);
    d = map.phi(d);
    if (d == face_dart) break;
  }
  const int m = static_cast<int>(walk.size());
  MapBuilder b(map);
  std::vector<Dart> r(m), t(m);
  for (int i = 0; i < m; ++i) {
    Dart base = b.add_darts(2);
    r[i] = base;
    t[i] = base + 1;
    b.pair(r[i], t[i]);
  }
  // r_i goes right after alpha(f_{i-1}) at origin(f_i); equivalently right
  // before f_i, and sigma(alpha(f_{i-1})) == f_i holds in the face walk
  for (int i = 0; i < m; ++i) {
    Dart prev = map.alpha(walk[(i + m - 1) % m]);
    b.insert_after(prev, r[i]);
  }
  // center rotation reversed: sigma(t_i) = t_{i-1}
  for (int i = 0; i < m; ++i) b.sigma[t[i]] = t[(i + m - 1) % m];

  SubdivisionResult out{RootedMap::build(std::move(b.sigma), std::move(b.alpha), map.root()), r};
  return out;
}

RootedMap insert_pattern_a(const RootedMap& map, Dart edge_dart) {
  // 1-insertion, then stellar subdivision of one of its two triangles, then
  // B_4 on the spoke between the two fresh vertices
  InsertionResult ins = k_insert(map, edge_dart, 1);
  const Dart pu = ins.fat_darts[0], qx = ins.fat_darts[1];
  // the face (b1, pu, qx): locate it from pu
  const RootedMap& m1 = ins.map;
  Dart b1 = kNoDart;
  for (Dart d = pu;;) {
    d = m1.phi(d);
    if (d == pu) break;
    if (d != qx) b1 = d;
  }
  SubdivisionResult sub = subdivide_face(m1, b1);  // walk (b1, pu, qx)
  const Dart xy = sub.spokes[2];                   // corner of qx = vertex x, toward center y
  return attach_tree(sub.map, xy, ladder_tree(4));
}

PlaneTree ladder_tree(int ell) {
  if (ell < 1) throw Error(ErrorCode::DomainError, "ladder index must be >= 1");
  PlaneTree t;  // leaf
  int rungs;
  if (ell % 2 == 0) {
    t.children.resize(2);
    rungs = (ell - 2) / 2;
  } else {
    rungs = (ell - 1) / 2;
  }
  for (int i = 0; i < rungs; ++i) {
    PlaneTree next;
    next.children.resize(4);
    next.children[0] = std::move(t);
    t = std::move(next);
  }
  return t;
}

std::vector<int> ladder_word(int ell) { return lukasiewicz_encode({ladder_tree(ell)}); }

// ---------------------------------------------------------------------------
// reduction engine

namespace {

struct Reducer {
  std::vector<Dart> nxt, prv, alf;
  std::vector<char> alive;
  std::vector<int> vert;
  std::vector<int> degree;
  Dart root;
  Dart frozen = kNoDart;  // face containing this dart is never collapsed
  int root_moves = 0;
  std::size_t alive_count;

  // per-dart tentacle bookkeeping; lists valid on rep darts only
  std::vector<std::vector<PlaneTree>> list;
  std::vector<char> is_rep;
  std::vector<std::vector<PlaneTree>> pending;  // bigon pair from R1, size 2 when set

  // scratch face data
  std::vector<int> face_id, face_sz;
  std::vector<Dart> face_min_dart;

  explicit Reducer(const RootedMap& m)
      : nxt(m.sigma_perm()),
        alf(m.alpha_perm()),
        alive(m.dart_count(), 1),
        vert(m.dart_count()),
        degree(m.vertex_count(), 0),
        root(m.root()),
        alive_count(m.dart_count()),
        list(m.dart_count()),
        is_rep(m.dart_count(), 0),
        pending(m.dart_count()) {
    prv.resize(nxt.size());
    for (Dart d = 0; d < nxt.size(); ++d) prv[nxt[d]] = d;
    for (Dart d = 0; d < nxt.size(); ++d) {
      vert[d] = m.vertex_of(d);
      ++degree[vert[d]];
    }
    for (Dart d = 0; d < nxt.size(); ++d)
      if (d < alf[d]) is_rep[d] = 1;
    // vertex degree counts darts; edges at a vertex = darts there
  }

  Dart phi(Dart d) const { return nxt[alf[d]]; }

  std::vector<PlaneTree> list_along(Dart d) const {
    if (is_rep[d]) return list[d];
    std::vector<PlaneTree> out;
    const auto& src = list[alf[d]];
    out.reserve(src.size());
    for (auto it = src.rbegin(); it != src.rend(); ++it) out.push_back(it->mirrored());
    return out;
  }

  void set_list(Dart d, std::vector<PlaneTree> l) {
    list[d] = std::move(l);
    list[alf[d]].clear();
    is_rep[d] = 1;
    is_rep[alf[d]] = 0;
  }

  void splice_out(Dart d) {
    if (nxt[d] != d) {
      nxt[prv[d]] = nxt[d];
      prv[nxt[d]] = prv[d];
    }
    alive[d] = 0;
    --alive_count;
    --degree[vert[d]];
  }

  void recompute_faces() {
    face_id.assign(nxt.size(), -1);
    face_sz.clear();
    face_min_dart.clear();
    int nf = 0;
    for (Dart d = 0; d < nxt.size(); ++d) {
      if (!alive[d] || face_id[d] >= 0) continue;
      int sz = 0;
      Dart mn = d;
      for (Dart e = d; face_id[e] < 0; e = phi(e)) {
        face_id[e] = nf;
        mn = std::min(mn, e);
        ++sz;
      }
      face_sz.push_back(sz);
      face_min_dart.push_back(mn);
      ++nf;
    }
  }

  struct Event {
    bool is_r2;
    Dart key;  // R1: dart t1 at the vertex; R2: one bigon dart
  };

  std::vector<Event> applicable() {
    recompute_faces();
    std::vector<Event> events;
    std::vector<char> vertex_seen(degree.size(), 0);
    for (Dart d = 0; d < nxt.size(); ++d) {
      if (!alive[d]) continue;
      // R2: bigon with distinct side edges, not the frozen boundary face
      int f = face_id[d];
      if (face_sz[f] == 2 && face_min_dart[f] == d && alf[d] != phi(d) &&
          (frozen == kNoDart || f != face_id[frozen]))
        events.push_back({true, d});
      // R1 at this dart's vertex
      int w = vert[d];
      if (!vertex_seen[w] && degree[w] == 2) {
        vertex_seen[w] = 1;
        Dart t1 = d, t2 = nxt[d];
        if (t2 != t1 && alf[t1] != t2) {
          int f1 = face_id[t1], f2 = face_id[t2];
          if (f1 != f2 && face_sz[f1] == 3 && face_sz[f2] == 3) events.push_back({false, std::min(t1, t2)});
        }
      }
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
      return a.key != b.key ? a.key < b.key : a.is_r2 < b.is_r2;
    });
    return events;
  }

  void apply_r1(Dart t1) {
    Dart t2 = nxt[t1];
    Dart p1 = alf[t1], p2 = alf[t2];
    Dart s_a = phi(t1);  // = nxt[p1]
    Dart s_b = phi(t2);  // = nxt[p2]

    PlaneTree tree1, tree2;
    tree1.children = list_along(p1);  // e1 read u -> w
    tree2.children = list_along(t2);  // e2 read w -> v

    const bool root_hit = (root == t1 || root == t2 || root == p1 || root == p2);
    splice_out(p1);
    splice_out(p2);
    splice_out(t1);
    splice_out(t2);
    list[t1].clear();
    list[t2].clear();
    list[p1].clear();
    list[p2].clear();

    pending[s_a] = {std::move(tree1), std::move(tree2)};
    if (root_hit) {
      root = s_a;
      ++root_moves;
    }
  }

  void apply_r2(Dart x) {
    Dart y = phi(x);
    Dart s_a = x, s_b = y;
    if (pending[y].size() == 2) std::swap(s_a, s_b);
    Dart o_a = alf[s_a], o_b = alf[s_b];

    std::vector<PlaneTree> merged = list_along(s_a);
    for (auto& t : pending[s_a]) merged.push_back(std::move(t));
    pending[s_a].clear();
    auto right = list_along(o_b);
    for (auto& t : right) merged.push_back(std::move(t));

    const Dart old_root = root;
    splice_out(s_a);
    splice_out(s_b);
    list[s_a].clear();
    list[s_b].clear();
    is_rep[s_a] = is_rep[s_b] = 0;
    alf[o_a] = o_b;
    alf[o_b] = o_a;
    set_list(o_b, std::move(merged));
    if (old_root == s_a) root = o_b;
    if (old_root == s_b) root = o_a;
  }

  /// true when some reduction was applied
  bool step(SplitMix64* rng) {
    auto events = applicable();
    if (events.empty()) return false;
    const Event& e = rng ? events[rng->next_below(events.size())] : events.front();
    if (e.is_r2)
      apply_r2(e.key);
    else
      apply_r1(e.key);
    return true;
  }

  void run(SplitMix64* rng) {
    while (step(rng)) {
    }
  }
};

CoreDecomposition decompose_impl(const Triangulation& t, SplitMix64* rng) {
  Reducer red(t.map());
  red.run(rng);

  CoreDecomposition out;
  out.root_displacement = red.root_moves;
  if (red.alive_count == 2) {
    // total collapse: the whole map was tentacle-like
    out.degenerate = true;
    out.core = single_edge_map();
    Tentacle tent;
    tent.core_dart = 0;
    tent.tree.children = red.list_along(red.root);
    // a blocked final merge leaves its pair in pending on one side
    if (red.pending[red.root].size() == 2) {
      for (auto& t2 : red.pending[red.root]) tent.tree.children.push_back(std::move(t2));
    } else if (red.pending[red.alf[red.root]].size() == 2) {
      const auto& p = red.pending[red.alf[red.root]];
      tent.tree.children.push_back(p[1].mirrored());
      tent.tree.children.push_back(p[0].mirrored());
    }
    tent.face_count = tent.tree.edge_count();
    out.tentacle_faces = tent.face_count;
    out.tentacle_count = 1;
    out.tentacles.push_back(std::move(tent));
    return out;
  }

  // compact alive darts into a fresh map
  std::vector<Dart> new_id(red.nxt.size(), kNoDart);
  std::vector<Dart> old_of;
  for (Dart d = 0; d < red.nxt.size(); ++d) {
    if (red.alive[d]) {
      new_id[d] = static_cast<Dart>(old_of.size());
      old_of.push_back(d);
    }
  }
  std::vector<Dart> sigma(old_of.size()), alpha(old_of.size());
  for (Dart d : old_of) {
    sigma[new_id[d]] = new_id[red.nxt[d]];
    alpha[new_id[d]] = new_id[red.alf[d]];
  }
  out.core = RootedMap::build(std::move(sigma), std::move(alpha), new_id[red.root]);

  for (Dart d : old_of) {
    if (!red.is_rep[d]) continue;
    Tentacle tent;
    tent.core_dart = new_id[d];
    tent.tree.children = red.list[d];
    tent.face_count = tent.tree.edge_count();
    out.tentacle_faces += tent.face_count;
    out.tentacles.push_back(std::move(tent));
  }
  out.tentacle_count = out.tentacles.size();
  return out;
}

}  // namespace

CoreDecomposition core_decomposition(const Triangulation& t) { return decompose_impl(t, nullptr); }

CoreDecomposition core_decomposition_randomized(const Triangulation& t, SplitMix64& rng) {
  return decompose_impl(t, &rng);
}

RootedMap tree_to_tentacle(const PlaneTree& tree) {
  if (!tree.all_even()) throw Error(ErrorCode::OddChildCount, "not an even tree");
  return attach_tree(single_edge_map(), 0, tree);
}

PlaneTree tentacle_to_tree(const RootedMap& tentacle_map) {
  // the root dart must lie on the boundary 2-gon (as tree_to_tentacle
  // guarantees); that face is frozen so the interior collapses onto the base
  // edge, which survives with the root dart on it
  Reducer red(tentacle_map);
  red.frozen = tentacle_map.root();
  red.run(nullptr);
  if (red.alive_count != 2 || !red.alive[red.root])
    throw Error(ErrorCode::DomainError, "map does not reduce to its boundary 2-gon");
  PlaneTree t;
  t.children = red.list_along(red.root);
  return t;
}

TentacleStats tentacle_stats(const Triangulation& t) {
  CoreDecomposition dec = core_decomposition(t);
  TentacleStats st;
  st.degenerate = dec.degenerate;
  st.tentacle_count = dec.tentacle_count;
  st.tentacle_faces = dec.tentacle_faces;
  if (dec.degenerate) return st;

  // ladder height from the tree words
  for (std::size_t ti = 0; ti < dec.tentacles.size(); ++ti) {
    const auto& tent = dec.tentacles[ti];
    if (tent.face_count == 0) continue;
    auto word = lukasiewicz_encode({tent.tree});
    const int cap = static_cast<int>(tent.face_count / 2 + 1);
    for (int ell = cap; ell >= 2; --ell) {
      if (ell <= st.ell_max) break;
      auto w = ladder_word(ell);
      if (std::search(word.begin(), word.end(), w.begin(), w.end()) != word.end()) {
        st.ell_max = ell;
        st.ell_witness = static_cast<int>(ti);
        break;
      }
    }
  }

  // rebuild the map tentacle by tentacle to measure heights
  RootedMap m = dec.core;
  struct Range {
    std::size_t begin, end;
    int base_u, base_v;
  };
  std::vector<Range> ranges;
  for (const auto& tent : dec.tentacles) {
    std::size_t before = m.dart_count();
    RootedMap next = attach_tree(m, tent.core_dart, tent.tree);
    Range r;
    r.begin = before;
    r.end = next.dart_count();
    r.base_u = next.vertex_of(tent.core_dart);
    r.base_v = next.vertex_of(next.alpha(tent.core_dart));
    m = std::move(next);
    ranges.push_back(r);
  }
  std::vector<int> height(m.dart_count(), 0);
  const VertexGraph g = vertex_graph(m);
  for (const Range& r : ranges) {
    if (r.begin == r.end) continue;
    auto du = bfs_distances(g, r.base_u);
    auto dv = r.base_v == r.base_u ? du : bfs_distances(g, r.base_v);
    for (std::size_t d = r.begin; d < r.end; ++d) {
      int hv = std::min(du[m.vertex_of(d)], dv[m.vertex_of(d)]);
      int hw = std::min(du[m.vertex_of(m.alpha(d))], dv[m.vertex_of(m.alpha(d))]);
      height[d] = std::min(hv, hw);
    }
  }
  int hmax = 0;
  for (int h : height) hmax = std::max(hmax, h);
  st.height_histogram.assign(hmax + 1, 0);
  for (int h : height) ++st.height_histogram[h];
  return st;
}

}  // namespace genuslab
