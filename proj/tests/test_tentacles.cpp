#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "genuslab/census.hpp"
#include "genuslab/sampler.hpp"
#include "genuslab/tentacles.hpp"

using namespace genuslab;

namespace {

PlaneTree leaf() { return PlaneTree{}; }

PlaneTree node(std::vector<PlaneTree> children) {
  PlaneTree t;
  t.children = std::move(children);
  return t;
}

PlaneTree random_even_tree(SplitMix64& rng, int budget) {
  PlaneTree t;
  if (budget < 2 || rng.next_below(3) == 0) return t;
  int c = 1 + static_cast<int>(rng.next_below(budget / 2));
  c = std::min(c, 3);
  int remaining = budget - 2 * c;
  for (int i = 0; i < 2 * c; ++i) {
    int share = remaining / (2 * c - i);
    PlaneTree child = random_even_tree(rng, share);
    remaining -= static_cast<int>(child.edge_count());
    t.children.push_back(std::move(child));
  }
  return t;
}

// direct recursion: number of even plane trees with e edges
long long even_tree_count(int e, std::map<int, long long>& memo) {
  if (e == 0) return 1;
  if (e % 2 != 0) return 0;
  auto it = memo.find(e);
  if (it != memo.end()) return it->second;
  // root with 2c children splitting e - 2c remaining edges
  long long total = 0;
  for (int c = 1; 2 * c <= e; ++c) {
    // distribute e - 2c edges over 2c ordered subtrees
    std::vector<long long> ways(e - 2 * c + 1, 0);
    ways[0] = 1;
    for (int slot = 0; slot < 2 * c; ++slot) {
      std::vector<long long> next(e - 2 * c + 1, 0);
      for (int used = 0; used <= e - 2 * c; ++used) {
        if (!ways[used]) continue;
        for (int take = 0; used + take <= e - 2 * c; take += 2)
          next[used + take] += ways[used] * even_tree_count(take, memo);
      }
      ways = std::move(next);
    }
    total += ways[e - 2 * c];
  }
  memo[e] = total;
  return total;
}

// walk route: walks of steps +2/-1, length 1+3m, ending at -1, staying >= 0
// before the last step, with m up-steps
long long walk_count(int m) {
  const int len = 1 + 3 * m;
  std::map<std::pair<int, int>, long long> dp;  // (pos, height) -> count
  dp[{0, 0}] = 1;
  for (int pos = 0; pos < len; ++pos) {
    std::map<std::pair<int, int>, long long> next;
    for (const auto& [key, cnt] : dp) {
      if (key.first != pos) {
        next[key] += cnt;
        continue;
      }
      int h = key.second;
      // +2 step
      next[{pos + 1, h + 2}] += cnt;
      // -1 step, must stay >= 0 before the end
      if (h - 1 >= 0 || pos + 1 == len) next[{pos + 1, h - 1}] += cnt;
    }
    dp = std::move(next);
  }
  return dp.count({len, -1}) ? dp[{len, -1}] : 0;
}

std::string normalized(const PlaneTree& t) {
  return std::min(t.to_string(), t.mirrored().to_string());
}

CanonicalForm min_canonical(const RootedMap& m) {
  CanonicalForm best = m.canonical_form();
  for (Dart d = 1; d < m.dart_count(); ++d) {
    CanonicalForm cf = m.rerooted(d).canonical_form();
    if (cf < best) best = cf;
  }
  return best;
}

}  // namespace

TEST_CASE("k-insertion adds 2k faces and keeps the genus") {
  for (const RootedMap& base : {tetrahedron_map(), one_vertex_torus_map()}) {
    for (int k = 1; k <= 3; ++k) {
      auto res = k_insert(base, 2, k);
      CHECK(res.map.face_count() == base.face_count() + 2 * k);
      CHECK(res.map.genus() == base.genus());
      CHECK(res.map.is_triangulation());
      CHECK(res.fat_darts.size() == static_cast<std::size_t>(2 * k));
    }
  }
}

TEST_CASE("1-insertion on a tetrahedron edge gives a 6-face planar triangulation") {
  auto res = k_insert(tetrahedron_map(), 0, 1);
  CHECK(res.map.face_count() == 6);
  CHECK(res.map.genus() == 0);
  CHECK(res.map.is_triangulation());
}

TEST_CASE("tetrahedron core decomposition: all six edges are trivial tentacles") {
  auto dec = core_decomposition(Triangulation::from_map(tetrahedron_map()));
  CHECK(!dec.degenerate);
  CHECK(dec.tentacle_count == 6);
  CHECK(dec.tentacle_faces == 0);
  CHECK(dec.core.canonical_form() == tetrahedron_map().canonical_form());
  for (const auto& tent : dec.tentacles) CHECK(tent.face_count == 0);
}

TEST_CASE("insertion then decomposition recovers the tetrahedron and the tree") {
  SplitMix64 rng(17);
  for (int iter = 0; iter < 40; ++iter) {
    PlaneTree tree = random_even_tree(rng, 12);
    if (tree.edge_count() == 0) continue;
    // attach away from the root dart 0 so the root survives untouched
    RootedMap m = attach_tree(tetrahedron_map(), 2, tree);
    CHECK(m.face_count() == 4 + tree.edge_count());
    auto dec = core_decomposition(Triangulation::from_map(m));
    CHECK(!dec.degenerate);
    CHECK(dec.core.canonical_form() == tetrahedron_map().canonical_form());
    CHECK(dec.tentacle_faces == tree.edge_count());
    bool found = false;
    for (const auto& tent : dec.tentacles)
      if (tent.face_count == tree.edge_count())
        found = normalized(tent.tree) == normalized(tree);
    CHECK(found);
  }
}

TEST_CASE("nested insertions: M_n equals the number of inserted faces") {
  RootedMap m = tetrahedron_map();
  std::size_t inserted = 0;
  auto r1 = k_insert(m, 2, 2);
  inserted += 4;
  auto r2 = k_insert(r1.map, r1.fat_darts[1], 1);
  inserted += 2;
  auto r3 = k_insert(r2.map, r2.fat_darts[0], 3);
  inserted += 6;
  auto dec = core_decomposition(Triangulation::from_map(r3.map));
  CHECK(dec.tentacle_faces == inserted);
  CHECK(dec.core.face_count() == 4);
}

TEST_CASE("tree_to_tentacle: counts and the unique two-edge tree") {
  PlaneTree two = node({leaf(), leaf()});
  RootedMap tent = tree_to_tentacle(two);
  // one 2-gon boundary face plus 2 triangles
  CHECK(tent.face_count() == 3);
  int bigons = 0, triangles = 0;
  for (int f = 0; f < tent.face_count(); ++f) {
    if (tent.face_size(f) == 2) ++bigons;
    if (tent.face_size(f) == 3) ++triangles;
  }
  CHECK(bigons == 1);
  CHECK(triangles == 2);
  CHECK(tentacle_to_tree(tent) == two);
}

TEST_CASE("tree_to_tentacle rejects odd child counts") {
  PlaneTree bad = node({leaf()});
  CHECK_THROWS_AS(tree_to_tentacle(bad), Error);
}

TEST_CASE("tentacle <-> tree round trip on random even trees") {
  SplitMix64 rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    PlaneTree tree = random_even_tree(rng, 16);
    RootedMap tent = tree_to_tentacle(tree);
    CHECK(tentacle_to_tree(tent) == tree);
  }
}

TEST_CASE("even tree counts: recursion matches the walk route, 1 and 3 by hand") {
  std::map<int, long long> memo;
  CHECK(even_tree_count(2, memo) == 1);
  CHECK(even_tree_count(4, memo) == 3);
  for (int m = 1; m <= 6; ++m) CHECK(even_tree_count(2 * m, memo) == walk_count(m));
}

TEST_CASE("lukasiewicz: two-edge tree gives walk of length 4 ending at -1") {
  auto walk = lukasiewicz_encode({node({leaf(), leaf()})});
  CHECK(walk == std::vector<int>{2, -1, -1, -1});
  int sum = 0;
  for (int s : walk) sum += s;
  CHECK(sum == -1);
}

TEST_CASE("lukasiewicz decode inverts encode on random forests") {
  SplitMix64 rng(29);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<PlaneTree> forest;
    int trees = 1 + static_cast<int>(rng.next_below(4));
    for (int i = 0; i < trees; ++i) forest.push_back(random_even_tree(rng, 10));
    CHECK(lukasiewicz_decode(lukasiewicz_encode(forest)) == forest);
  }
}

TEST_CASE("lukasiewicz decode rejects malformed walks") {
  CHECK_THROWS_AS(lukasiewicz_decode({2, 2, -1}), Error);  // truncated
  CHECK_THROWS_AS(lukasiewicz_decode({1, -1}), Error);     // bad step
}

TEST_CASE("walk invariants for forests") {
  SplitMix64 rng(31);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<PlaneTree> forest;
    int a = 1 + static_cast<int>(rng.next_below(3));
    std::size_t edges = 0;
    for (int i = 0; i < a; ++i) {
      forest.push_back(random_even_tree(rng, 8));
      edges += forest.back().edge_count();
    }
    auto walk = lukasiewicz_encode(forest);
    CHECK(walk.size() == a + 3 * edges / 2);
    int level = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      level += walk[i];
      if (i + 1 < walk.size()) CHECK(level > -a);
    }
    CHECK(level == -a);
  }
}

TEST_CASE("ladder words have length 3l-2 with l-1 up-steps") {
  for (int ell : {3, 5, 7}) {
    auto w = ladder_word(ell);
    CHECK(w.size() == static_cast<std::size_t>(3 * ell - 2));
    CHECK(std::count(w.begin(), w.end(), 2) == ell - 1);
  }
  // the even ladders interpolate consistently
  for (int ell : {2, 4, 6}) {
    CHECK(ladder_word(ell).size() == static_cast<std::size_t>(3 * ell - 2));
    CHECK(ladder_tree(ell).edge_count() == static_cast<std::size_t>(2 * (ell - 1)));
  }
}

TEST_CASE("max ladder height: trivial on the tetrahedron, 4 on a built B4") {
  auto plain = tentacle_stats(Triangulation::from_map(tetrahedron_map()));
  CHECK(plain.ell_max == 0);
  CHECK(plain.tentacle_count == 6);
  CHECK(plain.tentacle_faces == 0);

  RootedMap with_b4 = attach_tree(tetrahedron_map(), 2, ladder_tree(4));
  Triangulation t4 = Triangulation::from_map(with_b4);
  auto st = tentacle_stats(t4);
  CHECK(st.ell_max == 4);
  CHECK(st.tentacle_faces == 6);
  REQUIRE(st.ell_witness >= 0);
  auto dec = core_decomposition(t4);
  CHECK(dec.tentacles.at(st.ell_witness).face_count == 6);
}

TEST_CASE("heights: zero exactly on core darts, positive deep in a tentacle") {
  RootedMap with_b6 = attach_tree(tetrahedron_map(), 2, ladder_tree(6));
  auto st = tentacle_stats(Triangulation::from_map(with_b6));
  REQUIRE(!st.height_histogram.empty());
  // 12 core darts sit at height 0 plus tentacle darts touching the base
  CHECK(st.height_histogram[0] >= 12);
  CHECK(st.height_histogram.size() >= 2);
}

TEST_CASE("pattern A: B4 inside is recovered as a maximal tentacle") {
  RootedMap host = insert_pattern_a(tetrahedron_map(), 2);
  CHECK(host.face_count() == 14);
  CHECK(host.genus() == 0);
  CHECK(host.is_triangulation());
  auto dec = core_decomposition(Triangulation::from_map(host));
  CHECK(!dec.degenerate);
  CHECK(dec.core.face_count() == 8);
  CHECK(dec.tentacle_faces == 6);
  bool found_b4 = false;
  for (const auto& tent : dec.tentacles)
    if (tent.face_count == 6) found_b4 = normalized(tent.tree) == normalized(ladder_tree(4));
  CHECK(found_b4);
}

TEST_CASE("reduction order does not change the decomposition") {
  SplitMix64 seed_rng(37);
  std::vector<RootedMap> instances;
  instances.push_back(attach_tree(tetrahedron_map(), 2, ladder_tree(5)));
  instances.push_back(insert_pattern_a(one_vertex_torus_map(), 0));
  {
    auto r = k_insert(tetrahedron_map(), 4, 2);
    instances.push_back(attach_tree(r.map, r.fat_darts[2], node({leaf(), leaf()})));
  }
  for (const RootedMap& m : instances) {
    Triangulation t = Triangulation::from_map(m);
    auto ref = core_decomposition(t);
    std::multiset<std::string> ref_trees;
    for (const auto& tent : ref.tentacles) ref_trees.insert(normalized(tent.tree));
    CanonicalForm ref_core = min_canonical(ref.core);
    for (int iter = 0; iter < 100; ++iter) {
      SplitMix64 rng(seed_rng.next());
      auto dec = core_decomposition_randomized(t, rng);
      CHECK(dec.degenerate == ref.degenerate);
      CHECK(dec.tentacle_count == ref.tentacle_count);
      CHECK(dec.tentacle_faces == ref.tentacle_faces);
      std::multiset<std::string> trees;
      for (const auto& tent : dec.tentacles) trees.insert(normalized(tent.tree));
      CHECK(trees == ref_trees);
      CHECK(min_canonical(dec.core) == ref_core);
    }
  }
}

TEST_CASE("randomized reduction on census-sized random maps is stable") {
  auto batch = batch_sample(4, 1, 5, {59});
  SplitMix64 seed_rng(61);
  for (const auto& t : batch.maps) {
    auto ref = core_decomposition(t);
    for (int iter = 0; iter < 50; ++iter) {
      SplitMix64 rng(seed_rng.next());
      auto dec = core_decomposition_randomized(t, rng);
      CHECK(dec.tentacle_count == ref.tentacle_count);
      CHECK(dec.tentacle_faces == ref.tentacle_faces);
    }
  }
}

TEST_CASE("decompositions preserve genus and face accounting") {
  for (auto [n, g] : std::vector<std::pair<int, int>>{{5, 1}, {7, 2}, {9, 3}}) {
    auto batch = batch_sample(n, g, 6, {static_cast<std::uint64_t>(100 * n + g)});
    for (const auto& t : batch.maps) {
      auto dec = core_decomposition(t);
      if (dec.degenerate) {
        CHECK(t.genus() == 0);  // only all-tentacle spheres collapse
        continue;
      }
      CHECK(dec.core.genus() == t.genus());
      CHECK(dec.core.face_count() + dec.tentacle_faces ==
            static_cast<std::size_t>(t.map().face_count()));
      CHECK(dec.tentacle_count == dec.core.edge_count());
    }
  }
}

TEST_CASE("total collapse is flagged as degenerate") {
  // two triangles glued coherently along their boundary: every vertex has
  // degree 2, the whole sphere is tentacle-like
  std::vector<Dart> alpha = {5, 4, 3, 2, 1, 0};
  RootedMap m = gluing_map(1, alpha, 0);
  REQUIRE(m.genus() == 0);
  REQUIRE(m.vertex_count() == 3);
  auto dec = core_decomposition(Triangulation::from_map(m));
  CHECK(dec.degenerate);
}
