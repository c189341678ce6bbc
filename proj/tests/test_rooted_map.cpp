#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "genuslab/map_json.hpp"
#include "genuslab/rng.hpp"
#include "genuslab/rooted_map.hpp"

using namespace genuslab;

TEST_CASE("tetrahedron reference map") {
  RootedMap m = tetrahedron_map();
  CHECK(m.dart_count() == 12);
  CHECK(m.vertex_count() == 4);
  CHECK(m.edge_count() == 6);
  CHECK(m.face_count() == 4);
  CHECK(m.genus() == 0);
  CHECK(m.is_triangulation());
  Triangulation t = Triangulation::from_map(m);
  CHECK(t.n() == 2);
}

TEST_CASE("one-vertex torus triangulation") {
  RootedMap m = one_vertex_torus_map();
  CHECK(m.dart_count() == 6);
  CHECK(m.vertex_count() == 1);
  CHECK(m.face_count() == 2);
  CHECK(m.genus() == 1);
  CHECK(m.is_triangulation());
  // n + 2 - 2g vertices
  CHECK(m.vertex_count() == 1 + 2 - 2 * m.genus());
}

TEST_CASE("single edge map is a genus-0 plane tree") {
  RootedMap m = single_edge_map();
  CHECK(m.vertex_count() == 2);
  CHECK(m.edge_count() == 1);
  CHECK(m.face_count() == 1);
  CHECK(m.genus() == 0);
}

TEST_CASE("build rejects malformed input") {
  try {
    RootedMap::build({0, 1}, {0, 1}, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlphaFixedPoint);
  }
  try {
    RootedMap::build({1, 1}, {1, 0}, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAPermutation);
  }
  // two disjoint edges
  try {
    RootedMap::build({0, 1, 2, 3}, {1, 0, 3, 2}, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
}

TEST_CASE("genus_from_counts flags inconsistent Euler data") {
  CHECK(genus_from_counts(4, 6, 4) == 0);
  CHECK(genus_from_counts(1, 3, 2) == 1);
  CHECK_THROWS_AS(genus_from_counts(5, 6, 4), Error);  // odd deficit
  CHECK_THROWS_AS(genus_from_counts(9, 6, 4), Error);  // negative genus
}

TEST_CASE("canonical form is idempotent") {
  RootedMap m = tetrahedron_map();
  CanonicalForm cf = m.canonical_form();
  RootedMap c = RootedMap::build(cf.sigma, cf.alpha, 0);
  CHECK(c.canonical_form() == cf);
}

TEST_CASE("canonical form is invariant under dart relabeling") {
  SplitMix64 rng(42);
  for (const RootedMap& m : {tetrahedron_map(), one_vertex_torus_map()}) {
    CanonicalForm cf = m.canonical_form();
    const std::size_t n = m.dart_count();
    for (int iter = 0; iter < 5000; ++iter) {
      std::vector<Dart> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.next_below(i)]);
      CHECK(m.relabeled(perm).canonical_form() == cf);
    }
  }
}

TEST_CASE("tetrahedron roots at automorphism-related darts in different vertex orbits") {
  // rotation about vertex 0: fixes vertex 0, cycles 1 -> 2 -> 3
  RootedMap m = tetrahedron_map();
  std::vector<Dart> rot = {2, 3, 4, 5, 0, 1, 10, 11, 7, 6, 9, 8};
  CHECK(m.relabeled(rot).canonical_form() == m.canonical_form());
  // dart 6 sits at vertex 1, its image 10 at vertex 2
  CHECK(m.vertex_of(6) != m.vertex_of(10));
  CHECK(m.rerooted(6).canonical_form() == m.rerooted(10).canonical_form());
}

TEST_CASE("dual graph of the tetrahedron is K4") {
  DualGraph g = dual_graph(Triangulation::from_map(tetrahedron_map()));
  CHECK(g.n_faces == 4);
  CHECK(g.edges.size() == 6);
  for (int f = 0; f < 4; ++f) CHECK(g.adj[f].size() == 3);
  for (const auto& e : g.edges) CHECK(e[0] != e[1]);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) CHECK(std::count(g.adj[a].begin(), g.adj[a].end(), b) == 1);
}

TEST_CASE("dual graph of the one-vertex torus has two nodes and three parallel edges") {
  DualGraph g = dual_graph(Triangulation::from_map(one_vertex_torus_map()));
  CHECK(g.n_faces == 2);
  CHECK(g.edges.size() == 3);
  for (const auto& e : g.edges) CHECK(e[0] != e[1]);
  CHECK(g.adj[0].size() == 3);
  CHECK(g.adj[1].size() == 3);
}

TEST_CASE("submap of all faces has no boundary and keeps the genus") {
  for (const RootedMap& m : {tetrahedron_map(), one_vertex_torus_map()}) {
    std::vector<int> all(m.face_count());
    std::iota(all.begin(), all.end(), 0);
    BorderedSubmap s = submap_of_faces(m, all);
    CHECK(s.boundary_length == 0);
    CHECK(s.genus == m.genus());
    CHECK(s.internal_face_count == static_cast<std::size_t>(m.face_count()));
    CHECK(s.external_faces.empty());
  }
}

TEST_CASE("submap of one tetrahedron face is a triangle with boundary 3") {
  RootedMap m = tetrahedron_map();
  BorderedSubmap s = submap_of_faces(m, {0});
  CHECK(s.boundary_length == 3);
  CHECK(s.genus == 0);
  CHECK(s.external_faces.size() == 1);
  CHECK(s.boundary_walks.at(0).size() == 3);
}

TEST_CASE("submap of two adjacent tetrahedron faces has boundary 4") {
  RootedMap m = tetrahedron_map();
  int f0 = m.face_of(0), f1 = m.face_of(m.alpha(0));
  REQUIRE(f0 != f1);
  BorderedSubmap s = submap_of_faces(m, {f0, f1});
  CHECK(s.boundary_length == 4);
  CHECK(s.genus == 0);
  CHECK(s.external_faces.size() == 1);
}

TEST_CASE("submap of one torus face has boundary 3") {
  RootedMap m = one_vertex_torus_map();
  BorderedSubmap s = submap_of_faces(m, {0});
  CHECK(s.boundary_length == 3);
  CHECK(s.internal_face_count == 1);
  CHECK(s.genus == 0);
}

TEST_CASE("submap rejects an empty face set") {
  CHECK_THROWS_AS(submap_of_faces(tetrahedron_map(), {}), Error);
}

TEST_CASE("map json round trip and loader validation") {
  RootedMap m = tetrahedron_map();
  nlohmann::json j = map_to_json(m);
  RootedMap back = map_from_json(j);
  CHECK(back.canonical_form() == m.canonical_form());
  CHECK(back.root() == m.root());

  nlohmann::json bad = j;
  bad["alpha"][0] = 0;  // fixed point
  CHECK_THROWS_AS(map_from_json(bad), Error);

  std::ostringstream out;
  write_maps_jsonl(out, {Triangulation::from_map(m)});
  std::istringstream in(out.str());
  auto maps = read_maps_jsonl(in);
  REQUIRE(maps.size() == 1);
  CHECK(maps[0].map().canonical_form() == m.canonical_form());
}
