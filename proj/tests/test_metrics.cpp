#include <doctest.h>

#include <algorithm>
#include <vector>

#include "genuslab/metrics.hpp"
#include "genuslab/sampler.hpp"

using namespace genuslab;

namespace {

// independent all-pairs oracle (Floyd-Warshall on the adjacency matrix)
int diameter_floyd_warshall(const Triangulation& t) {
  const RootedMap& m = t.map();
  const int n = m.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (Dart a = 0; a < m.dart_count(); ++a) {
    int x = m.vertex_of(a), y = m.vertex_of(m.alpha(a));
    if (x != y) d[x][y] = d[y][x] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  int best = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) best = std::max(best, d[i][j]);
  return best;
}

}  // namespace

TEST_CASE("tetrahedron distances are all 1") {
  Triangulation t = Triangulation::from_map(tetrahedron_map());
  auto g = vertex_graph(t.map());
  for (int v = 0; v < 4; ++v) {
    auto dist = bfs_distances(g, v);
    CHECK(dist[v] == 0);
    for (int w = 0; w < 4; ++w)
      if (w != v) CHECK(dist[w] == 1);
  }
  CHECK(diameter(t) == 1);
}

TEST_CASE("one-vertex torus has diameter 0") {
  CHECK(diameter(Triangulation::from_map(one_vertex_torus_map())) == 0);
}

TEST_CASE("triangle inequality holds on sampled triples") {
  auto batch = batch_sample(6, 1, 5, {13});
  for (const auto& t : batch.maps) {
    auto g = vertex_graph(t.map());
    auto d0 = bfs_distances(g, 0);
    for (int a = 0; a < g.n; ++a) {
      auto da = bfs_distances(g, a);
      for (int b = 0; b < g.n; ++b) CHECK(d0[b] <= d0[a] + da[b]);
    }
  }
}

TEST_CASE("diameter agrees with an independent all-pairs oracle on small maps") {
  for (int n = 4; n <= 6; ++n) {
    auto batch = batch_sample(n, 1, 8, {n * 1000u});
    for (const auto& t : batch.maps) {
      CHECK(diameter(t) == diameter_floyd_warshall(t));
      CHECK(diameter_serial(t) == diameter_floyd_warshall(t));
    }
  }
}

TEST_CASE("tetrahedron ball of radius 1: volume 3, perimeter 3, planar") {
  Triangulation t = Triangulation::from_map(tetrahedron_map());
  BallSummary b = ball(t, 0, 1);
  CHECK(b.volume == 3);
  CHECK(b.perimeter == 3);
  CHECK(b.ball_genus == 0);
}

TEST_CASE("balls saturate and volumes are monotone") {
  auto batch = batch_sample(6, 2, 4, {21});
  for (const auto& t : batch.maps) {
    const int F = t.map().face_count();
    for (int v = 0; v < t.map().vertex_count(); ++v) {
      std::size_t prev = 0;
      for (int r = 1; r <= t.map().vertex_count() + 1; ++r) {
        BallSummary b = ball(t, v, r);
        CHECK(b.volume >= prev);
        prev = b.volume;
        if (b.volume == static_cast<std::size_t>(F)) {
          CHECK(b.perimeter == 0);
          break;
        }
      }
      CHECK(prev == static_cast<std::size_t>(F));
    }
  }
}

TEST_CASE("ball expansion inequality holds exactly on reference maps") {
  CHECK(check_ball_expansion(Triangulation::from_map(tetrahedron_map())).empty());
  CHECK(check_ball_expansion(Triangulation::from_map(one_vertex_torus_map())).empty());
}

TEST_CASE("ball expansion inequality holds on sampled maps") {
  for (auto [n, g] : std::vector<std::pair<int, int>>{{6, 1}, {8, 2}, {10, 3}}) {
    auto batch = batch_sample(n, g, 5, {static_cast<std::uint64_t>(n * 31 + g)});
    for (const auto& t : batch.maps) CHECK(check_ball_expansion(t).empty());
  }
}

TEST_CASE("tetrahedron typical distances: all gaps vanish for distinct endpoints") {
  // distances between distinct vertices are all 1; sampling is with
  // replacement, so coincident endpoints contribute distance 0
  Triangulation t = Triangulation::from_map(tetrahedron_map());
  SplitMix64 rng(5);
  for (const auto& s : typical_distance_sample(t, rng, 200)) {
    if (s.x != s.y && s.u != s.v) CHECK(s.gap == 0);
    CHECK(std::abs(s.gap) <= 1);
  }
}

TEST_CASE("gaps are bounded by the diameter") {
  auto batch = batch_sample(8, 1, 3, {77});
  for (const auto& t : batch.maps) {
    const int diam = diameter(t);
    SplitMix64 rng(6);
    for (const auto& s : typical_distance_sample(t, rng, 200)) {
      CHECK(std::abs(s.gap) <= diam);
      CHECK(s.dxy <= diam);
    }
  }
}

TEST_CASE("planarity radius: planar maps saturate, torus ball is non-planar at once") {
  Triangulation tet = Triangulation::from_map(tetrahedron_map());
  for (int v = 0; v < 4; ++v) {
    int r = planarity_radius(tet, v);
    // saturation radius: B_2 already covers all faces
    CHECK(r == 2);
  }
  Triangulation torus = Triangulation::from_map(one_vertex_torus_map());
  CHECK(planarity_radius(torus, 0) == 0);
}

TEST_CASE("ball genus is monotone in r on sampled maps") {
  auto batch = batch_sample(7, 2, 6, {55});
  for (const auto& t : batch.maps) {
    for (int v = 0; v < t.map().vertex_count(); ++v) {
      int prev = 0;
      for (int r = 1;; ++r) {
        BallSummary b = ball(t, v, r);
        CHECK(b.ball_genus >= prev);
        prev = b.ball_genus;
        if (b.perimeter == 0) break;
      }
    }
  }
}
