#include "genuslab/metrics.hpp"

#include <algorithm>
#include <queue>

namespace genuslab {

VertexGraph vertex_graph(const RootedMap& map) {
  VertexGraph g;
  g.n = map.vertex_count();
  std::vector<int> degree(g.n, 0);
  for (Dart d = 0; d < map.dart_count(); ++d) {
    int a = map.vertex_of(d), b = map.vertex_of(map.alpha(d));
    if (a != b) ++degree[a];
  }
  g.offsets.assign(g.n + 1, 0);
  for (int v = 0; v < g.n; ++v) g.offsets[v + 1] = g.offsets[v] + degree[v];
  g.neighbors.resize(g.offsets[g.n]);
  std::vector<int> fill(g.offsets.begin(), g.offsets.end() - 1);
  for (Dart d = 0; d < map.dart_count(); ++d) {
    int a = map.vertex_of(d), b = map.vertex_of(map.alpha(d));
    if (a != b) g.neighbors[fill[a]++] = b;
  }
  return g;
}

std::vector<int> bfs_distances(const VertexGraph& g, int source) {
  std::vector<int> dist(g.n, -1);
  std::vector<int> queue;
  queue.reserve(g.n);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int i = g.offsets[v]; i < g.offsets[v + 1]; ++i) {
      int w = g.neighbors[i];
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

int eccentricity(const VertexGraph& g, int source) {
  auto dist = bfs_distances(g, source);
  int ecc = 0;
  for (int d : dist) ecc = std::max(ecc, d);
  return ecc;
}

}  // namespace

int diameter(const Triangulation& t) {
  const VertexGraph g = vertex_graph(t.map());
  int best = 0;
#pragma omp parallel for schedule(dynamic) reduction(max : best)
  for (int v = 0; v < g.n; ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

int diameter_serial(const Triangulation& t) {
  const VertexGraph g = vertex_graph(t.map());
  int best = 0;
  for (int v = 0; v < g.n; ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

std::vector<int> ball_faces(const Triangulation& t, int vertex, int r) {
  const RootedMap& m = t.map();
  auto dist = bfs_distances(vertex_graph(m), vertex);
  std::vector<char> in(m.face_count(), 0);
  for (Dart d = 0; d < m.dart_count(); ++d)
    if (dist[m.vertex_of(d)] <= r - 1) in[m.face_of(d)] = 1;
  std::vector<int> faces;
  for (int f = 0; f < m.face_count(); ++f)
    if (in[f]) faces.push_back(f);
  return faces;
}

BallSummary ball(const Triangulation& t, int vertex, int r) {
  BallSummary b;
  b.center = vertex;
  b.radius = r;
  auto faces = ball_faces(t, vertex, r);
  auto sub = submap_of_faces(t.map(), faces);
  b.volume = sub.internal_face_count;
  b.perimeter = sub.boundary_length;
  b.ball_genus = sub.genus;
  return b;
}

std::vector<ExpansionViolation> check_ball_expansion(const Triangulation& t) {
  const RootedMap& m = t.map();
  const VertexGraph g = vertex_graph(m);
  const int n_faces = m.face_count();
  std::vector<ExpansionViolation> violations;

  for (int v = 0; v < g.n; ++v) {
    auto dist = bfs_distances(g, v);
    // face enters B_r at r = 1 + min vertex distance on the face
    std::vector<int> face_min(n_faces, g.n + 1);
    for (Dart d = 0; d < m.dart_count(); ++d)
      face_min[m.face_of(d)] = std::min(face_min[m.face_of(d)], dist[m.vertex_of(d)]);
    int r_sat = 0;
    for (int f = 0; f < n_faces; ++f) r_sat = std::max(r_sat, face_min[f] + 1);

    std::vector<std::size_t> vol(r_sat + 2, 0);    // |B_r|
    std::vector<std::size_t> perim(r_sat + 2, 0);  // |dB_r|
    for (int f = 0; f < n_faces; ++f)
      for (int r = face_min[f] + 1; r <= r_sat + 1; ++r) ++vol[r];
    for (Dart d = 0; d < m.dart_count(); ++d) {
      // d is a boundary side of B_r iff its face is inside and alpha's is not
      int rin = face_min[m.face_of(d)] + 1;
      int rout = face_min[m.face_of(m.alpha(d))] + 1;
      for (int r = rin; r < rout && r <= r_sat; ++r) ++perim[r];
    }
    for (int r = 1; r < r_sat; ++r) {  // B_r != t exactly when r < r_sat
      if (3 * (vol[r + 1] - vol[r]) < perim[r])
        violations.push_back({v, r, vol[r], vol[r + 1], perim[r]});
    }
  }
  return violations;
}

std::vector<DistanceSample> typical_distance_sample(const Triangulation& t, SplitMix64& rng,
                                                    int pairs) {
  const VertexGraph g = vertex_graph(t.map());
  std::vector<DistanceSample> out;
  out.reserve(pairs);
  for (int i = 0; i < pairs; ++i) {
    DistanceSample s;
    s.x = static_cast<int>(rng.next_below(g.n));
    s.y = static_cast<int>(rng.next_below(g.n));
    s.u = static_cast<int>(rng.next_below(g.n));
    s.v = static_cast<int>(rng.next_below(g.n));
    s.dxy = bfs_distances(g, s.x)[s.y];
    s.duv = bfs_distances(g, s.u)[s.v];
    s.gap = s.dxy - s.duv;
    out.push_back(s);
  }
  return out;
}

int planarity_radius(const Triangulation& t, int vertex) {
  const int n_faces = t.map().face_count();
  for (int r = 1;; ++r) {
    BallSummary b = ball(t, vertex, r);
    if (b.ball_genus > 0) return r - 1;
    if (b.volume == static_cast<std::size_t>(n_faces)) return r;  // saturated and planar
  }
}

}  // namespace genuslab
