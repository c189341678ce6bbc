#pragma once
#include <cstdint>
#include <vector>

#include "genuslab/rng.hpp"
#include "genuslab/rooted_map.hpp"

namespace genuslab {

/// 1-skeleton adjacency (CSR); parallel edges kept, loops dropped for BFS.
struct VertexGraph {
  int n = 0;
  std::vector<int> offsets;
  std::vector<int> neighbors;
};

VertexGraph vertex_graph(const RootedMap& map);

std::vector<int> bfs_distances(const VertexGraph& g, int source);

/// Max over all BFS eccentricities. OpenMP over sources.
int diameter(const Triangulation& t);
/// Single-threaded reference.
int diameter_serial(const Triangulation& t);

struct BallSummary {
  int center = 0;
  int radius = 0;
  std::size_t volume = 0;     // internal faces |B_r|
  std::size_t perimeter = 0;  // boundary edge-sides |dB_r|
  int ball_genus = 0;
};

/// Faces incident to at least one vertex at distance <= r-1 from v; r >= 1.
std::vector<int> ball_faces(const Triangulation& t, int vertex, int r);
BallSummary ball(const Triangulation& t, int vertex, int r);

struct ExpansionViolation {
  int vertex;
  int radius;
  std::size_t vol_r, vol_r1, perim_r;
};

/// Checks 3(|B_{r+1}| - |B_r|) >= |dB_r| for every vertex and every r with
/// B_r != t. Expected empty.
std::vector<ExpansionViolation> check_ball_expansion(const Triangulation& t);

struct DistanceSample {
  int x, y, u, v;
  int dxy, duv;
  int gap;  // dxy - duv
};

std::vector<DistanceSample> typical_distance_sample(const Triangulation& t, SplitMix64& rng,
                                                    int pairs);

/// Largest r >= 0 such that B_r(v) is planar; 0 when even B_1 has positive
/// genus, saturation radius when the whole map is planar.
int planarity_radius(const Triangulation& t, int vertex);

}  // namespace genuslab
