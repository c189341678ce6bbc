// Wall-clock comparison of the OpenMP kernels against their serial reference
// implementations. Run with --census3 to include the full n=3 census.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#include "genuslab/census.hpp"
#include "genuslab/metrics.hpp"
#include "genuslab/sampler.hpp"
#include "genuslab/separators.hpp"
#include "genuslab/tentacles.hpp"

using namespace genuslab;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  bool census3 = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--census3") == 0) census3 = true;

  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    double t0 = now_ms();
    GluingCensus s = brute_force_census_serial(2);
    double t1 = now_ms();
    GluingCensus p = brute_force_census(2);
    double t2 = now_ms();
    if (s.classes != p.classes) std::printf("census n=2 MISMATCH\n");
    row("census n=2", t1 - t0, t2 - t1);
  }

  if (census3) {
    double t0 = now_ms();
    GluingCensus s = brute_force_census_serial(3);
    double t1 = now_ms();
    GluingCensus p = brute_force_census(3);
    double t2 = now_ms();
    if (s.classes != p.classes) std::printf("census n=3 MISMATCH\n");
    row("census n=3", t1 - t0, t2 - t1);
  }

  {
    // large low-genus maps via tentacle insertions, then all-pairs BFS
    SplitMix64 rng(2024);
    std::vector<Triangulation> maps;
    for (int i = 0; i < 8; ++i) {
      RootedMap m = tetrahedron_map();
      for (int burst = 0; burst < 120; ++burst) {
        PlaneTree t;
        t.children.resize(2 + 2 * rng.next_below(4));
        for (auto& c : t.children)
          if (rng.next_below(2)) c.children.resize(2 + 2 * rng.next_below(3));
        m = attach_tree(m, static_cast<Dart>(rng.next_below(m.dart_count())), t);
      }
      maps.push_back(Triangulation::from_map(m));
    }
    std::printf("   (diameter maps: %d vertices each)\n", maps[0].map().vertex_count());
    double t0 = now_ms();
    long sum_s = 0;
    for (const auto& t : maps) sum_s += diameter_serial(t);
    double t1 = now_ms();
    long sum_p = 0;
    for (const auto& t : maps) sum_p += diameter(t);
    double t2 = now_ms();
    if (sum_s != sum_p) std::printf("diameter MISMATCH\n");
    row("all-pairs diameter x8", t1 - t0, t2 - t1);
  }

  {
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8};
    double t0 = now_ms();
    auto s = batch_sample_serial(10, 4, 4000, seeds);
    double t1 = now_ms();
    auto p = batch_sample(10, 4, 4000, seeds);
    double t2 = now_ms();
    if (s.total.attempts != p.total.attempts) std::printf("batch MISMATCH\n");
    row("batch sample 4000@(10,4)", t1 - t0, t2 - t1);
  }

  {
    auto batch = batch_sample(8, 2, 24, {99});
    double t0 = now_ms();
    long any_s = 0;
    for (const auto& t : batch.maps) any_s += isoperimetric_profile_serial(t).at(1).cut_any;
    double t1 = now_ms();
    long any_p = 0;
    for (const auto& t : batch.maps) any_p += isoperimetric_profile(t).at(1).cut_any;
    double t2 = now_ms();
    if (any_s != any_p) std::printf("profile MISMATCH\n");
    row("exact profile 2n=16 x24", t1 - t0, t2 - t1);
  }

  return 0;
}
