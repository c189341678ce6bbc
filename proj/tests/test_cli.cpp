#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "genuslab/map_json.hpp"

using namespace genuslab;
namespace fs = std::filesystem;

namespace {

const std::string kBin = GENUSLAB_BIN;

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "genuslab_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args, const std::string& log = "out.log") {
  const std::string cmd = "cd " + work_dir().string() + " && GENUSLAB_CACHE=cache " + kBin + " " +
                          args + " >" + log + " 2>" + log + ".err";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& name) {
  std::ifstream in(work_dir() / name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("constants --theta emits the full json object with D' = 3D") {
  REQUIRE(run("constants --theta 0.2 --out constants.json") == 0);
  auto j = nlohmann::json::parse(slurp("constants.json"));
  CHECK(j.at("D_prime").get<double>() == 3.0 * j.at("D").get<double>());
  CHECK(j.at("K").get<double>() == doctest::Approx(100.0));
  for (const char* key : {"theta", "h", "lambda", "f", "f_second", "m", "a", "b", "b_prime",
                          "delta", "max_abs_fprime"})
    CHECK(j.contains(key));
}

TEST_CASE("bad theta is a config error (exit 3)") {
  CHECK(run("constants --theta 0.7") == 3);
}

TEST_CASE("sample writes maps, a stats footer, and is deterministic") {
  REQUIRE(run("sample --n 5 --genus 1 --count 8 --seed 11 --out maps_a.jsonl") == 0);
  REQUIRE(run("sample --n 5 --genus 1 --count 8 --seed 11 --out maps_b.jsonl") == 0);
  CHECK(slurp("maps_a.jsonl") == slurp("maps_b.jsonl"));

  std::ifstream in(work_dir() / "maps_a.jsonl");
  auto maps = read_maps_jsonl(in);
  REQUIRE(maps.size() == 8);
  for (const auto& t : maps) {
    CHECK(t.n() == 5);
    CHECK(t.genus() == 1);
  }
  auto stats = nlohmann::json::parse(slurp("maps_a.jsonl.stats.json"));
  CHECK(stats.at("accepted").get<std::uint64_t>() == 8);
  CHECK(stats.at("attempts").get<std::uint64_t>() ==
        stats.at("accepted").get<std::uint64_t>() +
            stats.at("rejected_disconnected").get<std::uint64_t>() +
            stats.at("rejected_genus").get<std::uint64_t>());
  CHECK(slurp("maps_a.jsonl").rfind("# config=", 0) == 0);
}

TEST_CASE("sampling an empty class exits with the invariant code 2") {
  CHECK(run("sample --n 2 --genus 2 --count 1 --out nothing.jsonl") == 2);
}

TEST_CASE("analyze emits the documented long-format csv") {
  REQUIRE(run("sample --n 6 --genus 2 --count 4 --seed 5 --out maps_c.jsonl") == 0);
  REQUIRE(run("analyze --metrics diameter,balls,typical,planarity,profile,cheeger,isolated,"
              "tentacles --eps 0.25 --in maps_c.jsonl --out metrics.csv") == 0);
  std::string csv = slurp("metrics.csv");
  CHECK(csv.find("map_index,metric,key,value") != std::string::npos);
  for (const char* metric : {"diameter", "ball_expansion_violations", "typical_gap_mean_abs",
                             "planarity_radius", "profile", "cheeger", "isolated_faces",
                             "tentacles_T"})
    CHECK(csv.find(metric) != std::string::npos);
  // wide-format profile side file
  std::string profile_csv = slurp("metrics.csv.profile.csv");
  CHECK(profile_csv.find("map_index,k1,cut_any,cut_multicurve,method") != std::string::npos);
  CHECK(profile_csv.find("exact") != std::string::npos);
}

TEST_CASE("strict analyze passes on sampled maps") {
  REQUIRE(run("sample --n 5 --genus 2 --count 3 --seed 9 --out maps_d.jsonl") == 0);
  CHECK(run("--strict analyze --metrics diameter,balls --in maps_d.jsonl --out strict.csv") == 0);
}

TEST_CASE("oracle dumps census counts as json") {
  REQUIRE(run("oracle --nmax 2 --out oracle.json") == 0);
  auto j = nlohmann::json::parse(slurp("oracle.json"));
  std::map<std::pair<int, int>, std::uint64_t> counts;
  for (const auto& row : j)
    counts[{row.at("n").get<int>(), row.at("genus").get<int>()}] = row.at("count").get<std::uint64_t>();
  CHECK(counts[{1, 0}] == 4);
  CHECK(counts[{1, 1}] == 1);
  CHECK(counts[{2, 0}] == 32);
  CHECK(counts[{2, 1}] == 28);
}

TEST_CASE("tau builds the table once and reloads it from cache") {
  REQUIRE(run("tau --nmax 12 --theta 0 --sizes 6,12 --out ratios.csv", "tau1.log") == 0);
  std::string csv = slurp("ratios.csv");
  CHECK(csv.find("theta,n,g,ratio,lambda,error") != std::string::npos);
  REQUIRE(run("tau --nmax 12 --theta 0 --sizes 6,12 --out ratios2.csv", "tau2.log") == 0);
  CHECK(slurp("tau2.log.err").find("loaded cache") != std::string::npos);
  CHECK(slurp("ratios.csv") == slurp("ratios2.csv"));
}

TEST_CASE("experiment reruns byte-identically and draws an svg") {
  REQUIRE(run("experiment --theta 0.3 --sizes 6,8,10,12 --count 5 --seed 7 --out-prefix e1") == 0);
  REQUIRE(run("experiment --theta 0.3 --sizes 6,8,10,12 --count 5 --seed 7 --out-prefix e2") == 0);
  CHECK(slurp("e1.csv") == slurp("e2.csv"));
  CHECK(!slurp("e1.csv").empty());
  std::string svg = slurp("e1.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("circle") != std::string::npos);
}
