#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "genuslab/census.hpp"
#include "genuslab/chi_square.hpp"
#include "genuslab/map_json.hpp"
#include "genuslab/metrics.hpp"
#include "genuslab/sampler.hpp"
#include "genuslab/separators.hpp"
#include "genuslab/tau_table.hpp"
#include "genuslab/tentacles.hpp"
#include "genuslab/theta_constants.hpp"

namespace fs = std::filesystem;
using namespace genuslab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 2;
constexpr int kExitConfig = 3;

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string join_seeds(const std::vector<std::uint64_t>& seeds) {
  std::string s;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(seeds[i]);
  }
  return s;
}

fs::path cache_dir() {
  if (const char* env = std::getenv("GENUSLAB_CACHE")) return fs::path(env);
  return fs::path(".genuslab_cache");
}

nlohmann::json census_to_json(const GluingCensus& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["matchings_total"] = c.matchings_total;
  j["connected_by_genus"] = c.connected_by_genus;
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& per_genus : c.classes) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& cf : per_genus) list.push_back({{"sigma", cf.sigma}, {"alpha", cf.alpha}});
    classes.push_back(std::move(list));
  }
  j["classes"] = std::move(classes);
  return j;
}

GluingCensus census_from_json(const nlohmann::json& j) {
  GluingCensus c;
  c.n = j.at("n").get<int>();
  c.matchings_total = j.at("matchings_total").get<std::uint64_t>();
  c.connected_by_genus = j.at("connected_by_genus").get<std::vector<std::uint64_t>>();
  for (const auto& list : j.at("classes")) {
    std::vector<CanonicalForm> forms;
    for (const auto& e : list)
      forms.push_back({e.at("sigma").get<std::vector<Dart>>(), e.at("alpha").get<std::vector<Dart>>()});
    c.classes.push_back(std::move(forms));
  }
  for (auto v : c.connected_by_genus) c.connected_total += v;
  return c;
}

GluingCensus cached_census(int n) {
  const fs::path path = cache_dir() / ("census_" + std::to_string(n) + ".json");
  if (fs::exists(path)) {
    std::ifstream in(path);
    nlohmann::json j;
    in >> j;
    GluingCensus c = census_from_json(j);
    if (c.n == n) return c;
  }
  GluingCensus c = brute_force_census(n);
  fs::create_directories(cache_dir());
  std::ofstream out(path);
  out << census_to_json(c).dump() << "\n";
  return c;
}

TauTable cached_tau(int nmax, bool verbose = true) {
  const fs::path path = cache_dir() / "tau.csv";
  if (fs::exists(path)) {
    try {
      TauTable t = TauTable::load_csv(path.string());
      if (t.n_max() >= nmax) {
        if (verbose) std::cerr << "tau: loaded cache (n_max=" << t.n_max() << "), spot checks passed\n";
        return t;
      }
      t.extend(nmax);
      t.save_csv(path.string());
      return t;
    } catch (const Error& e) {
      if (verbose) std::cerr << "tau: cache rejected (" << e.what() << "), rebuilding\n";
    }
  }
  TauTable t = TauTable::calibrate_seed(cached_census(1), cached_census(2), cached_census(3));
  t.extend(nmax);
  fs::create_directories(cache_dir());
  t.save_csv(path.string());
  return t;
}

nlohmann::json constants_json(const ThetaConstants& c) {
  return {
      {"theta", c.theta}, {"h", c.h},       {"lambda", c.lambda},
      {"f", c.f},         {"f_second", c.f_second},
      {"m", c.m},         {"D", c.D},       {"D_prime", c.D_prime},
      {"a", c.a},         {"b", c.b},       {"b_prime", c.b_prime},
      {"delta", c.delta}, {"K", c.K},       {"max_abs_fprime", c.max_abs_fprime},
  };
}

void validate_map_strict(const Triangulation& t) {
  if (!t.map().is_triangulation())
    throw Error(ErrorCode::NonOrientableInconsistency, "non-triangular face");
  auto violations = check_ball_expansion(t);
  if (!violations.empty())
    throw Error(ErrorCode::NonOrientableInconsistency,
                "ball expansion violated at vertex " + std::to_string(violations[0].vertex));
}

struct TauArgs {
  int nmax = 120;
  std::string theta_list = "0,0.2";
  std::string sizes = "40,80,120";
  std::string out;
};

struct ConstantsArgs {
  double theta = -1.0;
  std::string grid;
  std::string out;
};

struct SampleArgs {
  int n = 8;
  int g = 1;
  int count = 10;
  std::vector<std::uint64_t> seeds{1};
  std::string out = "maps.jsonl";
  double p_threshold = 0.01;
};

struct AnalyzeArgs {
  std::string metrics = "diameter";
  std::string in = "maps.jsonl";
  std::string out = "metrics.csv";
  double eps = 0.25;
  int exact_limit_faces = 16;
  int exact_limit_vertices = 16;
  int typical_pairs = 64;
};

struct OracleArgs {
  int nmax = 3;
  std::string out;
};

struct ExperimentArgs {
  double theta = 0.25;
  std::string sizes = "6,8,10,12,14";
  int count = 20;
  std::uint64_t seed = 1;
  std::string out_prefix = "experiment";
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

int cmd_tau(const TauArgs& a) {
  TauTable t = cached_tau(a.nmax);
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    os = &file;
  }
  const std::string cfg = "tau nmax=" + std::to_string(a.nmax) + " theta=" + a.theta_list +
                          " sizes=" + a.sizes;
  *os << "# config=" << hex64(fnv1a64(cfg)) << " seeds=\n";
  *os << "theta,n,g,ratio,lambda,error\n";
  for (double theta : parse_double_list(a.theta_list)) {
    for (const auto& row : t.ratio_diagnostic(theta, parse_int_list(a.sizes))) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%.6g,%d,%d,%.12g,%.12g,%.12g\n", theta, row.n, row.g,
                    row.ratio, row.lambda_ref, row.error);
      *os << buf;
    }
  }
  return kExitOk;
}

int cmd_constants(const ConstantsArgs& a) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    os = &file;
  }
  if (!a.grid.empty()) {
    auto parts = parse_double_list(a.grid);
    if (parts.size() != 3) throw Error(ErrorCode::ConfigError, "--grid wants a,b,steps");
    const double lo = parts[0], hi = parts[1];
    const int steps = static_cast<int>(parts[2]);
    if (steps < 1 || !(lo < hi)) throw Error(ErrorCode::ConfigError, "bad grid range");
    const std::string cfg = "constants grid=" + a.grid;
    *os << "# config=" << hex64(fnv1a64(cfg)) << " seeds=\n";
    *os << "theta,h,lambda,f,f_second,m,D,D_prime,a,b,b_prime,delta,K,max_abs_fprime\n";
    for (int i = 0; i <= steps; ++i) {
      const double theta = lo + (hi - lo) * i / steps;
      ThetaConstants c = compute_theta_constants(theta);
      char buf[400];
      std::snprintf(buf, sizeof buf,
                    "%.10g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,"
                    "%.12g\n",
                    c.theta, c.h, c.lambda, c.f, c.f_second, c.m, c.D, c.D_prime, c.a, c.b,
                    c.b_prime, c.delta, c.K, c.max_abs_fprime);
      *os << buf;
    }
    return kExitOk;
  }
  if (!(a.theta > 0.0) || a.theta >= 0.5)
    throw Error(ErrorCode::ConfigError, "--theta must lie in (0, 1/2)");
  *os << constants_json(compute_theta_constants(a.theta)).dump(2) << "\n";
  return kExitOk;
}

int cmd_sample(const SampleArgs& a, bool strict) {
  BatchResult batch = batch_sample(a.n, a.g, a.count, a.seeds);
  if (strict)
    for (const auto& t : batch.maps) validate_map_strict(t);

  const std::string cfg = "sample n=" + std::to_string(a.n) + " g=" + std::to_string(a.g) +
                          " count=" + std::to_string(a.count) + " seeds=" + join_seeds(a.seeds);
  std::ofstream out(a.out);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + a.out);
  out << "# config=" << hex64(fnv1a64(cfg)) << " seeds=" << join_seeds(a.seeds) << "\n";
  write_maps_jsonl(out, batch.maps);

  nlohmann::json stats;
  stats["config"] = hex64(fnv1a64(cfg));
  stats["seeds"] = a.seeds;
  stats["n"] = a.n;
  stats["genus"] = a.g;
  stats["count"] = a.count;
  stats["attempts"] = batch.total.attempts;
  stats["accepted"] = batch.total.accepted;
  stats["rejected_disconnected"] = batch.total.rejected_disconnected;
  stats["rejected_genus"] = batch.total.rejected_genus;
  nlohmann::json per_seed = nlohmann::json::array();
  for (const auto& st : batch.per_seed)
    per_seed.push_back({{"seed", st.seed},
                        {"attempts", st.attempts},
                        {"accepted", st.accepted},
                        {"rejected_disconnected", st.rejected_disconnected},
                        {"rejected_genus", st.rejected_genus}});
  stats["per_seed"] = std::move(per_seed);
  std::ofstream sf(a.out + ".stats.json");
  sf << stats.dump(2) << "\n";

  if (strict && a.n <= 3 && a.count >= 50) {
    const GluingCensus census = cached_census(a.n);
    std::vector<std::uint64_t> counts(census.class_count(a.g), 0);
    for (const auto& t : batch.maps) {
      int idx = census.class_index(a.g, t.map().canonical_form());
      if (idx < 0) throw Error(ErrorCode::NonOrientableInconsistency, "sample outside census classes");
      ++counts[idx];
    }
    auto res = chi_square_uniform(counts);
    if (res.p_value < a.p_threshold)
      throw Error(ErrorCode::NonOrientableInconsistency,
                  "chi-square uniformity failed: p=" + std::to_string(res.p_value));
  }
  return kExitOk;
}

std::vector<Triangulation> load_maps(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  return read_maps_jsonl(in);
}

int cmd_analyze(const AnalyzeArgs& a, bool strict) {
  auto maps = load_maps(a.in);
  std::set<std::string> want;
  {
    std::stringstream ss(a.metrics);
    std::string tok;
    while (std::getline(ss, tok, ',')) want.insert(tok);
  }
  if (strict)
    for (const auto& t : maps) validate_map_strict(t);

  const std::string cfg = "analyze metrics=" + a.metrics + " eps=" + std::to_string(a.eps) +
                          " in=" + a.in;
  std::ofstream out(a.out);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + a.out);
  out << "# config=" << hex64(fnv1a64(cfg)) << " seeds=\n";
  out << "map_index,metric,key,value\n";
  std::ofstream profile_out;  // wide-format side file, one row per (map, k1)
  auto emit = [&](int idx, const std::string& metric, const std::string& key,
                  const std::string& value) {
    out << idx << ',' << metric << ',' << key << ',' << value << "\n";
  };

  for (std::size_t i = 0; i < maps.size(); ++i) {
    const Triangulation& t = maps[i];
    const int idx = static_cast<int>(i);
    emit(idx, "n", "", std::to_string(t.n()));
    emit(idx, "genus", "", std::to_string(t.genus()));
    if (want.count("diameter")) emit(idx, "diameter", "", std::to_string(diameter(t)));
    if (want.count("balls")) {
      auto violations = check_ball_expansion(t);
      emit(idx, "ball_expansion_violations", "", std::to_string(violations.size()));
      const int center = t.map().vertex_of(t.map().root());
      for (int r = 1;; ++r) {
        BallSummary b = ball(t, center, r);
        emit(idx, "ball", "r=" + std::to_string(r),
             std::to_string(b.volume) + ";" + std::to_string(b.perimeter) + ";" +
                 std::to_string(b.ball_genus));
        if (b.perimeter == 0) break;
      }
    }
    if (want.count("typical")) {
      SplitMix64 rng(fnv1a64(cfg) ^ i);
      auto samples = typical_distance_sample(t, rng, a.typical_pairs);
      long long sum_abs = 0;
      int max_abs = 0;
      for (const auto& s : samples) {
        sum_abs += std::abs(s.gap);
        max_abs = std::max(max_abs, std::abs(s.gap));
      }
      emit(idx, "typical_gap_mean_abs", "",
           std::to_string(static_cast<double>(sum_abs) / samples.size()));
      emit(idx, "typical_gap_max_abs", "", std::to_string(max_abs));
    }
    if (want.count("planarity")) {
      emit(idx, "planarity_radius", "v=root",
           std::to_string(planarity_radius(t, t.map().vertex_of(t.map().root()))));
    }
    if (want.count("profile")) {
      auto p = isoperimetric_profile(t, a.exact_limit_faces, fnv1a64(cfg) ^ i);
      for (const auto& e : p.entries)
        emit(idx, "profile", "k1=" + std::to_string(e.k1),
             std::to_string(e.cut_any) + ";" + std::to_string(e.cut_multicurve) + ";" +
                 (p.exact ? "exact" : "heuristic"));
      if (!profile_out.is_open()) {
        profile_out.open(a.out + ".profile.csv");
        profile_out << "# config=" << hex64(fnv1a64(cfg)) << " seeds=\n";
        profile_out << "map_index,k1,cut_any,cut_multicurve,method\n";
      }
      for (const auto& e : p.entries)
        profile_out << idx << ',' << e.k1 << ',' << e.cut_any << ',' << e.cut_multicurve << ','
                    << (p.exact ? "exact" : "heuristic") << "\n";
    }
    if (want.count("cheeger")) {
      auto h = cheeger(t, a.exact_limit_vertices);
      emit(idx, "cheeger", "",
           h.infinite ? "inf" : std::to_string(h.boundary) + "/" + std::to_string(h.size) + ";" +
                                    (h.exact ? "exact" : "heuristic"));
    }
    if (want.count("isolated")) {
      auto iso = isolated_faces(t, a.eps, a.exact_limit_faces);
      emit(idx, "isolated_faces", "eps=" + std::to_string(a.eps),
           std::to_string(iso.count) + ";" + (iso.exact ? "exact" : "heuristic"));
    }
    if (want.count("tentacles")) {
      auto st = tentacle_stats(t);
      if (st.degenerate) {
        emit(idx, "tentacles_degenerate", "", "1");
      } else {
        emit(idx, "tentacles_T", "", std::to_string(st.tentacle_count));
        emit(idx, "tentacles_M", "", std::to_string(st.tentacle_faces));
        emit(idx, "ladder_ell_max", "", std::to_string(st.ell_max));
        for (std::size_t h = 0; h < st.height_histogram.size(); ++h)
          emit(idx, "tentacle_height", "h=" + std::to_string(h),
               std::to_string(st.height_histogram[h]));
      }
    }
  }
  return kExitOk;
}

int cmd_oracle(const OracleArgs& a) {
  if (a.nmax < 1 || a.nmax > 3) throw Error(ErrorCode::ConfigError, "--nmax must be 1..3");
  nlohmann::json out = nlohmann::json::array();
  for (int n = 1; n <= a.nmax; ++n) {
    const GluingCensus c = cached_census(n);
    for (int g = 0; g <= c.max_genus(); ++g)
      out.push_back({{"n", n}, {"genus", g}, {"count", c.class_count(g)}});
  }
  if (a.out.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::ofstream f(a.out);
    f << out.dump(2) << "\n";
  }
  return kExitOk;
}

void write_svg_scatter(const std::string& path, const std::string& title,
                       const std::vector<std::pair<double, double>>& points) {
  double xmax = 1, ymax = 1;
  for (auto [x, y] : points) {
    xmax = std::max(xmax, x);
    ymax = std::max(ymax, y);
  }
  const int w = 640, h = 420, margin = 50;
  auto sx = [&](double x) { return margin + x / xmax * (w - 2 * margin); };
  auto sy = [&](double y) { return h - margin - y / ymax * (h - 2 * margin); };
  std::ofstream out(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", margin,
                h - margin, w - margin, h - margin);
  out << buf;
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", margin,
                h - margin, margin, margin);
  out << buf;
  std::snprintf(buf, sizeof buf, "<text x=\"%d\" y=\"20\" font-size=\"14\">%s</text>\n", margin,
                title.c_str());
  out << buf;
  std::snprintf(buf, sizeof buf, "<text x=\"%d\" y=\"%d\" font-size=\"12\">log n</text>\n",
                w - margin - 30, h - margin + 30);
  out << buf;
  for (auto [x, y] : points) {
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"steelblue\" fill-opacity=\"0.6\"/>\n",
                  sx(x), sy(y));
    out << buf;
  }
  out << "</svg>\n";
}

int cmd_experiment(const ExperimentArgs& a, bool strict) {
  const std::string cfg = "experiment theta=" + std::to_string(a.theta) + " sizes=" + a.sizes +
                          " count=" + std::to_string(a.count) + " seed=" + std::to_string(a.seed);
  const std::string hash = hex64(fnv1a64(cfg));
  std::ofstream out(a.out_prefix + ".csv");
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + a.out_prefix + ".csv");
  out << "# config=" << hash << " seeds=" << a.seed << "\n";
  out << "theta,n,g,map_index,diameter,gap_mean_abs,gap_max_abs,profile_min_any,profile_min_"
         "multicurve,profile_method,cheeger,cheeger_method,T_n,M_n,ell_max\n";

  std::vector<std::pair<double, double>> scatter;
  for (int n : parse_int_list(a.sizes)) {
    const int g = static_cast<int>(std::lround(a.theta * n));
    if (n < 2 * g - 1) continue;
    BatchResult batch =
        batch_sample(n, g, a.count, {a.seed ^ (static_cast<std::uint64_t>(n) << 32)});
    for (std::size_t i = 0; i < batch.maps.size(); ++i) {
      const Triangulation& t = batch.maps[i];
      if (strict) validate_map_strict(t);
      const int diam = diameter(t);
      SplitMix64 rng(a.seed ^ fnv1a64(cfg) ^ (n * 1000 + i));
      auto gaps = typical_distance_sample(t, rng, 32);
      long long sum_abs = 0;
      int max_abs = 0;
      for (const auto& s : gaps) {
        sum_abs += std::abs(s.gap);
        max_abs = std::max(max_abs, std::abs(s.gap));
      }
      auto profile = isoperimetric_profile(t, 16, a.seed ^ i);
      int min_any = -1, min_mc = -1;
      for (const auto& e : profile.entries) {
        if (e.cut_any >= 0 && (min_any < 0 || e.cut_any < min_any)) min_any = e.cut_any;
        if (e.cut_multicurve >= 0 && (min_mc < 0 || e.cut_multicurve < min_mc))
          min_mc = e.cut_multicurve;
      }
      auto h = cheeger(t, 16);
      auto st = tentacle_stats(t);
      char buf[360];
      std::snprintf(buf, sizeof buf, "%.6g,%d,%d,%zu,%d,%.4f,%d,%d,%d,%s,%.6f,%s,%zu,%zu,%d\n",
                    a.theta, n, g, i, diam, static_cast<double>(sum_abs) / gaps.size(), max_abs,
                    min_any, min_mc, profile.exact ? "exact" : "heuristic",
                    h.infinite ? -1.0 : h.value(), h.exact ? "exact" : "heuristic",
                    st.tentacle_count, st.tentacle_faces, st.ell_max);
      out << buf;
      scatter.push_back({std::log(static_cast<double>(n)), static_cast<double>(diam)});
    }
  }
  write_svg_scatter(a.out_prefix + ".svg", "diameter vs log n (config " + hash + ")", scatter);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genuslab: exact counting, sampling and geometry of random high-genus triangulations"};
  app.require_subcommand(1);
  bool strict = false;
  app.add_flag("--strict", strict, "abort with exit code 2 on any invariant violation");

  TauArgs tau_args;
  auto* tau = app.add_subcommand("tau", "build/extend the exact tau(n,g) table and ratio diagnostics");
  tau->add_option("--nmax", tau_args.nmax, "largest n to fill");
  tau->add_option("--theta", tau_args.theta_list, "comma list of theta values for ratios");
  tau->add_option("--sizes", tau_args.sizes, "comma list of sizes for ratios");
  tau->add_option("--out", tau_args.out, "ratio CSV path (default stdout)");

  ConstantsArgs c_args;
  auto* con = app.add_subcommand("constants", "numeric constants attached to theta");
  con->add_option("--theta", c_args.theta, "single theta, JSON output");
  con->add_option("--grid", c_args.grid, "a,b,steps CSV sweep");
  con->add_option("--out", c_args.out, "output path (default stdout)");

  SampleArgs s_args;
  auto* sam = app.add_subcommand("sample", "uniform rooted triangulations of fixed size and genus");
  sam->add_option("--n", s_args.n, "half face count")->required();
  sam->add_option("--genus", s_args.g, "genus")->required();
  sam->add_option("--count", s_args.count, "number of maps");
  sam->add_option("--seed", s_args.seeds, "seed list, one stream each");
  sam->add_option("--out", s_args.out, "jsonl output");
  sam->add_option("--p-threshold", s_args.p_threshold, "strict-mode chi-square threshold");

  AnalyzeArgs an_args;
  auto* ana = app.add_subcommand("analyze", "graph/geometry observables over a map stream");
  ana->add_option("--metrics", an_args.metrics,
                  "comma list: diameter,balls,typical,planarity,profile,cheeger,isolated,tentacles");
  ana->add_option("--in", an_args.in, "jsonl input");
  ana->add_option("--out", an_args.out, "csv output");
  ana->add_option("--eps", an_args.eps, "epsilon for isolated faces");
  ana->add_option("--exact-limit-faces", an_args.exact_limit_faces, "exact profile limit");
  ana->add_option("--exact-limit-vertices", an_args.exact_limit_vertices, "exact cheeger limit");
  ana->add_option("--typical-pairs", an_args.typical_pairs, "quadruples per map");

  OracleArgs o_args;
  auto* ora = app.add_subcommand("oracle", "brute-force gluing census counts (n <= 3)");
  ora->add_option("--nmax", o_args.nmax, "largest n to enumerate");
  ora->add_option("--out", o_args.out, "json output path (default stdout)");

  ExperimentArgs e_args;
  auto* exp = app.add_subcommand("experiment", "theta sweep: sample, analyze, emit CSV + SVG");
  exp->add_option("--theta", e_args.theta, "genus ratio")->required();
  exp->add_option("--sizes", e_args.sizes, "comma list of n");
  exp->add_option("--count", e_args.count, "maps per size");
  exp->add_option("--seed", e_args.seed, "base seed");
  exp->add_option("--out-prefix", e_args.out_prefix, "output prefix for .csv/.svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (tau->parsed()) return cmd_tau(tau_args);
    if (con->parsed()) return cmd_constants(c_args);
    if (sam->parsed()) return cmd_sample(s_args, strict);
    if (ana->parsed()) return cmd_analyze(an_args, strict);
    if (ora->parsed()) return cmd_oracle(o_args);
    if (exp->parsed()) return cmd_experiment(e_args, strict);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ConfigError:
      case ErrorCode::IoError:
        return kExitConfig;
      default:
        return kExitInvariant;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
