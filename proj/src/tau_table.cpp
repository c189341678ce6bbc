#include "genuslab/tau_table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "genuslab/rng.hpp"
#include "genuslab/theta_constants.hpp"

namespace genuslab {

namespace {
const mpz_class kZero = 0;
}

const mpz_class& TauTable::at(int n, int g) const {
  if (n < 1 || n > n_max_ || g < 0 || g > genus_cap(n)) return kZero;
  return rows_[n][g];
}

mpq_class TauTable::tau_q(int n, int g) const {
  if (n == 0) return g == 0 ? seed_ : mpq_class(0);
  return mpq_class(at(n, g));
}

mpq_class TauTable::recurrence_rhs(int n, int g) const {
  mpq_class rhs = 4 * n * (3 * n - 2) * (3 * n - 4) * tau_q(n - 2, g - 1);
  rhs += 4 * (3 * n - 1) * tau_q(n - 1, g);
  // convolution: integer interior plus the explicit seed-cell terms
  mpz_class conv = 0;
  for (int i = 1; i <= n - 3; ++i) {
    const int j = n - 2 - i;
    const int g1_hi = std::min(g, genus_cap(i));
    for (int g1 = 0; g1 <= g1_hi; ++g1) {
      const int g2 = g - g1;
      if (g2 > genus_cap(j)) continue;
      const mpz_class& wi = weighted_[i][g1];
      if (wi == 0) continue;
      const mpz_class& wj = weighted_[j][g2];
      if (wj == 0) continue;
      mpz_addmul(conv.get_mpz_t(), wi.get_mpz_t(), wj.get_mpz_t());
    }
  }
  rhs += 4 * mpq_class(conv);
  if (n == 2 && g == 0) rhs += 16 * seed_ * seed_;
  if (n >= 3) rhs += 16 * (3 * n - 4) * seed_ * tau_q(n - 2, g);
  if (n == 1 && g == 1) rhs += 2;
  rhs.canonicalize();
  return rhs;
}

void TauTable::set_row_from_census(const GluingCensus& c) {
  const int n = c.n;
  if (static_cast<int>(rows_.size()) <= n) {
    rows_.resize(n + 1);
    weighted_.resize(n + 1);
  }
  rows_[n].assign(genus_cap(n) + 1, 0);
  weighted_[n].assign(genus_cap(n) + 1, 0);
  for (int g = 0; g <= genus_cap(n); ++g) {
    rows_[n][g] = mpz_class(static_cast<unsigned long>(c.class_count(g)));
    weighted_[n][g] = (3 * n + 2) * rows_[n][g];
  }
  n_max_ = std::max(n_max_, n);
}

void TauTable::check_row(int n) const {
  for (int g = 0; g <= genus_cap(n); ++g) {
    mpq_class rhs = recurrence_rhs(n, g);
    mpq_class lhs = (n + 1) * tau_q(n, g);
    if (lhs != rhs)
      throw Error(ErrorCode::InconsistentSeed,
                  "recurrence fails at n=" + std::to_string(n) + " g=" + std::to_string(g));
  }
}

TauTable TauTable::calibrate_seed(const GluingCensus& c1, const GluingCensus& c2,
                                  const GluingCensus& c3) {
  if (c1.n != 1 || c2.n != 2 || c3.n != 3)
    throw Error(ErrorCode::InconsistentSeed, "censuses must cover n=1,2,3");
  TauTable t;
  t.set_row_from_census(c1);
  t.set_row_from_census(c2);
  t.set_row_from_census(c3);

  // At n=3 the recurrence is linear in the seed cell s:
  //   4 tau(3,g) = A(g) + B(g) s,  B(g) = 80 tau(1,g).
  bool found = false;
  mpq_class seed;
  for (int g = 0; g <= genus_cap(3); ++g) {
    mpq_class a = 420 * t.tau_q(1, g - 1) + 32 * t.tau_q(2, g);
    mpq_class b = 80 * t.tau_q(1, g);
    mpq_class lhs = 4 * t.tau_q(3, g);
    if (b != 0) {
      mpq_class s = (lhs - a) / b;
      s.canonicalize();
      if (found && s != seed)
        throw Error(ErrorCode::InconsistentSeed, "n=3 rows disagree on the seed cell");
      seed = s;
      found = true;
    } else if (lhs != a) {
      throw Error(ErrorCode::InconsistentSeed,
                  "n=3 g=" + std::to_string(g) + " row is seed-independent and inconsistent");
    }
  }
  if (!found) throw Error(ErrorCode::InconsistentSeed, "no n=3 row determines the seed cell");
  t.seed_ = seed;
  t.seeded_ = true;
  // the calibrated seed must also reproduce the census at n=1 and n=2
  for (int n = 1; n <= 3; ++n) t.check_row(n);
  return t;
}

void TauTable::extend(int n_target) {
  if (!seeded_) throw Error(ErrorCode::NotSeeded, "calibrate_seed first");
  if (n_target <= n_max_) return;
  rows_.resize(n_target + 1);
  weighted_.resize(n_target + 1);
  for (int n = n_max_ + 1; n <= n_target; ++n) {
    const int gcap = genus_cap(n);
    rows_[n].assign(gcap + 1, 0);
    weighted_[n].assign(gcap + 1, 0);
    // entries across g depend only on earlier rows; fill them in parallel
#pragma omp parallel for schedule(dynamic)
    for (int g = 0; g <= gcap; ++g) {
      mpq_class rhs = recurrence_rhs(n, g);
      mpq_class val = rhs / (n + 1);
      val.canonicalize();
      if (val.get_den() != 1) {
        // flagged after the loop; keep the offending cell empty
        rows_[n][g] = -1;
      } else {
        rows_[n][g] = val.get_num();
        weighted_[n][g] = (3 * n + 2) * rows_[n][g];
      }
    }
    for (int g = 0; g <= gcap; ++g)
      if (rows_[n][g] < 0)
        throw Error(ErrorCode::NonIntegralEntry,
                    "tau(" + std::to_string(n) + "," + std::to_string(g) + ") is not an integer");
    n_max_ = n;
  }
}

void TauTable::save_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << "# seed_cell=" << seed_.get_str() << "\n";
  out << "n,g,tau\n";
  for (int n = 1; n <= n_max_; ++n)
    for (int g = 0; g <= genus_cap(n); ++g) out << n << ',' << g << ',' << rows_[n][g].get_str() << "\n";
}

TauTable TauTable::load_csv(const std::string& path, int spot_checks) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# seed_cell=", 0) != 0)
    throw Error(ErrorCode::IoError, "missing seed_cell header in " + path);
  TauTable t;
  t.seed_ = mpq_class(line.substr(12));
  t.seed_.canonicalize();
  t.seeded_ = true;
  if (!std::getline(in, line) || line != "n,g,tau")
    throw Error(ErrorCode::IoError, "missing column header in " + path);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string ns, gs, vs;
    if (!std::getline(ss, ns, ',') || !std::getline(ss, gs, ',') || !std::getline(ss, vs))
      throw Error(ErrorCode::IoError, "bad row: " + line);
    int n = std::stoi(ns), g = std::stoi(gs);
    if (n < 1 || g < 0 || g > genus_cap(n)) throw Error(ErrorCode::IoError, "row out of range: " + line);
    if (static_cast<int>(t.rows_.size()) <= n) {
      t.rows_.resize(n + 1);
      t.weighted_.resize(n + 1);
    }
    if (t.rows_[n].empty()) {
      t.rows_[n].assign(genus_cap(n) + 1, 0);
      t.weighted_[n].assign(genus_cap(n) + 1, 0);
    }
    t.rows_[n][g] = mpz_class(vs);
    t.weighted_[n][g] = (3 * n + 2) * t.rows_[n][g];
    t.n_max_ = std::max(t.n_max_, n);
  }
  for (int n = 1; n <= t.n_max_; ++n)
    if (t.rows_[n].empty()) throw Error(ErrorCode::IoError, "missing row n=" + std::to_string(n));

  // corruption check: recurrence on random rows
  SplitMix64 rng(0x7461752d63737621ULL ^ static_cast<std::uint64_t>(t.n_max_));
  for (int k = 0; k < spot_checks && t.n_max_ >= 2; ++k) {
    int n = 2 + static_cast<int>(rng.next_below(t.n_max_ - 1));
    int g = static_cast<int>(rng.next_below(genus_cap(n) + 1));
    if ((n + 1) * t.tau_q(n, g) != t.recurrence_rhs(n, g))
      throw Error(ErrorCode::IoError, "table corrupted at n=" + std::to_string(n) + " g=" + std::to_string(g));
  }
  return t;
}

std::vector<TauTable::RatioRow> TauTable::ratio_diagnostic(double theta,
                                                           const std::vector<int>& sizes) const {
  std::vector<RatioRow> out;
  for (int n : sizes) {
    if (n < 2 || n > n_max_) throw Error(ErrorCode::TableTooSmall, "need table up to n=" + std::to_string(n));
    const int g = static_cast<int>(std::floor(theta * n + 1e-12));
    const mpz_class& denom = at(n, g);
    if (denom == 0) throw Error(ErrorCode::TableTooSmall, "tau(n,g) = 0 at requested point");
    mpq_class ratio(at(n - 1, g), denom);
    ratio.canonicalize();
    const double r = ratio.get_d();
    const double lam = lambda_of_theta(static_cast<double>(g) / n);
    out.push_back({n, g, r, lam, std::abs(r - lam)});
  }
  return out;
}

}  // namespace genuslab
