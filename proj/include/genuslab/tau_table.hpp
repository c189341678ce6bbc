#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

#include "genuslab/census.hpp"
#include "genuslab/error.hpp"

namespace genuslab {

/// Exact table of tau(n,g), the number of rooted triangulations with 2n faces
/// and genus g, filled by the Goulden-Jackson recurrence
///   (n+1) tau(n,g) = 4n(3n-2)(3n-4) tau(n-2,g-1) + 4(3n-1) tau(n-1,g)
///     + 4 sum_{i+j=n-2} sum_{g1+g2=g} (3i+2)(3j+2) tau(i,g1) tau(j,g2)
///     + 2 [n=g=1].
/// The convolution's (0,0) cell is an exact rational calibrated against the
/// brute-force census rather than taken from any literature convention.
class TauTable {
 public:
  /// Unseeded empty table; extend() refuses until calibrated.
  TauTable() = default;

  /// Seed tau(1,.), tau(2,.) from the censuses and solve for the unique
  /// rational seed cell reproducing tau(3,g) for every g. Throws
  /// InconsistentSeed when no single rational works.
  static TauTable calibrate_seed(const GluingCensus& c1, const GluingCensus& c2,
                                 const GluingCensus& c3);

  /// Fill all rows up to n_target. Throws NotSeeded / NonIntegralEntry.
  void extend(int n_target);

  int n_max() const { return n_max_; }
  bool seeded() const { return seeded_; }
  const mpq_class& seed_cell() const { return seed_; }

  static int genus_cap(int n) { return n >= 0 ? (n + 1) / 2 : -1; }

  /// tau(n,g); exact zero outside the stored triangular range.
  const mpz_class& at(int n, int g) const;

  /// Recompute the recurrence right-hand side for (n,g) from stored entries.
  mpq_class recurrence_rhs(int n, int g) const;

  void save_csv(const std::string& path) const;
  /// Reload; re-verifies the recurrence on `spot_checks` random rows.
  static TauTable load_csv(const std::string& path, int spot_checks = 10);

  struct RatioRow {
    int n, g;
    double ratio, lambda_ref, error;
  };
  /// Exact ratios tau(n-1,g)/tau(n,g) with g = floor(theta*n), compared to
  /// lambda(g/n). Throws TableTooSmall.
  std::vector<RatioRow> ratio_diagnostic(double theta, const std::vector<int>& sizes) const;

 private:
  mpq_class tau_q(int n, int g) const;
  void set_row_from_census(const GluingCensus& c);
  void check_row(int n) const;

  mpq_class seed_ = 0;
  bool seeded_ = false;
  int n_max_ = 0;
  std::vector<std::vector<mpz_class>> rows_;      // rows_[n][g], g <= genus_cap(n)
  std::vector<std::vector<mpz_class>> weighted_;  // (3n+2) * tau(n,g), convolution cache
};

}  // namespace genuslab
