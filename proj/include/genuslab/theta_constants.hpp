#pragma once
#include <functional>
#include <vector>

#include "genuslab/error.hpp"

namespace genuslab {

/// Every numeric constant attached to a genus ratio theta = g/n.
struct ThetaConstants {
  double theta;
  double h;         // root of d(h-form) = (1-2 theta)/6 in (0, 1/4]
  double lambda;    // h/(1+8h)^{3/2}
  double f;         // exponential growth rate
  double f_second;  // closed form, negative on (0, 1/2)
  double m;         // conjectured volume-growth base, in (0,1)
  double D;         // 1/log(1/m)
  double D_prime;   // 3/log(1/m), exactly 3*D
  double a;
  double b;
  double b_prime;          // b + 2 log 6
  double delta;            // theta / (4 (b' + log 2))
  double K;                // 20 / theta
  double max_abs_fprime;   // over [theta/4, theta/2 + 1/4]
};

/// d as a function of h in (0, 1/4]; removable limit 1/6 at h = 1/4.
double d_of_h(double h);

/// Unique h in (0, 1/4] with d(h) = (1-2 theta)/6; theta in [0, 1/2).
/// Bisection, residual <= 1e-12.
double h_of_theta(double theta);

double lambda_of_h(double h);
double lambda_of_theta(double theta);
inline double lambda_critical() { return lambda_of_h(0.25); }

/// f(theta) = 2 theta log(12 theta/e) + theta Int_2^{1/theta} log(1/lambda(1/t)) dt,
/// endpoints f(0) = log(12 sqrt 3) and f(1/2) = log(6/e) returned exactly.
/// The integrand has a log singularity at t = 2, handled by an exponential
/// substitution near that endpoint. For 0 < theta < 0.01 the endpoint value
/// f(0) is returned instead (the integral's upper limit diverges); a one-time
/// note is written to stderr.
double f_of_theta(double theta);

/// Closed form in h: -2(1+6h+128h^3) sqrt(1-4h) /
///   (3h (-(1+8h) sqrt(1-4h) + (1-2h+16h^2) log((1+sqrt(1-4h))/(1-sqrt(1-4h))))).
double f_second(double theta);

struct ConjectureConstants {
  double m, D, D_prime;
};
ConjectureConstants conjecture_constants(double theta);

struct ProofConstants {
  double a, b, b_prime, delta, K, max_abs_fprime;
};
/// max|f'| by Richardson-extrapolated central differences on a refining grid
/// (stable to 1e-4); max f over [0,1/2] by grid plus exact endpoints.
ProofConstants proof_constants(double theta);

ThetaConstants compute_theta_constants(double theta);

/// Adaptive Simpson quadrature to absolute tolerance; QuadratureFailure when
/// the recursion depth limit is hit before the tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace genuslab
