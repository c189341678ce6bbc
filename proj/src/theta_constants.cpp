#include "genuslab/theta_constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace genuslab {

namespace {

// log((1+s)/(1-s)) with s = sqrt(1-4h), written via 1-s^2 = 4h so it stays
// finite-precision stable over the whole h range
double log_ratio(double h, double s) { return 2.0 * std::log1p(s) - std::log(4.0 * h); }

}  // namespace

double d_of_h(double h) {
  if (!(h > 0.0) || h > 0.25) throw Error(ErrorCode::DomainError, "d_of_h needs h in (0, 1/4]");
  const double s2 = 1.0 - 4.0 * h;
  if (s2 <= 0.0) return 1.0 / 6.0;
  const double s = std::sqrt(s2);
  if (s < 1e-4) {
    // removable singularity at h = 1/4
    return 2.0 * h * (1.0 + s2 / 3.0 + s2 * s2 / 5.0) / (1.0 + 8.0 * h);
  }
  return h * log_ratio(h, s) / ((1.0 + 8.0 * h) * s);
}

double h_of_theta(double theta) {
  if (!(theta >= 0.0) || theta >= 0.5)
    throw Error(ErrorCode::DomainError, "h_of_theta needs theta in [0, 1/2)");
  if (theta == 0.0) return 0.25;
  const double target = (1.0 - 2.0 * theta) / 6.0;
  // bracketed secant with bisection fallback; d is increasing
  double lo = 1e-18, hi = 0.25;
  double flo = -target, fhi = d_of_h(hi) - target;
  double h = 0.5 * (lo + hi), fh = d_of_h(h) - target;
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    if (fh == 0.0) break;
    if (fh < 0.0) {
      lo = h;
      flo = fh;
    } else {
      hi = h;
      fhi = fh;
    }
    double next = lo + (hi - lo) * (-flo) / (fhi - flo);  // secant on the bracket
    const double margin = 0.01 * (hi - lo);
    if (!(next > lo + margin) || !(next < hi - margin)) next = 0.5 * (lo + hi);
    h = next;
    fh = d_of_h(h) - target;
  }
  if (std::abs(fh) > 1e-12) throw Error(ErrorCode::NoConvergence, "h_of_theta residual above 1e-12");
  return h;
}

double lambda_of_h(double h) { return h / std::pow(1.0 + 8.0 * h, 1.5); }

double lambda_of_theta(double theta) { return lambda_of_h(h_of_theta(theta)); }

namespace {

struct Simpson {
  const std::function<double(double)>& f;
  int max_depth;

  double run(double a, double b, double tol) const {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return recurse(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 0);
  }

  static double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol,
                 int depth) const {
    const double m = 0.5 * (a + b);
    const double lm = f(0.5 * (a + m)), rm = f(0.5 * (m + b));
    const double left = simpson(a, m, fa, lm, fm), right = simpson(m, b, fm, rm, fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= max_depth) throw Error(ErrorCode::QuadratureFailure, "adaptive depth exhausted");
    return recurse(a, m, fa, lm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, rm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a >= b) return 0.0;
  return Simpson{f, 64}.run(a, b, tol);
}

double f_of_theta(double theta) {
  if (!(theta >= 0.0) || theta > 0.5) throw Error(ErrorCode::DomainError, "f needs theta in [0, 1/2]");
  if (theta == 0.0) return std::log(12.0 * std::sqrt(3.0));
  if (theta == 0.5) return std::log(6.0) - 1.0;
  if (theta < 0.01) {
    static bool warned = false;
    if (!warned) {
      std::fprintf(stderr, "f_of_theta: theta=%g below 0.01, returning the theta=0 endpoint value\n",
                   theta);
      warned = true;
    }
    return std::log(12.0 * std::sqrt(3.0));
  }
  // substitute u = 1/t: integral of log(1/lambda(u)) / u^2 over [theta, 1/2];
  // the integrand has a log singularity at u = 1/2, handled by u = 1/2 - e^{-v}
  auto g = [](double u) { return -std::log(lambda_of_theta(u)) / (u * u); };
  const double cut = std::max(theta, 0.45);
  double integral = 0.0;
  if (theta < cut) integral += adaptive_simpson(g, theta, cut, 1e-12);
  // v stops at 36 so that 0.5 - e^{-v} stays strictly below 0.5 in double
  // precision; the remaining tail is ~4e-14
  const double v0 = -std::log(0.5 - cut);
  const double v1 = 36.0;
  auto near_end = [&](double v) {
    const double e = std::exp(-v);
    return g(0.5 - e) * e;
  };
  integral += adaptive_simpson(near_end, v0, v1, 1e-12);
  return 2.0 * theta * (std::log(12.0 * theta) - 1.0) + theta * integral;
}

double f_second(double theta) {
  if (!(theta > 0.0) || theta >= 0.5)
    throw Error(ErrorCode::DomainError, "f_second needs theta in (0, 1/2)");
  const double h = h_of_theta(theta);
  const double s = std::sqrt(1.0 - 4.0 * h);
  const double num = -2.0 * (1.0 + 6.0 * h + 128.0 * h * h * h) * s;
  const double den =
      3.0 * h * (-(1.0 + 8.0 * h) * s + (1.0 - 2.0 * h + 16.0 * h * h) * log_ratio(h, s));
  return num / den;
}

ConjectureConstants conjecture_constants(double theta) {
  if (!(theta > 0.0) || theta >= 0.5)
    throw Error(ErrorCode::DomainError, "conjecture_constants needs theta in (0, 1/2)");
  const double h = h_of_theta(theta);
  const double s = std::sqrt(1.0 - 4.0 * h);
  // (1-2h-s)/(2h) rationalized, cancellation-free
  const double m = 2.0 * h / (1.0 - 2.0 * h + s);
  const double D = 1.0 / std::log(1.0 / m);
  return {m, D, 3.0 * D};
}

namespace {

// f' by central differences with one Richardson step
double fprime(double x) {
  const double d = 1e-3;
  const double c1 = (f_of_theta(x + d) - f_of_theta(x - d)) / (2.0 * d);
  const double c2 = (f_of_theta(x + 0.5 * d) - f_of_theta(x - 0.5 * d)) / d;
  return (4.0 * c2 - c1) / 3.0;
}

}  // namespace

ProofConstants proof_constants(double theta) {
  if (!(theta > 0.0) || theta >= 0.5)
    throw Error(ErrorCode::DomainError, "proof_constants needs theta in (0, 1/2)");
  const double lo = theta / 4.0, hi = theta / 2.0 + 0.25;

  // refine the grid until the max is stable to 1e-4; reuse dyadic points
  std::vector<double> cache;  // indexed on the finest grid
  int n = 8;
  const int n_limit = 4096;
  double prev = -1.0, max_fp = 0.0;
  while (true) {
    if (cache.empty())
      cache.assign(static_cast<std::size_t>(n_limit) + 1, std::nan(""));
    max_fp = 0.0;
    const int stride = n_limit / n;
    for (int i = 0; i <= n; ++i) {
      double& slot = cache[static_cast<std::size_t>(i) * stride];
      if (std::isnan(slot)) slot = std::abs(fprime(lo + (hi - lo) * i / n));
      max_fp = std::max(max_fp, slot);
    }
    if (prev >= 0.0 && std::abs(max_fp - prev) <= 1e-4) break;
    prev = max_fp;
    n *= 2;
    if (n > n_limit) throw Error(ErrorCode::NoConvergence, "max|f'| grid did not stabilize");
  }

  double max_f = std::max(f_of_theta(0.0), f_of_theta(0.5));
  for (int i = 1; i < 32; ++i) max_f = std::max(max_f, f_of_theta(0.5 * i / 32.0));

  ProofConstants pc;
  pc.max_abs_fprime = max_fp;
  pc.a = std::pow(lambda_of_theta(theta / 2.0 + 0.25), 2) * std::exp(-max_fp);
  pc.b = max_f + 2.0 * max_fp;
  pc.b_prime = pc.b + 2.0 * std::log(6.0);
  pc.delta = theta / (4.0 * (pc.b_prime + std::log(2.0)));
  pc.K = 20.0 / theta;
  return pc;
}

ThetaConstants compute_theta_constants(double theta) {
  ThetaConstants c;
  c.theta = theta;
  c.h = h_of_theta(theta);
  c.lambda = lambda_of_h(c.h);
  c.f = f_of_theta(theta);
  c.f_second = f_second(theta);
  const auto cc = conjecture_constants(theta);
  c.m = cc.m;
  c.D = cc.D;
  c.D_prime = cc.D_prime;
  const auto pc = proof_constants(theta);
  c.a = pc.a;
  c.b = pc.b;
  c.b_prime = pc.b_prime;
  c.delta = pc.delta;
  c.K = pc.K;
  c.max_abs_fprime = pc.max_abs_fprime;
  return c;
}

}  // namespace genuslab
