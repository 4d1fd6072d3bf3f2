#include "goodwill/stability.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace goodwill {

namespace {

// Singularity-free residuals with the same sign pattern as the originals on
// (0, pi): multiply through by sin / sinh (> 0 there).
double cot_form(double g, double a0) { return g * std::cos(g) - a0 * std::sin(g); }
double coth_form(double g, double a0) { return g * std::cosh(g) - a0 * std::sinh(g); }

double bisect(double lo, double hi, double a0, RootEquation eq) {
  auto f = [&](double g) { return eq == RootEquation::Cot ? cot_form(g, a0) : coth_form(g, a0); };
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo > 0.0) == (fm > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double gamma_root(double a0, RootEquation eq) {
  const double pi = std::numbers::pi;
  if (eq == RootEquation::Cot) {
    // gamma*cot(gamma) decreases from 1 to -inf on (0, pi).
    if (a0 >= 1.0)
      throw std::domain_error("gamma_root: gamma*cot(gamma) = a0 has no root in (0, pi) for a0 >= 1");
    return bisect(1e-12, pi - 1e-12, a0, eq);
  }
  // gamma*coth(gamma) increases from 1 to pi*coth(pi) on (0, pi).
  const double upper = pi * std::cosh(pi) / std::sinh(pi);
  if (a0 <= 1.0 || a0 >= upper)
    throw std::domain_error(
        "gamma_root: gamma*coth(gamma) = a0 has no root in (0, pi) for a0 outside (1, pi*coth(pi))");
  return bisect(1e-12, pi - 1e-12, a0, eq);
}

StabilityVerdict invariant_measure_condition(double a0, double a1, RootEquation eq) {
  StabilityVerdict verdict;
  verdict.a0 = a0;
  verdict.a1 = a1;
  try {
    verdict.gamma_root = gamma_root(a0, eq);
    verdict.bound = std::sqrt(verdict.gamma_root * verdict.gamma_root + a0 * a0);
    verdict.holds = (a0 < 1.0) && (a0 < -a1) && (-a1 < verdict.bound);
  } catch (const std::domain_error&) {
    verdict.gamma_root = std::numeric_limits<double>::quiet_NaN();
    verdict.bound = std::numeric_limits<double>::quiet_NaN();
    verdict.holds = false;
  }
  return verdict;
}

}  // namespace goodwill
