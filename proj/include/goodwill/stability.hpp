#pragma once

namespace goodwill {

/// Which transcendental equation defines the auxiliary root on (0, pi).
///
/// Cot is the default: gamma*cot(gamma) = a0 has a unique root there for every
/// a0 < 1 and reproduces the classical delay-equation stability boundary.
/// Coth is accepted for comparison; gamma*coth(gamma) ranges over
/// (1, pi*coth(pi)) on (0, pi), so for the usual a0 <= 0 it honestly has no
/// root and the condition cannot be evaluated.
enum class RootEquation { Cot, Coth };

struct StabilityVerdict {
  double a0 = 0.0;
  double a1 = 0.0;
  double gamma_root = 0.0;  // NaN when the defining equation has no root
  double bound = 0.0;       // sqrt(gamma_root^2 + a0^2), NaN when rootless
  bool holds = false;       // a0 < 1 and a0 < -a1 < bound
};

/// Root of the chosen equation on (0, pi), bisection to ~1e-13.
/// Throws std::domain_error when no root exists (Cot: a0 >= 1;
/// Coth: a0 <= 1 or a0 >= pi*coth(pi)).
double gamma_root(double a0, RootEquation eq = RootEquation::Cot);

/// Existence condition for a unique non-degenerate invariant measure of the
/// uncontrolled point-delay dynamics: a0 < 1 and a0 < -a1 < sqrt(gamma^2 + a0^2).
StabilityVerdict invariant_measure_condition(double a0, double a1,
                                             RootEquation eq = RootEquation::Cot);

}  // namespace goodwill
