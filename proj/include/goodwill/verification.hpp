#pragma once

#include <string>
#include <vector>

#include "goodwill/hjb.hpp"
#include "goodwill/sdde.hpp"

namespace goodwill {

struct LabeledControl {
  std::string label;
  ControlPath control;
};

/// Monte Carlo check of value dominance: the solved v(0, x_init) must sit above
/// every estimated J (up to confidence width); any control whose lower-bounded
/// mean exceeds v is listed as a violation.
struct DominanceReport {
  double v_value = 0.0;
  std::vector<std::string> control_labels;
  std::vector<double> j_means;
  std::vector<double> j_half_widths;
  std::vector<std::string> violations;  // labels with j_mean - 3*half_width > v_value
};

/// Estimates J for each control with common random numbers (one shared seed,
/// path p always uses NoisePath{seed, p}) and compares against
/// v(0, M(eta0, eta, delta)).
DominanceReport verify_dominance(const ScenarioParams& params, const LinearValueFunction& vf,
                                 const std::vector<LabeledControl>& controls, int n_paths,
                                 std::uint64_t seed);

/// Deterministic Hamiltonian slack
///   G(z) = integral_0^T [ H0(<B,w>) - <B,w> z + beta z^2 ] ds  (trapezoid),
/// which is >= 0 and vanishes exactly at z = z*. The identity J(z) = v - G(z)
/// holds up to discretization.
double fundamental_identity_gap(const ScenarioParams& params, const LinearValueFunction& vf,
                                const ControlPath& control);

struct McIdentityResult {
  double lhs = 0.0;       // v(0, x_init)
  double rhs_mean = 0.0;  // MC mean of J-sample + G(z)
  double half_width = 0.0;
};

/// Monte Carlo instantiation of the v = J + slack identity for one control.
McIdentityResult mc_identity_check(const ScenarioParams& params, const LinearValueFunction& vf,
                                   const ControlPath& control, int n_paths, std::uint64_t seed);

/// Empirical discretization allowance 2 * |J_dt - J_{dt/2}| for one control
/// (same seed and path count at both resolutions; conservative, includes the
/// Monte Carlo wobble of the two estimates).
double discretization_allowance(const ScenarioParams& params, const ControlPath& control,
                                int n_paths, std::uint64_t seed);

}  // namespace goodwill
