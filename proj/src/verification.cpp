#include "goodwill/verification.hpp"

#include <cmath>
#include <stdexcept>

namespace goodwill {

DominanceReport verify_dominance(const ScenarioParams& params, const LinearValueFunction& vf,
                                 const std::vector<LabeledControl>& controls, int n_paths,
                                 std::uint64_t seed) {
  const LiftedState x0 = initial_lifted_state(params);
  DominanceReport report;
  report.v_value = value_function(vf, 0.0, x0);
  for (const auto& [label, control] : controls) {
    const McEstimate est = mc_estimate_objective(params, control, n_paths, params.dt(), seed);
    report.control_labels.push_back(label);
    report.j_means.push_back(est.mean);
    report.j_half_widths.push_back(est.half_width_95);
    if (est.mean - 3.0 * est.half_width_95 > report.v_value) report.violations.push_back(label);
  }
  return report;
}

double fundamental_identity_gap(const ScenarioParams& params, const LinearValueFunction& vf,
                                const ControlPath& control) {
  if (control.steps() != vf.steps() ||
      std::abs(control.dt - vf.dt) > 1e-9 * std::max(1.0, vf.dt))
    throw std::invalid_argument("fundamental_identity_gap: control grid does not match");
  std::vector<double> slack(vf.bw.size());
  for (std::size_t k = 0; k < slack.size(); ++k) {
    const double z = control.values[k];
    slack[k] = hamiltonian(vf.bw[k], params.beta).h0 - vf.bw[k] * z + params.beta * z * z;
  }
  return trapezoid(slack, vf.dt);
}

McIdentityResult mc_identity_check(const ScenarioParams& params, const LinearValueFunction& vf,
                                   const ControlPath& control, int n_paths, std::uint64_t seed) {
  const double gap = fundamental_identity_gap(params, vf, control);
  std::vector<double> samples =
      mc_objective_samples(params, control, n_paths, params.dt(), seed);
  for (double& s : samples) s += gap;
  const McEstimate est = estimate_from_samples(samples);
  McIdentityResult out;
  out.lhs = value_function(vf, 0.0, initial_lifted_state(params));
  out.rhs_mean = est.mean;
  out.half_width = est.half_width_95;
  return out;
}

double discretization_allowance(const ScenarioParams& params, const ControlPath& control,
                                int n_paths, std::uint64_t seed) {
  const McEstimate coarse =
      mc_estimate_objective(params, control, n_paths, params.dt(), seed);
  const ScenarioParams fine = params.resampled(2 * (params.n_points() - 1) + 1);
  const McEstimate refined =
      mc_estimate_objective(fine, control.refined(2), n_paths, fine.dt(), seed);
  return 2.0 * std::abs(coarse.mean - refined.mean);
}

}  // namespace goodwill
