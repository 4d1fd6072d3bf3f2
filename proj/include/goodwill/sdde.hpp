#pragma once

#include <optional>
#include <vector>

#include "goodwill/control.hpp"
#include "goodwill/rng.hpp"
#include "goodwill/scenario.hpp"

namespace goodwill {

/// One simulated goodwill path together with the control that produced it.
struct TrajectorySample {
  std::vector<double> times;
  std::vector<double> goodwill;
  ControlPath control;
  double terminal = 0.0;
};

/// Euler-Maruyama path of the delayed goodwill dynamics.
///
/// dt must equal the segment spacing r/(n_points-1); history values before
/// time 0 are read from eta/delta, delay convolutions use the trapezoidal
/// rule on the shared grid. Point-delay scenarios replace the forgetting
/// convolution by a1 * y(t - r).
TrajectorySample simulate_sdde(const ScenarioParams& params, const ControlPath& control,
                               const NoisePath& noise, double dt);

/// Tabulated scalar function, evaluated by linear interpolation (linear
/// extrapolation with the boundary slopes outside the table range).
struct TabulatedFunction {
  std::vector<double> x;
  std::vector<double> y;
  double operator()(double q) const;
  void validate(const char* name) const;
};

/// Objective choice for Monte Carlo estimation. Defaults to the built-in
/// quadratic-cost / linear-utility pair: gamma*y(T) - sum beta*z^2*dt.
/// Either side can be replaced by a tabulated function.
struct ObjectiveSpec {
  std::optional<TabulatedFunction> spend_cost;        // h0(z), convex cost
  std::optional<TabulatedFunction> terminal_utility;  // phi0(x), concave utility
};

struct McEstimate {
  double mean = 0.0;
  double half_width_95 = 0.0;
  int n_paths = 0;
};

/// Objective value of one simulated trajectory.
double objective_sample(const ScenarioParams& params, const TrajectorySample& path,
                        const ObjectiveSpec& objective = {});

/// Per-path objective samples over n_paths independent noise paths
/// (path p uses NoisePath{seed, p}; deterministic and order-insensitive).
std::vector<double> mc_objective_samples(const ScenarioParams& params, const ControlPath& control,
                                         int n_paths, double dt, std::uint64_t seed,
                                         const ObjectiveSpec& objective = {});

/// Sample mean and 95% confidence half-width of the objective.
McEstimate mc_estimate_objective(const ScenarioParams& params, const ControlPath& control,
                                 int n_paths, double dt, std::uint64_t seed,
                                 const ObjectiveSpec& objective = {});

McEstimate estimate_from_samples(const std::vector<double>& samples);

}  // namespace goodwill
