#pragma once

#include <stdexcept>
#include <variant>

#include "goodwill/grid.hpp"

namespace goodwill {

/// Forgetting concentrated at the single lag -r (coefficient a1, lag = r).
struct PointDelayKernel {
  double coefficient = 0.0;
};

/// Raised when an operation is well-defined only for distributed (L2) kernels
/// but a point-delay scenario was supplied, or similar unsupported pairings.
struct UnsupportedScenario : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// All model, history and objective coefficients of one scenario.
///
/// Model:      dy = [a0 y + (a1 * y-history) + b0 z + (b1 * z-history)] dt + sigma dW
/// Objective:  E[ gamma y(T) - integral beta z^2 dt ]
///
/// The segment grid of b1/eta/delta (and a1 when distributed) is shared and
/// fixes the simulation step dt = r / (n_points - 1).
struct ScenarioParams {
  double a0 = 0.0;                                   // deterioration rate, <= 0
  std::variant<SegmentPath, PointDelayKernel> a1;    // distributed forgetting or point lag
  double b0 = 0.0;                                   // instantaneous advertising effectiveness
  SegmentPath b1;                                    // spend-effect lag density, >= 0
  double sigma = 0.0;                                // noise intensity, >= 0
  double r = 1.0;                                    // maximal delay
  double T = 1.0;                                    // horizon
  double eta0 = 0.0;                                 // goodwill at time 0
  SegmentPath eta;                                   // goodwill history on [-r, 0]
  SegmentPath delta;                                 // spend history on [-r, 0]
  double beta = 1.0;                                 // quadratic cost coefficient, > 0
  double gamma = 1.0;                                // terminal reward coefficient, > 0

  bool point_delay() const { return std::holds_alternative<PointDelayKernel>(a1); }

  const SegmentPath& a1_kernel() const;
  double a1_point_coefficient() const;

  int n_points() const { return b1.n_points(); }
  double dt() const { return r / (n_points() - 1); }
  int steps() const;

  ScenarioParams resampled(int new_n_points) const;

  void validate() const;
};

}  // namespace goodwill
