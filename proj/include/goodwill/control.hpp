#pragma once

#include <vector>

namespace goodwill {

/// Non-negative spending intensity sampled at t_k = k*dt on [0, T].
///
/// The control is piecewise constant on [t_k, t_{k+1}); the final node value
/// is carried for alignment with state grids but never drives a step.
struct ControlPath {
  std::vector<double> values;
  double dt = 0.0;

  ControlPath() = default;
  ControlPath(std::vector<double> v, double step);

  static ControlPath constant(double z, double horizon, double step);

  template <class F>
  static ControlPath from_function(F&& f, double horizon, double step) {
    ControlPath z = constant(0.0, horizon, step);
    for (std::size_t k = 0; k < z.values.size(); ++k)
      z.values[k] = f(static_cast<double>(k) * step);
    z.validate();
    return z;
  }

  int steps() const { return static_cast<int>(values.size()) - 1; }
  double horizon() const { return steps() * dt; }

  /// Pointwise scaling by a non-negative factor.
  ControlPath scaled(double factor) const;

  /// Same control on a grid refined by an integer factor (piecewise-constant
  /// semantics: each step value is repeated).
  ControlPath refined(int factor) const;

  void validate() const;
};

}  // namespace goodwill
