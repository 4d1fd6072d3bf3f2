#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace goodwill {

/// A function on [-r, 0] sampled on a uniform grid.
///
/// Sample i lives at xi_i = -r + i * delta_xi with delta_xi = r / (n_points - 1).
/// Used for delay kernels, goodwill/spend histories and the L2 component of a
/// lifted state. All segments attached to one scenario share the same grid.
struct SegmentPath {
  std::vector<double> values;
  double r = 1.0;

  SegmentPath() = default;
  SegmentPath(std::vector<double> v, double max_delay);

  static SegmentPath constant(double value, double max_delay, int n_points);
  static SegmentPath zero(double max_delay, int n_points) {
    return constant(0.0, max_delay, n_points);
  }

  template <class F>
  static SegmentPath from_function(F&& f, double max_delay, int n_points) {
    SegmentPath s = zero(max_delay, n_points);
    for (int i = 0; i < n_points; ++i) s.values[i] = f(s.xi(i));
    return s;
  }

  int n_points() const { return static_cast<int>(values.size()); }
  double delta_xi() const { return r / (n_points() - 1); }
  double xi(int i) const { return -r + i * delta_xi(); }
  double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return values[static_cast<std::size_t>(i)]; }

  /// Piecewise-linear evaluation at an arbitrary xi in [-r, 0] (exact at nodes).
  double sample(double xi_query) const;

  bool same_grid(const SegmentPath& other) const;
  bool all_zero() const;
  double min_value() const;

  /// Linear resampling onto a finer/coarser uniform grid over the same [-r, 0].
  SegmentPath resampled(int new_n_points) const;

  void validate(const char* name) const;
};

/// Composite trapezoidal rule with spacing h over consecutive samples.
double trapezoid(std::span<const double> values, double h);

/// Trapezoidal approximation of the L2 pairing of two segments on one grid.
double trapezoid_product(const SegmentPath& a, const SegmentPath& b);

/// Numerically robust sum with order-insensitive pairwise reduction.
double pairwise_sum(std::span<const double> values);

}  // namespace goodwill
