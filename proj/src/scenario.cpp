#include "goodwill/scenario.hpp"

#include <cmath>
#include <string>

namespace goodwill {

const SegmentPath& ScenarioParams::a1_kernel() const {
  if (point_delay())
    throw UnsupportedScenario("scenario uses a point-delay forgetting term; no L2 kernel available");
  return std::get<SegmentPath>(a1);
}

double ScenarioParams::a1_point_coefficient() const {
  if (!point_delay())
    throw UnsupportedScenario("scenario uses a distributed forgetting kernel, not a point delay");
  return std::get<PointDelayKernel>(a1).coefficient;
}

int ScenarioParams::steps() const {
  const double k = T / dt();
  return static_cast<int>(std::llround(k));
}

ScenarioParams ScenarioParams::resampled(int new_n_points) const {
  ScenarioParams out = *this;
  if (!point_delay()) out.a1 = a1_kernel().resampled(new_n_points);
  out.b1 = b1.resampled(new_n_points);
  out.eta = eta.resampled(new_n_points);
  out.delta = delta.resampled(new_n_points);
  return out;
}

void ScenarioParams::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("scenario: " + what); };

  if (!(r > 0.0)) fail("r must be positive");
  if (!(T > 0.0)) fail("T must be positive");
  if (!(beta > 0.0)) fail("beta must be positive");
  if (!(gamma > 0.0)) fail("gamma must be positive");
  if (a0 > 0.0) fail("a0 must be <= 0");
  if (b0 < 0.0) fail("b0 must be >= 0");
  if (sigma < 0.0) fail("sigma must be >= 0");
  if (eta0 < 0.0) fail("eta0 must be >= 0");

  b1.validate("b1");
  eta.validate("eta");
  delta.validate("delta");
  if (!point_delay()) {
    a1_kernel().validate("a1");
    if (!a1_kernel().same_grid(b1)) fail("a1 and b1 grids do not match");
  }
  if (!eta.same_grid(b1) || !delta.same_grid(b1)) fail("history grids do not match the kernel grid");
  if (std::abs(b1.r - r) > 1e-12 * std::max(1.0, r)) fail("segment grids must span [-r, 0]");

  if (b1.min_value() < 0.0) fail("b1 must be non-negative");
  if (eta.min_value() < 0.0) fail("eta must be non-negative");
  if (delta.min_value() < 0.0) fail("delta must be non-negative");
  if (std::abs(eta.values.back() - eta0) > 1e-12 * std::max(1.0, std::abs(eta0)))
    fail("eta(0) must equal eta0");

  const double k = T / dt();
  if (std::abs(k - std::llround(k)) > 1e-9 * std::max(1.0, k))
    fail("time step r/(n_points-1) does not divide the horizon T");
}

}  // namespace goodwill
