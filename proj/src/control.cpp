#include "goodwill/control.hpp"

#include <cmath>
#include <stdexcept>

namespace goodwill {

ControlPath::ControlPath(std::vector<double> v, double step) : values(std::move(v)), dt(step) {
  validate();
}

ControlPath ControlPath::constant(double z, double horizon, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("ControlPath: dt must be positive");
  const double k = horizon / step;
  const int steps = static_cast<int>(std::llround(k));
  if (steps < 1 || std::abs(k - steps) > 1e-9 * std::max(1.0, k))
    throw std::invalid_argument("ControlPath: dt does not divide the horizon");
  return ControlPath(std::vector<double>(static_cast<std::size_t>(steps) + 1, z), step);
}

ControlPath ControlPath::scaled(double factor) const {
  if (factor < 0.0) throw std::invalid_argument("ControlPath::scaled: factor must be >= 0");
  ControlPath out = *this;
  for (double& v : out.values) v *= factor;
  return out;
}

ControlPath ControlPath::refined(int factor) const {
  if (factor < 1) throw std::invalid_argument("ControlPath::refined: factor must be >= 1");
  ControlPath out;
  out.dt = dt / factor;
  out.values.reserve(static_cast<std::size_t>(steps()) * factor + 1);
  for (int k = 0; k < steps(); ++k)
    for (int j = 0; j < factor; ++j) out.values.push_back(values[static_cast<std::size_t>(k)]);
  out.values.push_back(values.back());
  return out;
}

void ControlPath::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("ControlPath: dt must be positive");
  if (values.size() < 2) throw std::invalid_argument("ControlPath: needs at least 2 nodes");
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("ControlPath: non-finite value");
    if (v < 0.0)
      throw std::invalid_argument("ControlPath: spending intensity must be non-negative");
  }
}

}  // namespace goodwill
