#include "goodwill/grid.hpp"

#include <algorithm>
#include <limits>

namespace goodwill {

SegmentPath::SegmentPath(std::vector<double> v, double max_delay)
    : values(std::move(v)), r(max_delay) {
  validate("segment");
}

SegmentPath SegmentPath::constant(double value, double max_delay, int n_points) {
  if (n_points < 2) throw std::invalid_argument("SegmentPath: n_points must be >= 2");
  return SegmentPath(std::vector<double>(static_cast<std::size_t>(n_points), value), max_delay);
}

double SegmentPath::sample(double xi_query) const {
  const double h = delta_xi();
  const double pos = (xi_query + r) / h;
  if (pos < -1e-9 || pos > (n_points() - 1) + 1e-9)
    throw std::out_of_range("SegmentPath::sample: xi outside [-r, 0]");
  const int lo = std::clamp(static_cast<int>(std::floor(pos)), 0, n_points() - 2);
  const double frac = std::clamp(pos - lo, 0.0, 1.0);
  return (1.0 - frac) * values[lo] + frac * values[lo + 1];
}

bool SegmentPath::same_grid(const SegmentPath& other) const {
  return n_points() == other.n_points() &&
         std::abs(r - other.r) <= 1e-12 * std::max(1.0, std::abs(r));
}

bool SegmentPath::all_zero() const {
  return std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
}

double SegmentPath::min_value() const {
  return *std::min_element(values.begin(), values.end());
}

SegmentPath SegmentPath::resampled(int new_n_points) const {
  SegmentPath out = SegmentPath::zero(r, new_n_points);
  for (int i = 0; i < new_n_points; ++i) out.values[i] = sample(out.xi(i));
  out.values.back() = values.back();
  out.values.front() = values.front();
  return out;
}

void SegmentPath::validate(const char* name) const {
  if (values.size() < 2)
    throw std::invalid_argument(std::string(name) + ": needs at least 2 grid points");
  if (!(r > 0.0))
    throw std::invalid_argument(std::string(name) + ": maximal delay r must be positive");
  for (double v : values)
    if (!std::isfinite(v))
      throw std::invalid_argument(std::string(name) + ": non-finite sample");
}

double trapezoid(std::span<const double> values, double h) {
  if (values.size() < 2) return 0.0;
  double sum = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
  return sum * h;
}

double trapezoid_product(const SegmentPath& a, const SegmentPath& b) {
  if (!a.same_grid(b))
    throw std::invalid_argument("trapezoid_product: segment grids do not match");
  const int n = a.n_points();
  std::vector<double> prod(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) prod[static_cast<std::size_t>(i)] = a[i] * b[i];
  return trapezoid(prod, a.delta_xi());
}

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n <= 16) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace goodwill
