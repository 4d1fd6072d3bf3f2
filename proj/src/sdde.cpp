#include "goodwill/sdde.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

namespace goodwill {

namespace {

void check_step(const ScenarioParams& params, const ControlPath& control, double dt) {
  const double dxi = params.dt();
  if (std::abs(dt - dxi) > 1e-9 * std::max(1.0, dxi))
    throw std::invalid_argument(
        "simulate_sdde: dt must equal the segment spacing r/(n_points-1)");
  if (std::abs(control.dt - dt) > 1e-9 * std::max(1.0, dt) ||
      control.steps() != params.steps())
    throw std::invalid_argument("simulate_sdde: control grid does not match the scenario grid");
}

// Runs body(p) for p in [0, n) on up to hardware_concurrency workers.
// Results must be written to disjoint slots; output is worker-count independent.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  unsigned hw = std::thread::hardware_concurrency();
  const std::size_t n_workers = std::min<std::size_t>(std::max(1u, hw), n);
  if (n_workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    constexpr std::size_t chunk = 16;
    for (;;) {
      const std::size_t begin = next.fetch_add(chunk);
      if (begin >= n || failed.load()) return;
      const std::size_t end = std::min(begin + chunk, n);
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
}

}  // namespace

TrajectorySample simulate_sdde(const ScenarioParams& params, const ControlPath& control,
                               const NoisePath& noise, double dt) {
  params.validate();
  control.validate();
  check_step(params, control, dt);

  const int n = params.n_points();
  const int steps = params.steps();
  const bool point = params.point_delay();
  const SegmentPath* a1 = point ? nullptr : &params.a1_kernel();
  const bool has_a1 = point ? (params.a1_point_coefficient() != 0.0) : !a1->all_zero();
  const bool has_b1 = !params.b1.all_zero();

  std::vector<double> y(static_cast<std::size_t>(steps) + 1);
  y[0] = params.eta0;

  // History lookup: grid offset j relative to time 0; j < 0 reads eta/delta.
  auto y_at = [&](int j) {
    return j >= 0 ? y[static_cast<std::size_t>(j)] : params.eta[j + n - 1];
  };
  auto z_at = [&](int j) {
    return j >= 0 ? control.values[static_cast<std::size_t>(j)] : params.delta[j + n - 1];
  };

  for (int k = 0; k < steps; ++k) {
    double drift = params.a0 * y[static_cast<std::size_t>(k)] +
                   params.b0 * control.values[static_cast<std::size_t>(k)];
    if (has_a1) {
      if (point) {
        drift += params.a1_point_coefficient() * y_at(k - (n - 1));
      } else {
        double conv = 0.5 * ((*a1)[0] * y_at(k - (n - 1)) + (*a1)[n - 1] * y_at(k));
        for (int i = 1; i + 1 < n; ++i) conv += (*a1)[i] * y_at(k + i - (n - 1));
        drift += conv * dt;
      }
    }
    if (has_b1) {
      double conv = 0.5 * (params.b1[0] * z_at(k - (n - 1)) + params.b1[n - 1] * z_at(k));
      for (int i = 1; i + 1 < n; ++i) conv += params.b1[i] * z_at(k + i - (n - 1));
      drift += conv * dt;
    }
    const double dw = params.sigma != 0.0 ? params.sigma * noise.increment(
                                                static_cast<std::uint64_t>(k), dt)
                                          : 0.0;
    y[static_cast<std::size_t>(k) + 1] = y[static_cast<std::size_t>(k)] + drift * dt + dw;
  }

  TrajectorySample out;
  out.times.resize(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) out.times[k] = static_cast<double>(k) * dt;
  out.terminal = y.back();
  out.goodwill = std::move(y);
  out.control = control;
  return out;
}

double TabulatedFunction::operator()(double q) const {
  const std::size_t n = x.size();
  if (q <= x.front()) {
    const double slope = (y[1] - y[0]) / (x[1] - x[0]);
    return y[0] + slope * (q - x[0]);
  }
  if (q >= x.back()) {
    const double slope = (y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]);
    return y[n - 1] + slope * (q - x[n - 1]);
  }
  const auto it = std::upper_bound(x.begin(), x.end(), q);
  const std::size_t hi = static_cast<std::size_t>(it - x.begin());
  const double frac = (q - x[hi - 1]) / (x[hi] - x[hi - 1]);
  return (1.0 - frac) * y[hi - 1] + frac * y[hi];
}

void TabulatedFunction::validate(const char* name) const {
  if (x.size() < 2 || x.size() != y.size())
    throw std::invalid_argument(std::string(name) + ": needs matching x/y tables of size >= 2");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1]))
      throw std::invalid_argument(std::string(name) + ": abscissae must be strictly increasing");
}

double objective_sample(const ScenarioParams& params, const TrajectorySample& path,
                        const ObjectiveSpec& objective) {
  const double dt = path.control.dt;
  double cost = 0.0;
  if (objective.spend_cost) {
    for (int k = 0; k < path.control.steps(); ++k)
      cost += (*objective.spend_cost)(path.control.values[static_cast<std::size_t>(k)]) * dt;
  } else {
    for (int k = 0; k < path.control.steps(); ++k) {
      const double z = path.control.values[static_cast<std::size_t>(k)];
      cost += params.beta * z * z * dt;
    }
  }
  const double reward = objective.terminal_utility ? (*objective.terminal_utility)(path.terminal)
                                                   : params.gamma * path.terminal;
  return reward - cost;
}

std::vector<double> mc_objective_samples(const ScenarioParams& params, const ControlPath& control,
                                         int n_paths, double dt, std::uint64_t seed,
                                         const ObjectiveSpec& objective) {
  if (n_paths < 2) throw std::invalid_argument("mc_objective_samples: n_paths must be >= 2");
  params.validate();
  control.validate();
  check_step(params, control, dt);
  if (objective.spend_cost) objective.spend_cost->validate("spend_cost");
  if (objective.terminal_utility) objective.terminal_utility->validate("terminal_utility");

  std::vector<double> samples(static_cast<std::size_t>(n_paths));
  parallel_for(samples.size(), [&](std::size_t p) {
    const NoisePath noise{seed, static_cast<std::uint64_t>(p)};
    const TrajectorySample path = simulate_sdde(params, control, noise, dt);
    samples[p] = objective_sample(params, path, objective);
  });
  return samples;
}

McEstimate estimate_from_samples(const std::vector<double>& samples) {
  const std::size_t n = samples.size();
  if (n < 2) throw std::invalid_argument("estimate_from_samples: needs at least 2 samples");
  McEstimate est;
  est.n_paths = static_cast<int>(n);
  est.mean = pairwise_sum(samples) / static_cast<double>(n);
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = samples[i] - est.mean;
    sq[i] = d * d;
  }
  const double var = pairwise_sum(sq) / static_cast<double>(n - 1);
  est.half_width_95 = 1.959963984540054 * std::sqrt(var / static_cast<double>(n));
  return est;
}

McEstimate mc_estimate_objective(const ScenarioParams& params, const ControlPath& control,
                                 int n_paths, double dt, std::uint64_t seed,
                                 const ObjectiveSpec& objective) {
  return estimate_from_samples(
      mc_objective_samples(params, control, n_paths, dt, seed, objective));
}

}  // namespace goodwill
