#include "goodwill/lifted.hpp"

#include <cmath>
#include <string>

#include "goodwill/sdde.hpp"

namespace goodwill {

namespace {

constexpr double kDomainTol = 1e-8;

void check_grid(const LiftedState& x, const ScenarioParams& params, const char* op) {
  if (!x.tail.same_grid(params.b1))
    throw std::invalid_argument(std::string(op) + ": tail grid does not match the scenario grid");
}

// Second-order first derivative in xi: central in the interior, one-sided at
// the endpoints. Needs n >= 3.
std::vector<double> d_xi(const SegmentPath& x1) {
  const int n = x1.n_points();
  if (n < 3) throw std::invalid_argument("d_xi: needs at least 3 grid points");
  const double h = x1.delta_xi();
  std::vector<double> d(static_cast<std::size_t>(n));
  d[0] = (-3.0 * x1[0] + 4.0 * x1[1] - x1[2]) / (2.0 * h);
  for (int i = 1; i + 1 < n; ++i) d[static_cast<std::size_t>(i)] = (x1[i + 1] - x1[i - 1]) / (2.0 * h);
  d[static_cast<std::size_t>(n - 1)] = (3.0 * x1[n - 1] - 4.0 * x1[n - 2] + x1[n - 3]) / (2.0 * h);
  return d;
}

}  // namespace

double inner_product(const LiftedState& x, const LiftedState& y) {
  if (!x.tail.same_grid(y.tail))
    throw std::invalid_argument("inner_product: segment grids do not match");
  return x.head * y.head + trapezoid_product(x.tail, y.tail);
}

double norm(const LiftedState& x) { return std::sqrt(inner_product(x, x)); }

LiftedState apply_M(double x0, const SegmentPath& x1, const SegmentPath& v,
                    const ScenarioParams& params) {
  if (params.point_delay())
    throw UnsupportedScenario(
        "apply_M: the structural embedding is defined only for L2 kernels, not point delays");
  const SegmentPath& a1 = params.a1_kernel();
  if (!x1.same_grid(a1) || !v.same_grid(a1))
    throw std::invalid_argument("apply_M: argument grids do not match the scenario grid");

  const int n = a1.n_points();
  const double h = a1.delta_xi();
  LiftedState out{x0, SegmentPath::zero(params.r, n)};
  // m(xi_i) = trapezoid over zeta_j in [-r, xi_i] of
  //   a1(zeta_j) x1(zeta_j - xi_i) + b1(zeta_j) v(zeta_j - xi_i),
  // where zeta_j - xi_i sits at grid index j - i + n - 1.
  for (int i = 1; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j <= i; ++j) {
      const int arg = j - i + n - 1;
      const double g = a1[j] * x1[arg] + params.b1[j] * v[arg];
      sum += (j == 0 || j == i) ? 0.5 * g : g;
    }
    out.tail[i] = sum * h;
  }
  return out;
}

LiftedState apply_A(const LiftedState& x, const ScenarioParams& params) {
  check_grid(x, params, "apply_A");
  if (params.point_delay())
    throw UnsupportedScenario("apply_A: generator is built from an L2 kernel, not a point delay");
  if (std::abs(x.tail.values.front()) > kDomainTol)
    throw std::invalid_argument(
        "apply_A: x is outside D(A): boundary constraint x1(-r) = 0 violated (|x1(-r)| = " +
        std::to_string(std::abs(x.tail.values.front())) + ")");
  const SegmentPath& a1 = params.a1_kernel();
  const std::vector<double> dx = d_xi(x.tail);
  LiftedState out{params.a0 * x.head + x.tail.values.back(),
                  SegmentPath::zero(params.r, x.tail.n_points())};
  for (int i = 0; i < x.tail.n_points(); ++i)
    out.tail[i] = a1[i] * x.head - dx[static_cast<std::size_t>(i)];
  return out;
}

LiftedState apply_Astar(const LiftedState& x, const ScenarioParams& params) {
  check_grid(x, params, "apply_Astar");
  if (params.point_delay())
    throw UnsupportedScenario("apply_Astar: adjoint is built from an L2 kernel, not a point delay");
  if (std::abs(x.head - x.tail.values.back()) > kDomainTol)
    throw std::invalid_argument(
        "apply_Astar: x is outside D(A*): boundary constraint x0 = x1(0) violated (|x0 - x1(0)| = " +
        std::to_string(std::abs(x.head - x.tail.values.back())) + ")");
  const SegmentPath& a1 = params.a1_kernel();
  const std::vector<double> dx = d_xi(x.tail);
  LiftedState out{params.a0 * x.head + trapezoid_product(a1, x.tail),
                  SegmentPath::zero(params.r, x.tail.n_points())};
  for (int i = 0; i < x.tail.n_points(); ++i) out.tail[i] = dx[static_cast<std::size_t>(i)];
  return out;
}

LiftedState apply_B(double z, const ScenarioParams& params) {
  if (z < 0.0) throw std::invalid_argument("apply_B: control value must be non-negative");
  LiftedState out{params.b0 * z, params.b1};
  for (double& v : out.tail.values) v *= z;
  return out;
}

LiftedTrajectory simulate_lifted(const ScenarioParams& params, const ControlPath& control,
                                 const NoisePath& noise, const LiftedState& x_init, double dt) {
  params.validate();
  control.validate();
  if (params.point_delay())
    throw UnsupportedScenario("simulate_lifted: lifted dynamics need an L2 forgetting kernel");
  check_grid(x_init, params, "simulate_lifted");
  const double dxi = params.dt();
  if (std::abs(dt - dxi) > 1e-9 * std::max(1.0, dxi))
    throw std::invalid_argument("simulate_lifted: dt must equal the segment spacing (CFL = 1)");
  if (std::abs(control.dt - dt) > 1e-9 * std::max(1.0, dt) || control.steps() != params.steps())
    throw std::invalid_argument("simulate_lifted: control grid does not match the scenario grid");

  const SegmentPath& a1 = params.a1_kernel();
  const int n = params.n_points();
  const int steps = params.steps();

  LiftedTrajectory out;
  out.control = control;
  out.times.resize(static_cast<std::size_t>(steps) + 1);
  out.states.reserve(static_cast<std::size_t>(steps) + 1);
  out.states.push_back(x_init);

  for (int k = 0; k < steps; ++k) {
    out.times[static_cast<std::size_t>(k)] = k * dt;
    const LiftedState& cur = out.states.back();
    const double z = control.values[static_cast<std::size_t>(k)];
    const double dw =
        params.sigma != 0.0
            ? params.sigma * noise.increment(static_cast<std::uint64_t>(k), dt)
            : 0.0;

    LiftedState next{0.0, SegmentPath::zero(params.r, n)};
    next.head = cur.head +
                (params.a0 * cur.head + cur.tail.values.back() + params.b0 * z) * dt + dw;
    // Exact right shift (zero inflow at xi = -r), then the source increment.
    for (int i = 0; i < n; ++i) {
      const double shifted = (i == 0) ? 0.0 : cur.tail[i - 1];
      next.tail[i] = shifted + (a1[i] * cur.head + params.b1[i] * z) * dt;
    }
    out.states.push_back(std::move(next));
  }
  out.times.back() = steps * dt;
  return out;
}

LiftedState initial_lifted_state(const ScenarioParams& params) {
  return apply_M(params.eta0, params.eta, params.delta, params);
}

EquivalenceReport check_equivalence(const ScenarioParams& params, const ControlPath& control,
                                    const NoisePath& noise, double dt) {
  if (params.point_delay())
    throw UnsupportedScenario(
        "check_equivalence: the structural identity is defined only for L2 kernels");

  const LiftedState x0 = initial_lifted_state(params);
  const TrajectorySample direct = simulate_sdde(params, control, noise, dt);
  const LiftedTrajectory lifted = simulate_lifted(params, control, noise, x0, dt);

  EquivalenceReport report;
  const int steps = params.steps();
  for (int k = 0; k <= steps; ++k) {
    const double err = std::abs(direct.goodwill[static_cast<std::size_t>(k)] -
                                lifted.states[static_cast<std::size_t>(k)].head);
    report.max_err_state = std::max(report.max_err_state, err);
  }

  const int n = params.n_points();
  if (params.T < params.r) {
    report.structural_checked = false;
    return report;
  }
  // From t = r on, the lifted state must coincide with the embedding of its
  // own recent head path and the recent control segment.
  SegmentPath head_seg = SegmentPath::zero(params.r, n);
  SegmentPath ctrl_seg = SegmentPath::zero(params.r, n);
  for (int k = n - 1; k <= steps; ++k) {
    for (int i = 0; i < n; ++i) {
      const int j = k + i - (n - 1);
      head_seg[i] = lifted.states[static_cast<std::size_t>(j)].head;
      ctrl_seg[i] = control.values[static_cast<std::size_t>(j)];
    }
    const LiftedState embedded =
        apply_M(lifted.states[static_cast<std::size_t>(k)].head, head_seg, ctrl_seg, params);
    LiftedState diff = lifted.states[static_cast<std::size_t>(k)];
    diff.head -= embedded.head;
    for (int i = 0; i < n; ++i) diff.tail[i] -= embedded.tail[i];
    report.max_err_structural = std::max(report.max_err_structural, norm(diff));
  }
  return report;
}

}  // namespace goodwill
