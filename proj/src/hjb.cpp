#include "goodwill/hjb.hpp"

#include <cmath>
#include <string>

namespace goodwill {

namespace {

// integral_s^{min(s+r, T)} kern(s - u) * w0(u) du.
//
// Substituting u = s - xi maps the segment integral of kern(xi) * w0(s - xi)
// over the support {t - xi <= T} onto the forward window [s, s + r] truncated
// at T. Quadrature nodes u_m = s + m*h stay kernel-grid aligned; w0 at u > s
// is read from the node table (linear interpolation between nodes), w0(s)
// itself is the supplied value, so the helper also serves the half-stage
// evaluations of the backward integrator. A trailing partial cell closes the
// window at T exactly, keeping the rule second order.
double advanced_kernel_integral(const SegmentPath& kern, const std::vector<double>& w0_nodes,
                                double h, double s, double w0_at_s) {
  const int n = kern.n_points();
  const double horizon = (static_cast<double>(w0_nodes.size()) - 1.0) * h;
  const double u_max = std::min(s + kern.r, horizon);
  const double eps = 1e-9 * h;
  if (u_max <= s + eps) return 0.0;

  auto w0_at = [&](double u) {
    if (u <= s + eps) return w0_at_s;
    const double pos = u / h;
    const auto j = static_cast<std::size_t>(std::floor(pos + 1e-9));
    const double frac = pos - static_cast<double>(j);
    if (frac <= 1e-9) return w0_nodes[j];
    return (1.0 - frac) * w0_nodes[j] + frac * w0_nodes[j + 1];
  };

  int full = static_cast<int>(std::floor((u_max - s) / h + 1e-9));
  full = std::min(full, n - 1);

  double sum = 0.0;
  double g_last = kern[n - 1] * w0_at_s;  // m = 0: kern(0) * w0(s)
  for (int m = 1; m <= full; ++m) {
    const double g = kern[n - 1 - m] * w0_at(s + m * h);
    sum += 0.5 * (g_last + g);
    g_last = g;
  }
  sum *= h;

  const double u_full = s + full * h;
  if (u_max > u_full + eps) {
    const double g_end = kern.sample(s - u_max) * w0_at(u_max);
    sum += 0.5 * (u_max - u_full) * (g_last + g_end);
  }
  return sum;
}

}  // namespace

HamiltonianPoint hamiltonian(double bp, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("hamiltonian: beta must be positive");
  const double plus = std::max(bp, 0.0);
  return {plus * plus / (4.0 * beta), plus / (2.0 * beta)};
}

int LinearValueFunction::node(double t, const char* op) const {
  const double pos = t / dt;
  const int k = static_cast<int>(std::llround(pos));
  if (k < 0 || k > steps() || std::abs(pos - k) > 1e-9 * std::max(1.0, pos))
    throw std::invalid_argument(std::string(op) + ": t is not a grid node in [0, T]");
  return k;
}

LinearValueFunction solve_w(const ScenarioParams& params) {
  params.validate();
  if (params.point_delay())
    throw UnsupportedScenario(
        "solve_w: the explicit backward solve needs a distributed (L2) forgetting kernel");

  const double h = params.dt();
  const int steps = params.steps();
  const SegmentPath& a1 = params.a1_kernel();

  LinearValueFunction vf;
  vf.params = params;
  vf.dt = h;
  vf.w0.assign(static_cast<std::size_t>(steps) + 1, 0.0);
  vf.w0.back() = params.gamma;

  auto rhs = [&](double s, double w) {
    return -params.a0 * w - advanced_kernel_integral(a1, vf.w0, h, s, w);
  };
  for (int k = steps - 1; k >= 0; --k) {
    const double t1 = (k + 1) * h;
    const double w1 = vf.w0[static_cast<std::size_t>(k) + 1];
    const double k1 = rhs(t1, w1);
    const double k2 = rhs(t1 - 0.5 * h, w1 - 0.5 * h * k1);
    const double k3 = rhs(t1 - 0.5 * h, w1 - 0.5 * h * k2);
    const double k4 = rhs(t1 - h, w1 - h * k3);
    vf.w0[static_cast<std::size_t>(k)] = w1 - (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  vf.bw.assign(vf.w0.size(), 0.0);
  const bool has_b1 = !params.b1.all_zero();
  for (int k = 0; k <= steps; ++k) {
    double bw = params.b0 * vf.w0[static_cast<std::size_t>(k)];
    if (has_b1)
      bw += advanced_kernel_integral(params.b1, vf.w0, h, k * h,
                                     vf.w0[static_cast<std::size_t>(k)]);
    vf.bw[static_cast<std::size_t>(k)] = bw;
  }
  return vf;
}

void solve_c(LinearValueFunction& vf) {
  if (vf.w0.empty() || vf.bw.size() != vf.w0.size())
    throw std::invalid_argument("solve_c: w0 has not been solved");
  const int steps = vf.steps();
  vf.c.assign(vf.w0.size(), 0.0);
  double h_next = hamiltonian(vf.bw.back(), vf.params.beta).h0;
  for (int k = steps - 1; k >= 0; --k) {
    const double h_cur = hamiltonian(vf.bw[static_cast<std::size_t>(k)], vf.params.beta).h0;
    vf.c[static_cast<std::size_t>(k)] =
        vf.c[static_cast<std::size_t>(k) + 1] + 0.5 * vf.dt * (h_cur + h_next);
    h_next = h_cur;
  }
}

LinearValueFunction solve_value_function(const ScenarioParams& params) {
  LinearValueFunction vf = solve_w(params);
  solve_c(vf);
  return vf;
}

double eval_w1(const LinearValueFunction& vf, double t, double xi, bool* interpolated) {
  if (interpolated) *interpolated = false;
  if (t < -1e-12 || t > vf.horizon() + 1e-12)
    throw std::invalid_argument("eval_w1: t outside [0, T]");
  if (xi < -vf.params.r - 1e-12 || xi > 1e-12)
    throw std::invalid_argument("eval_w1: xi outside [-r, 0]");
  const double u = t - xi;
  const double eps = 1e-9 * vf.dt;
  if (u > vf.horizon() + eps) return 0.0;
  const double pos = u / vf.dt;
  const auto j = static_cast<std::size_t>(std::floor(pos + 1e-9));
  const double frac = pos - static_cast<double>(j);
  if (frac <= 1e-9) return vf.w0[j];
  if (interpolated) *interpolated = true;
  return (1.0 - frac) * vf.w0[j] + frac * vf.w0[j + 1];
}

double value_function(const LinearValueFunction& vf, double t, const LiftedState& x) {
  if (vf.c.size() != vf.w0.size())
    throw std::invalid_argument("value_function: c has not been solved (run solve_c)");
  if (!x.tail.same_grid(vf.params.b1))
    throw std::invalid_argument("value_function: tail grid does not match the scenario grid");
  const int k = vf.node(t, "value_function");
  const double tail_term =
      advanced_kernel_integral(x.tail, vf.w0, vf.dt, t, vf.w0[static_cast<std::size_t>(k)]);
  return vf.w0[static_cast<std::size_t>(k)] * x.head + tail_term +
         vf.c[static_cast<std::size_t>(k)];
}

ControlPath optimal_control_path(const LinearValueFunction& vf) {
  std::vector<double> z(vf.bw.size());
  for (std::size_t k = 0; k < z.size(); ++k)
    z[k] = hamiltonian(vf.bw[k], vf.params.beta).argmax_z;
  return ControlPath(std::move(z), vf.dt);
}

double integral_residual(const LinearValueFunction& vf, double t, const LiftedState& x) {
  const int k = vf.node(t, "integral_residual");
  const int steps = vf.steps();
  const LiftedState ax = apply_A(x, vf.params);  // enforces the D(A) constraints

  std::vector<double> integrand(static_cast<std::size_t>(steps - k) + 1);
  for (int j = k; j <= steps; ++j) {
    const double w0j = vf.w0[static_cast<std::size_t>(j)];
    double g = ax.head * w0j +
               advanced_kernel_integral(ax.tail, vf.w0, vf.dt, j * vf.dt, w0j) +
               hamiltonian(vf.bw[static_cast<std::size_t>(j)], vf.params.beta).h0;
    integrand[static_cast<std::size_t>(j - k)] = g;
  }
  const double accumulated = trapezoid(integrand, vf.dt);
  const double phi = vf.params.gamma * x.head;
  return phi - value_function(vf, t, x) + accumulated;
}

}  // namespace goodwill
