#pragma once

#include "goodwill/control.hpp"
#include "goodwill/lifted.hpp"
#include "goodwill/scenario.hpp"

namespace goodwill {

struct HamiltonianPoint {
  double h0 = 0.0;       // sup_z ( Bp*z - beta*z^2 ) over z >= 0
  double argmax_z = 0.0; // maximizer, max(Bp, 0) / (2 beta)
};

/// Closed-form Hamiltonian for the quadratic cost: H0 = (max(Bp,0))^2 / (4 beta).
HamiltonianPoint hamiltonian(double bp, double beta);

/// Linear-ansatz value function v(t, x) = w0(t) x0 + <w1(t,.), x1> + c(t).
/// w1 is implicit: w1(t, xi) = w0(t - xi) while t - xi <= T, else 0.
struct LinearValueFunction {
  ScenarioParams params;
  double dt = 0.0;
  std::vector<double> w0;  // nodes on [0, T]
  std::vector<double> bw;  // <B, w(t_k)> = b0 w0 + integral b1 w1
  std::vector<double> c;

  int steps() const { return static_cast<int>(w0.size()) - 1; }
  double horizon() const { return steps() * dt; }
  int node(double t, const char* op) const;  // grid index of t, throws off-grid
};

/// Backward solve of the advanced-argument equation
///   w0'(t) = -a0 w0(t) - integral_{-r}^{0} a1(xi) w0(t - xi) 1{t - xi <= T} dxi,
///   w0(T) = gamma,
/// by a classical 4-stage explicit step; the advanced integral reads already
/// computed future nodes (linear interpolation at half-stage arguments) and is
/// truncated at the support boundary t - xi = T, where w0(T) = gamma enters
/// with full weight. Also fills the <B, w> table. Point delays are rejected.
LinearValueFunction solve_w(const ScenarioParams& params);

/// c(t) = integral_t^T H0(<B, w(s)>) ds, accumulated backward by trapezoid.
void solve_c(LinearValueFunction& vf);

/// solve_w followed by solve_c.
LinearValueFunction solve_value_function(const ScenarioParams& params);

/// Transport representation of the tail weight; off-grid arguments are
/// linearly interpolated (sets *interpolated when provided).
double eval_w1(const LinearValueFunction& vf, double t, double xi, bool* interpolated = nullptr);

/// v(t, x) for grid-aligned t.
double value_function(const LinearValueFunction& vf, double t, const LiftedState& x);

/// Deterministic open-loop maximizer z*(t) = max(<B, w(t)>, 0) / (2 beta).
ControlPath optimal_control_path(const LinearValueFunction& vf);

/// Integral form of the HJB residual at (t, x) for x in D(A):
///   phi(x) - v(t,x) + integral_t^T [ <Ax, w(s)> + H0(<B,w(s)>) ] ds.
/// Shrinks at first order under grid refinement when v solves the equation.
double integral_residual(const LinearValueFunction& vf, double t, const LiftedState& x);

}  // namespace goodwill
