#pragma once

#include "goodwill/control.hpp"
#include "goodwill/rng.hpp"
#include "goodwill/scenario.hpp"

namespace goodwill {

/// Element of the product space R x L2([-r,0]): scalar head plus segment tail.
struct LiftedState {
  double head = 0.0;
  SegmentPath tail;
};

struct LiftedTrajectory {
  std::vector<double> times;
  std::vector<LiftedState> states;
  ControlPath control;
};

/// <x, y> = x0*y0 + integral of the tails (trapezoidal).
double inner_product(const LiftedState& x, const LiftedState& y);
double norm(const LiftedState& x);

/// Structural embedding: head = x0, tail(xi) = integral over [-r, xi] of
/// a1(zeta) x1(zeta - xi) + b1(zeta) v(zeta - xi) d zeta. Requires distributed
/// kernels; point-delay scenarios are rejected.
LiftedState apply_M(double x0, const SegmentPath& x1, const SegmentPath& v,
                    const ScenarioParams& params);

/// Generator A: (x0, x1) -> (a0 x0 + x1(0), a1(.) x0 - x1').
/// Domain: x1 in the discrete W^{1,2} with x1(-r) = 0 (tolerance 1e-8).
LiftedState apply_A(const LiftedState& x, const ScenarioParams& params);

/// Adjoint A*: (x0, x1) -> (a0 x0 + <a1, x1>_{L2}, x1').
/// Domain: x0 = x1(0) (tolerance 1e-8).
LiftedState apply_Astar(const LiftedState& x, const ScenarioParams& params);

/// Control operator B: z -> (b0 z, b1(.) z), z >= 0.
LiftedState apply_B(double z, const ScenarioParams& params);

/// Evolution of the lifted state at CFL = 1: per step the tail performs an
/// exact right shift by one cell (zero inflow at xi = -r) followed by the
/// source increment (a1(xi) Y0 + b1(xi) z) dt, while the head follows
/// Y0 += (a0 Y0 + Y1(0) + b0 z) dt + sigma dW.
LiftedTrajectory simulate_lifted(const ScenarioParams& params, const ControlPath& control,
                                 const NoisePath& noise, const LiftedState& x_init, double dt);

struct EquivalenceReport {
  double max_err_state = 0.0;       // max_t |y(t) - Y0(t)|
  double max_err_structural = 0.0;  // max_{t >= r} ||Y(t) - M(Y0(t), Y0(t+.), z(t+.))||_X
  bool structural_checked = true;   // false when T < r (identity asserted only from t = r)
};

/// Runs both simulators on identical noise and measures how far apart they
/// are, plus how far the lifted tail is from the structural embedding of its
/// own head path. Initial lifted state is M(eta0, eta, delta).
EquivalenceReport check_equivalence(const ScenarioParams& params, const ControlPath& control,
                                    const NoisePath& noise, double dt);

/// M(eta0, eta, delta): the lifted initial condition induced by the histories.
LiftedState initial_lifted_state(const ScenarioParams& params);

}  // namespace goodwill
