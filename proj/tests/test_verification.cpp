#include <doctest.h>

#include <cmath>
#include <random>

#include "goodwill/verification.hpp"
#include "test_util.hpp"

using namespace goodwill;
using testutil::blank;

namespace {

// b0 = 1, no delay kernels, a0 = 0, gamma = beta = 1, T = 1, sigma = 0.5,
// eta0 = 1. Here w0 == 1, z* == 1/2, c(t) = (1 - t)/4 and v(0, x) = 1.25.
ScenarioParams canonical(int n = 51, double sigma = 0.5) {
  ScenarioParams p = blank(n, 1.0, 1.0);
  p.b0 = 1.0;
  p.sigma = sigma;
  return p;
}

}  // namespace

TEST_SUITE("verification") {

TEST_CASE("optimal control attains the solved value") {
  const ScenarioParams p = canonical();
  const LinearValueFunction vf = solve_value_function(p);
  const ControlPath zstar = optimal_control_path(vf);
  const DominanceReport rep = verify_dominance(p, vf, {{"zstar", zstar}}, 10000, 42);
  CHECK(rep.v_value == doctest::Approx(1.25).epsilon(1e-12));
  const double allowance = discretization_allowance(p, zstar, 10000, 42);
  CHECK(std::abs(rep.j_means[0] - rep.v_value) <= 3.0 * rep.j_half_widths[0] + allowance);
  CHECK(rep.violations.empty());
}

TEST_CASE("doing nothing costs exactly the accumulated Hamiltonian") {
  const ScenarioParams p = canonical();
  const LinearValueFunction vf = solve_value_function(p);
  const ControlPath zero = ControlPath::constant(0.0, p.T, p.dt());
  const DominanceReport rep = verify_dominance(p, vf, {{"zero", zero}}, 10000, 42);
  CHECK(std::abs((rep.v_value - rep.j_means[0]) - 0.25) <= 3.0 * rep.j_half_widths[0]);
}

TEST_CASE("overspending loses the quadratic gap, resolved under common random numbers") {
  const ScenarioParams p = canonical();
  const LinearValueFunction vf = solve_value_function(p);
  const ControlPath zstar = optimal_control_path(vf);
  const ControlPath overspend = zstar.scaled(1.1);
  const DominanceReport rep =
      verify_dominance(p, vf, {{"zstar", zstar}, {"overspend", overspend}}, 10000, 42);
  // Common random numbers cancel the noise: the ordering is exact.
  CHECK(rep.j_means[0] > rep.j_means[1]);
  CHECK(rep.j_means[0] - rep.j_means[1] == doctest::Approx(0.0025).epsilon(1e-10));
  const double gap = fundamental_identity_gap(p, vf, overspend);
  CHECK(std::abs((rep.v_value - rep.j_means[1]) - gap) <= 3.0 * rep.j_half_widths[1]);
  // Identical noise, identical spread.
  CHECK(rep.j_half_widths[0] == doctest::Approx(rep.j_half_widths[1]).epsilon(1e-12));
}

TEST_CASE("an understated value function is flagged as a violation") {
  const ScenarioParams p = canonical();
  LinearValueFunction vf = solve_w(p);
  for (double& w : vf.w0) w *= 0.5;
  for (double& b : vf.bw) b *= 0.5;
  solve_c(vf);
  const ControlPath good = ControlPath::constant(0.5, p.T, p.dt());
  const DominanceReport rep = verify_dominance(p, vf, {{"good", good}}, 10000, 7);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0] == "good");
}

TEST_CASE("fundamental identity gap") {
  const ScenarioParams p = canonical();
  const LinearValueFunction vf = solve_value_function(p);
  const ControlPath zstar = optimal_control_path(vf);

  SUBCASE("the maximizer annihilates the slack") {
    CHECK(std::abs(fundamental_identity_gap(p, vf, zstar)) <= 1e-10);
  }
  SUBCASE("zero control accumulates H0") {
    const ControlPath zero = ControlPath::constant(0.0, p.T, p.dt());
    CHECK(fundamental_identity_gap(p, vf, zero) == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("slack is non-negative for random controls") {
    std::mt19937 gen(99);
    std::uniform_real_distribution<double> draw(0.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
      ControlPath z = ControlPath::constant(0.0, p.T, p.dt());
      for (double& v : z.values) v = draw(gen);
      CHECK(fundamental_identity_gap(p, vf, z) >= 0.0);
    }
  }
  SUBCASE("quadratic structure: symmetric around the maximizer") {
    const ControlPath up = ControlPath::constant(0.8, p.T, p.dt());
    const ControlPath down = ControlPath::constant(0.2, p.T, p.dt());
    CHECK(fundamental_identity_gap(p, vf, up) ==
          doctest::Approx(fundamental_identity_gap(p, vf, down)).epsilon(1e-12));
  }
}

TEST_CASE("monte carlo identity check") {
  SUBCASE("noisy run agrees within three half-widths") {
    const ScenarioParams p = canonical();
    const LinearValueFunction vf = solve_value_function(p);
    const ControlPath zstar = optimal_control_path(vf);
    const McIdentityResult r = mc_identity_check(p, vf, zstar, 10000, 5);
    CHECK(std::abs(r.lhs - r.rhs_mean) <= 3.0 * r.half_width);
  }
  SUBCASE("deterministic gap halves with the step") {
    auto identity_error = [](int n) {
      ScenarioParams p = blank(n, 1.0, 2.0);
      p.a0 = -0.5;
      p.a1 = SegmentPath::constant(0.3, 1.0, n);
      p.b0 = 1.0;
      p.b1 = SegmentPath::from_function([](double xi) { return xi + 1.0; }, 1.0, n);
      p.delta = SegmentPath::constant(0.2, 1.0, n);
      const LinearValueFunction vf = solve_value_function(p);
      const ControlPath z = ControlPath::from_function(
          [](double t) { return 0.5 + 0.3 * std::cos(t); }, p.T, p.dt());
      const McIdentityResult r = mc_identity_check(p, vf, z, 2, 1);
      return std::abs(r.lhs - r.rhs_mean);
    };
    const double coarse = identity_error(26);
    const double fine = identity_error(51);
    CHECK(fine <= 0.65 * coarse);
  }
  SUBCASE("empty model collapses to zero") {
    ScenarioParams p = blank(26, 1.0, 1.0);
    p.eta0 = 0.0;
    p.eta = SegmentPath::zero(1.0, 26);
    const LinearValueFunction vf = solve_value_function(p);
    const ControlPath zero = ControlPath::constant(0.0, p.T, p.dt());
    const McIdentityResult r = mc_identity_check(p, vf, zero, 100, 3);
    CHECK(r.lhs == 0.0);
    CHECK(r.rhs_mean == 0.0);
    CHECK(r.half_width == 0.0);
  }
}

TEST_CASE("reports are reproducible for a fixed seed") {
  const ScenarioParams p = canonical();
  const LinearValueFunction vf = solve_value_function(p);
  const ControlPath zstar = optimal_control_path(vf);
  const std::vector<LabeledControl> controls{
      {"zstar", zstar}, {"zero", ControlPath::constant(0.0, p.T, p.dt())}};
  const DominanceReport a = verify_dominance(p, vf, controls, 2000, 123);
  const DominanceReport b = verify_dominance(p, vf, controls, 2000, 123);
  CHECK(a.v_value == b.v_value);
  for (std::size_t i = 0; i < controls.size(); ++i) {
    CHECK(a.j_means[i] == b.j_means[i]);
    CHECK(a.j_half_widths[i] == b.j_half_widths[i]);
  }
}

}  // TEST_SUITE
