#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "goodwill/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"goodwill: simulation, explicit HJB solution and Monte Carlo verification "
               "for delayed advertising-goodwill dynamics"};
  app.require_subcommand(1);

  std::string scenario_path, out_path;
  goodwill::SimulateOptions sim_opts;
  goodwill::VerifyOptions verify_opts;
  goodwill::EquivalenceOptions equiv_opts;
  double a0 = 0.0, a1 = 0.0;
  bool coth = false;

  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo time series of the goodwill path");
  sim->add_option("scenario", scenario_path, "scenario file")->required();
  sim->add_option("out", out_path, "output table (csv)")->required();
  sim->add_option("--paths", sim_opts.paths, "number of Monte Carlo paths (default: scenario)");
  sim->add_option("--seed", sim_opts.seed, "noise seed (default: scenario)");
  sim->add_option("--dt-refine", sim_opts.dt_refine,
                  "also run at halved steps; writes <out>_r2, _r4, ...");
  sim->add_option("--control", sim_opts.control, "zero | const:<v> | zstar (default zero)");

  CLI::App* solve = app.add_subcommand("solve", "explicit value function and optimal spending");
  solve->add_option("scenario", scenario_path, "scenario file")->required();
  solve->add_option("out", out_path, "output table (csv)")->required();

  CLI::App* verify = app.add_subcommand("verify", "Monte Carlo dominance/optimality report");
  verify->add_option("scenario", scenario_path, "scenario file")->required();
  verify->add_option("out", out_path, "output table (csv)")->required();
  verify->add_option("--controls", verify_opts.controls,
                     "control tokens: zstar | zero | const:<v> | scale:<f>");
  verify->add_option("--paths", verify_opts.paths, "number of Monte Carlo paths");
  verify->add_option("--seed", verify_opts.seed, "noise seed");
  verify->add_option("--corrupt-w0-scale", verify_opts.corrupt_w0_scale, "")->group("");

  CLI::App* equiv = app.add_subcommand("equivalence",
                                       "direct-vs-lifted simulation refinement study");
  equiv->add_option("scenario", scenario_path, "scenario file")->required();
  equiv->add_option("out", out_path, "output table (csv)")->required();
  equiv->add_option("--refinements", equiv_opts.refinements, "number of resolutions (default 3)");
  equiv->add_option("--control", equiv_opts.control, "zero | const:<v> | zstar (default const:1)");
  equiv->add_option("--seed", equiv_opts.seed, "noise seed (default: scenario)");

  CLI::App* stab = app.add_subcommand("stability", "invariant-measure condition for point delay");
  stab->add_option("a0", a0, "instantaneous deterioration rate")->required();
  stab->add_option("a1", a1, "point-delay coefficient")->required();
  stab->add_flag("--coth", coth, "use the gamma*coth(gamma) = a0 variant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : goodwill::exit_code::input_error;
  }

  if (*sim) return goodwill::cmd_simulate(scenario_path, out_path, sim_opts, std::cout);
  if (*solve) return goodwill::cmd_solve(scenario_path, out_path, std::cout);
  if (*verify) return goodwill::cmd_verify(scenario_path, out_path, verify_opts, std::cout);
  if (*equiv) return goodwill::cmd_equivalence(scenario_path, out_path, equiv_opts, std::cout);
  if (*stab) return goodwill::cmd_stability(a0, a1, coth, std::cout);
  return goodwill::exit_code::input_error;
}
