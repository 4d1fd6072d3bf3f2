#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace goodwill {

/// Process exit codes shared by all subcommands.
namespace exit_code {
constexpr int ok = 0;            // command succeeded, checks passed
constexpr int violation = 1;     // a verification check failed
constexpr int input_error = 2;   // unreadable/invalid scenario or flags
constexpr int inconclusive = 3;  // confidence intervals too wide to decide
constexpr int unsupported = 4;   // valid input, unsupported combination
}  // namespace exit_code

struct SimulateOptions {
  int paths = 0;          // 0: use numerics.n_paths
  std::int64_t seed = -1; // < 0: use numerics.seed
  int dt_refine = 1;      // total number of resolutions (1 = just the file grid)
  std::string control = "zero";  // zero | const:<v> | zstar
};

struct VerifyOptions {
  std::vector<std::string> controls{"zstar", "zero", "scale:1.1"};
  int paths = 0;
  std::int64_t seed = -1;
  double corrupt_w0_scale = 1.0;  // test hook: scales the solved w0 before checking
};

struct EquivalenceOptions {
  int refinements = 3;
  std::string control = "const:1";
  std::int64_t seed = -1;
};

/// Monte Carlo time series (t, y_mean, y_p05, y_p95, z) to out_path; with
/// dt_refine > 1 additional half-step files out_r2, out_r4, ... are written.
int cmd_simulate(const std::string& scenario_path, const std::string& out_path,
                 const SimulateOptions& options, std::ostream& diag);

/// Explicit value function table (t, w0, Bw, z_star, c) plus a trailing
/// summary comment with v(0, x_init).
int cmd_solve(const std::string& scenario_path, const std::string& out_path, std::ostream& diag);

/// Dominance/optimality report for a set of controls under common random
/// numbers; exit 0 only when no check is violated.
int cmd_verify(const std::string& scenario_path, const std::string& out_path,
               const VerifyOptions& options, std::ostream& diag);

/// Refinement table of the direct-vs-lifted simulation errors plus observed
/// convergence orders.
int cmd_equivalence(const std::string& scenario_path, const std::string& out_path,
                    const EquivalenceOptions& options, std::ostream& diag);

/// Invariant-measure condition verdict for the point-delay pair (a0, a1).
int cmd_stability(double a0, double a1, bool coth_variant, std::ostream& out);

}  // namespace goodwill
