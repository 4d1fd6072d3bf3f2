#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "goodwill/scenario.hpp"

namespace goodwill {

/// Scenario text error with 1-based position information.
struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(int line_, int column_, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + message),
        line(line_),
        column(column_) {}
};

/// Symbolic form of a segment-valued coefficient as written in a scenario
/// file: an inline constant, a piecewise-linear (xi, value) table spanning
/// [-r, 0], or the point-delay marker (forgetting term only).
struct CoefficientSpec {
  enum class Kind { Constant, Table, PointDelay };
  Kind kind = Kind::Constant;
  double value = 0.0;                           // Constant / PointDelay payload
  std::vector<std::pair<double, double>> table; // Table payload, xi ascending
};

/// Parsed scenario document: sections model / history / objective / numerics,
/// `key = value` lines, '#' comments. Unknown sections or keys are rejected.
struct ScenarioFile {
  // model
  double a0 = 0.0;
  CoefficientSpec a1;
  double b0 = 0.0;
  CoefficientSpec b1;
  double sigma = 0.0;
  double r = 1.0;
  double T = 1.0;
  // history
  double eta0 = 0.0;
  CoefficientSpec eta;
  CoefficientSpec delta;
  // objective
  double beta = 1.0;
  double gamma = 1.0;
  // numerics
  int n_points = 2;
  int n_paths = 2;
  std::uint64_t seed = 0;
};

ScenarioFile parse_scenario_text(const std::string& text);
ScenarioFile load_scenario_file(const std::string& path);

/// Canonical re-emission; parse(emit(f)) materializes identically to f.
std::string emit_scenario_text(const ScenarioFile& file);

/// Grids the symbolic coefficients. n_points_override > 0 replaces the file's
/// numerics.n_points (used by refinement studies).
ScenarioParams materialize(const ScenarioFile& file, int n_points_override = 0);

/// Full-precision decimal formatting (round-trips the double exactly).
std::string format_full(double v);

}  // namespace goodwill
