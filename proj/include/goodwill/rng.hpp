#pragma once

#include <cstdint>

namespace goodwill {

/// Brownian increments for one Monte Carlo path.
///
/// Counter-based: increment k is a pure function of (seed, path_index, k), so
/// paths can be evaluated lazily, in any order and on any number of workers
/// while staying bit-identical.
struct NoisePath {
  std::uint64_t seed = 0;
  std::uint64_t path_index = 0;

  /// Standard normal draw for step k.
  double standard_normal(std::uint64_t step) const;

  /// Brownian increment over a step of length dt, i.e. Normal(0, dt).
  double increment(std::uint64_t step, double dt) const;
};

namespace detail {
std::uint64_t mix64(std::uint64_t z);
}

}  // namespace goodwill
