#include "goodwill/rng.hpp"

#include <cmath>
#include <numbers>

namespace goodwill {

namespace detail {

// splitmix64 finalizer; full avalanche on 64 bits.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

double NoisePath::standard_normal(std::uint64_t step) const {
  using detail::mix64;
  const std::uint64_t cell = mix64(mix64(mix64(seed) ^ path_index) ^ step);
  const std::uint64_t h1 = mix64(cell ^ 0x243F6A8885A308D3ull);
  const std::uint64_t h2 = mix64(cell ^ 0x13198A2E03707344ull);
  // u1 in (0, 1], u2 in [0, 1); Box-Muller.
  const double u1 = static_cast<double>((h1 >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>(h2 >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double NoisePath::increment(std::uint64_t step, double dt) const {
  return std::sqrt(dt) * standard_normal(step);
}

}  // namespace goodwill
