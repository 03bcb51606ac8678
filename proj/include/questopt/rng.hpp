#pragma once

#include <cstdint>
#include <random>

namespace questopt {

// Draw helpers built directly on the mt19937_64 output stream.
// std::uniform_*_distribution is implementation-defined, so seeded runs
// would not reproduce across standard libraries; these do.

/// Uniform double in [0, 1).
inline double uniform_unit(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_real(std::mt19937_64 &rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

/// Uniform integer in [0, bound). Rejection sampling keeps it unbiased.
inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

/// Uniform integer in [lo, hi] inclusive.
inline int uniform_int(std::mt19937_64 &rng, int lo, int hi) {
  return lo + static_cast<int>(
                  uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

} // namespace questopt
