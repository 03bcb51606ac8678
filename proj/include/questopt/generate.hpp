#pragma once

#include <cstdint>

#include "questopt/table.hpp"

namespace questopt {

enum class ProbMode {
  Uniform, ///< every event gets mass 1/n
  Random   ///< a random point of the probability simplex
};

/// Draws a random complete problem table: n distinct event columns over k
/// questions (rejection sampling), no senseless rows, costs uniform in
/// [cost_min, cost_max]. Deterministic per seed. Throws InfeasibleError
/// when 2^k < n.
ProblemTable generate_instance(int n, int k, std::uint64_t seed,
                               double cost_min = 1.0, double cost_max = 10.0,
                               ProbMode prob_mode = ProbMode::Uniform);

} // namespace questopt
