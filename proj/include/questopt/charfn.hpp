#pragma once

#include <string>

#include "questopt/table.hpp"

namespace questopt {

/// Characteristic functions used to classify subordinate problems.
enum class CharFn { Entropy, Compactness, CostEntropy };

double evaluate(CharFn fn, const ProblemTable &table);

/// Theoretical range of a characteristic function for a table with n
/// events and r questions: entropy in [0, log2 n], compactness in
/// [r/2^r, 2^r/r], cost entropy in [0, log2 r].
struct CharFnBounds {
  double lo = 0.0;
  double hi = 0.0;
};

CharFnBounds char_fn_bounds(CharFn fn, int n, int r);

std::string to_string(CharFn fn);
CharFn char_fn_from_string(const std::string &name);

} // namespace questopt
