#pragma once

#include <vector>

#include "questopt/charfn.hpp"

namespace questopt {

/**
 * A partition of a characteristic function's range into intervals, stored
 * as strictly increasing upper bounds. The last bound is a +inf sentinel,
 * so every real value falls into exactly one interval. Upper bounds are
 * closed: a value equal to a bound belongs to that bound's interval.
 */
struct IntervalSystem {
  enum class Mode { Dynamic, FixedEqualWidth };

  std::vector<double> upper_bounds;
  Mode mode = Mode::Dynamic;
  CharFn char_fn = CharFn::Entropy;

  int size() const { return static_cast<int>(upper_bounds.size()); }

  friend bool operator==(const IntervalSystem &, const IntervalSystem &) =
      default;
};

/// Index of the interval containing v: the smallest i with
/// v <= upper_bounds[i]. Binary search.
int locate_interval(const IntervalSystem &sys, double v);

/// `count` equal-width intervals spanning [lo, hi]; values outside the span
/// fall into the first or last interval. Collapses to a single interval
/// when the span is degenerate (hi <= lo).
IntervalSystem equal_width_intervals(CharFn fn, double lo, double hi,
                                     int count);

/// One interval per distinct value, with boundaries midway between
/// adjacent distinct values of the sorted sequence. Duplicates share an
/// interval. A single distinct value yields one unbounded interval.
IntervalSystem midpoint_intervals(CharFn fn, std::vector<double> values);

} // namespace questopt
