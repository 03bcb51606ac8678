#include "questopt/intervals.hpp"

#include <algorithm>
#include <limits>

#include "questopt/errors.hpp"

namespace questopt {

int locate_interval(const IntervalSystem &sys, double v) {
  if (sys.upper_bounds.empty())
    throw InternalInvariantError("empty interval system");
  auto it =
      std::lower_bound(sys.upper_bounds.begin(), sys.upper_bounds.end(), v);
  if (it == sys.upper_bounds.end())
    --it; // above every finite bound: last interval
  return static_cast<int>(it - sys.upper_bounds.begin());
}

IntervalSystem equal_width_intervals(CharFn fn, double lo, double hi,
                                     int count) {
  IntervalSystem sys;
  sys.mode = IntervalSystem::Mode::FixedEqualWidth;
  sys.char_fn = fn;
  if (count < 1)
    throw MalformedError("interval count must be positive");
  if (!(hi > lo)) {
    sys.upper_bounds = {std::numeric_limits<double>::infinity()};
    return sys;
  }
  const double width = (hi - lo) / count;
  sys.upper_bounds.reserve(count);
  for (int i = 1; i < count; ++i)
    sys.upper_bounds.push_back(lo + width * i);
  sys.upper_bounds.push_back(std::numeric_limits<double>::infinity());
  return sys;
}

IntervalSystem midpoint_intervals(CharFn fn, std::vector<double> values) {
  if (values.empty())
    throw MalformedError("midpoint intervals need at least one value");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  IntervalSystem sys;
  sys.mode = IntervalSystem::Mode::Dynamic;
  sys.char_fn = fn;
  sys.upper_bounds.reserve(values.size());
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double mid = values[i] + (values[i + 1] - values[i]) / 2.0;
    // A boundary must strictly separate the two values; when they are a
    // rounding step apart the midpoint may collide, so they share an
    // interval instead.
    if (values[i] <= mid && mid < values[i + 1] &&
        (sys.upper_bounds.empty() || mid > sys.upper_bounds.back()))
      sys.upper_bounds.push_back(mid);
  }
  sys.upper_bounds.push_back(std::numeric_limits<double>::infinity());
  return sys;
}

} // namespace questopt
