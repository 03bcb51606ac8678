#include "questopt/generate.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include "questopt/errors.hpp"
#include "questopt/rng.hpp"

namespace questopt {

ProblemTable generate_instance(int n, int k, std::uint64_t seed,
                               double cost_min, double cost_max,
                               ProbMode prob_mode) {
  if (n < 2)
    throw MalformedError("need at least two events");
  if (k < 1 || k > 62)
    throw MalformedError("question count must lie in [1, 62]");
  if (!(cost_min > 0.0) || cost_max < cost_min)
    throw MalformedError("cost range must satisfy 0 < min <= max");
  if ((std::uint64_t{1} << k) < static_cast<std::uint64_t>(n))
    throw InfeasibleError(std::to_string(k) + " questions cannot separate " +
                          std::to_string(n) + " events");

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> columns;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    columns.clear();
    std::set<std::uint64_t> seen;
    int draws = 0;
    while (static_cast<int>(columns.size()) < n && draws < 200000) {
      ++draws;
      const std::uint64_t column = uniform_below(rng, std::uint64_t{1} << k);
      if (seen.insert(column).second)
        columns.push_back(column);
    }
    if (static_cast<int>(columns.size()) < n)
      continue;
    bool senseless = false;
    for (int q = 0; q < k && !senseless; ++q) {
      bool seen0 = false, seen1 = false;
      for (std::uint64_t column : columns)
        ((column >> q) & 1 ? seen1 : seen0) = true;
      senseless = !seen0 || !seen1;
    }
    if (!senseless)
      break;
    columns.clear();
  }
  if (static_cast<int>(columns.size()) < n)
    throw InfeasibleError("could not draw a senseless-free table");

  ProblemTable t;
  t.bits.reserve(static_cast<std::size_t>(k) * n);
  for (int q = 0; q < k; ++q)
    for (int e = 0; e < n; ++e)
      t.bits.push_back((columns[e] >> q) & 1);
  t.costs.reserve(k);
  for (int q = 0; q < k; ++q)
    t.costs.push_back(uniform_real(rng, cost_min, cost_max));

  if (prob_mode == ProbMode::Uniform) {
    t.masses.assign(n, 1.0 / n);
  } else {
    // Normalized exponentials: uniform over the simplex.
    std::vector<double> draws(n);
    double total = 0.0;
    for (double &d : draws) {
      double u;
      do {
        u = uniform_unit(rng);
      } while (u <= 0.0);
      d = -std::log(u);
      total += d;
    }
    t.masses.reserve(n);
    for (double d : draws)
      t.masses.push_back(d / total);
  }

  t.event_labels.resize(n);
  std::iota(t.event_labels.begin(), t.event_labels.end(), 0);
  t.question_labels.resize(k);
  std::iota(t.question_labels.begin(), t.question_labels.end(), 0);
  validate_structure(t);
  return t;
}

} // namespace questopt
