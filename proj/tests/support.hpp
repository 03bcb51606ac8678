#pragma once

// Shared fixtures and independent oracles for the test suites. The
// reference instance and its hand-built questionnaire are kept here so
// every suite checks against the same frozen data.

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "questopt/errors.hpp"
#include "questopt/generate.hpp"
#include "questopt/questionnaire.hpp"
#include "questopt/reductions.hpp"
#include "questopt/rng.hpp"
#include "questopt/table.hpp"

namespace qtest {

/// The 9-event, 5-question reference instance used across the suites.
inline questopt::ProblemTable a3_table() {
  return questopt::ProblemTable::from_rows(
      {"000001111", "000011111", "001100001", "010100010", "000000100"},
      {3.0, 7.0, 4.0, 5.0, 6.0},
      {0.05, 0.10, 0.05, 0.30, 0.20, 0.05, 0.05, 0.15, 0.05},
      {1, 2, 3, 4, 5, 6, 7, 8, 9}, {1, 2, 3, 4, 5});
}

/// A hand-built questionnaire for a3_table: root asks question 1, the
/// 0-side resolves {y1..y5} via 2,4,3 and the 1-side resolves {y6..y9}
/// via 3,4,5.
inline questopt::Questionnaire a3_reference_tree() {
  using Q = questopt::Questionnaire;
  Q left = Q::internal(
      2,
      Q::internal(4, Q::internal(3, Q::leaf(1), Q::leaf(3)),
                  Q::internal(3, Q::leaf(2), Q::leaf(4))),
      Q::leaf(5));
  Q right = Q::internal(
      3, Q::internal(4, Q::internal(5, Q::leaf(6), Q::leaf(7)), Q::leaf(8)),
      Q::leaf(9));
  return Q::internal(1, std::move(left), std::move(right));
}

/// Independent expected cost of a3_reference_tree on a3_table: per-leaf
/// path costs read off the tree by hand, weighted by the probabilities.
inline double a3_reference_cost_oracle() {
  return 19.0 * (0.05 + 0.10 + 0.05 + 0.30) // y1..y4: questions 1,2,4,3
         + 10.0 * 0.20                      // y5: questions 1,2
         + 18.0 * (0.05 + 0.05)             // y6,y7: questions 1,3,4,5
         + 12.0 * 0.15                      // y8: questions 1,3,4
         + 7.0 * 0.05;                      // y9: questions 1,3
}

/// Entropy of an explicit mass vector, computed directly.
inline double entropy_oracle(const std::vector<double> &masses) {
  double total = 0.0;
  for (double m : masses)
    total += m;
  double h = 0.0;
  for (double m : masses)
    if (m > 0.0)
      h -= m / total * std::log2(m / total);
  return h;
}

/// Exhaustive optimal-cost enumeration over every questionnaire shape,
/// by direct recursion on tables. Independent of the memoized solver.
inline double naive_optimal_cost(const questopt::ProblemTable &t) {
  if (t.event_count() == 1)
    return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int q = 0; q < t.question_count(); ++q) {
    auto [side0, side1] = questopt::split_on(t, q);
    const double cost = t.costs[q] * t.total_mass() +
                        naive_optimal_cost(side0) + naive_optimal_cost(side1);
    best = std::min(best, cost);
  }
  return best;
}

/// Random covering set-cover instance: no duplicate or empty subsets,
/// every element covered; integer weights in [1, 9] when weighted.
inline questopt::SetCoverInstance random_set_cover(int universe, int subsets,
                                                   bool weighted,
                                                   std::mt19937_64 &rng) {
  using namespace questopt;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    SetCoverInstance sc;
    sc.universe_size = universe;
    for (int s = 0; s < subsets; ++s) {
      std::vector<int> subset;
      for (int u = 0; u < universe; ++u)
        if (uniform_unit(rng) < 0.45)
          subset.push_back(u);
      if (subset.empty())
        subset.push_back(uniform_int(rng, 0, universe - 1));
      sc.subsets.push_back(std::move(subset));
    }
    if (weighted) {
      sc.weights.emplace();
      for (int s = 0; s < subsets; ++s)
        sc.weights->push_back(uniform_int(rng, 1, 9));
    }
    try {
      validate_instance(sc);
      return sc;
    } catch (const Error &) {
      continue; // uncovered element or duplicate subsets: redraw
    }
  }
  throw std::logic_error("could not draw a valid set-cover instance");
}

/// Random uniform-value knapsack with integer weights in [1, 12];
/// roughly every fourth capacity exceeds the total weight.
inline questopt::KnapsackInstance random_knapsack(int items,
                                                  std::mt19937_64 &rng,
                                                  bool roomy = false) {
  using namespace questopt;
  KnapsackInstance ks;
  double total = 0.0;
  for (int i = 0; i < items; ++i) {
    ks.item_weights.push_back(uniform_int(rng, 1, 12));
    total += ks.item_weights.back();
  }
  ks.capacity = roomy ? total + uniform_int(rng, 1, 5)
                      : uniform_int(rng, 1, static_cast<int>(total));
  return ks;
}

} // namespace qtest
