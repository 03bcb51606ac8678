#pragma once

#include <vector>

#include "questopt/questionnaire.hpp"
#include "questopt/reductions.hpp"
#include "questopt/table.hpp"

namespace questopt {

/// Exact minimum-cost questionnaire by recursion over event subsets with
/// memoization. Refuses tables above `cap` events (exponential blow-up).
struct OwbqExact {
  double cost = 0.0;
  Questionnaire tree;
  long nodes_explored = 0; ///< distinct event subsets solved
};

OwbqExact exact_owbq(const ProblemTable &t, int cap = 14);

/// Exhaustive minimum (weighted) set cover over all subset families.
struct CoverExact {
  double value = 0.0; ///< cardinality, or total weight when weighted
  std::vector<int> cover;
  long nodes_explored = 0;
};

CoverExact brute_min_cover(const SetCoverInstance &sc, int cap = 20);

/// Classic capacity-indexed knapsack DP on weights scaled to integers.
/// Uniform-value mode (no item_values) maximizes the packed item count;
/// value mode maximizes total value.
struct KnapsackExact {
  double value = 0.0;
  std::vector<int> items;
  long states = 0;
};

KnapsackExact knapsack_dp(const KnapsackInstance &ks, double scale = 1000.0);

/// Exact limited-depth questionnaire by recursion over (event subset,
/// remaining budget), minimizing the degree of identification.
struct LdqExact {
  double degree = 0.0;
  Partition partition;
  long nodes_explored = 0;
};

LdqExact exact_ldq(const LdqInstance &inst, int cap = 12);

} // namespace questopt
