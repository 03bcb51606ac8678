#include "questopt/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "questopt/errors.hpp"

namespace questopt {

namespace {

// Per-question bitmask of the events answering 1, over root positions.
std::vector<std::uint32_t> outcome_masks(const ProblemTable &t) {
  std::vector<std::uint32_t> masks(t.question_count(), 0);
  for (int q = 0; q < t.question_count(); ++q)
    for (int e = 0; e < t.event_count(); ++e)
      if (t.outcome(q, e))
        masks[q] |= std::uint32_t{1} << e;
  return masks;
}

struct OwbqSolver {
  const ProblemTable &t;
  std::vector<std::uint32_t> qmask;
  std::uint32_t full;
  // subset -> (optimal cost, chosen root question; -1 for leaves)
  std::unordered_map<std::uint32_t, std::pair<double, int>> memo;

  double mass(std::uint32_t mask) const {
    double m = 0.0;
    for (std::uint32_t rest = mask; rest;) {
      const int e = std::countr_zero(rest);
      m += t.masses[e];
      rest &= rest - 1;
    }
    return m;
  }

  double solve(std::uint32_t mask) {
    auto it = memo.find(mask);
    if (it != memo.end())
      return it->second.first;
    if (std::popcount(mask) == 1) {
      memo.emplace(mask, std::pair(0.0, -1));
      return 0.0;
    }
    double best = std::numeric_limits<double>::infinity();
    int best_q = -1;
    const double subset_mass = mass(mask);
    for (int q = 0; q < t.question_count(); ++q) {
      const std::uint32_t m1 = mask & qmask[q];
      const std::uint32_t m0 = mask & ~qmask[q];
      if (m0 == 0 || m1 == 0)
        continue; // senseless on this subset
      const double cost =
          t.costs[q] * subset_mass + solve(m0) + solve(m1);
      if (cost < best) {
        best = cost;
        best_q = q;
      }
    }
    if (best_q < 0)
      throw IncompleteTableError(
          "event subset cannot be separated by any question");
    memo.emplace(mask, std::pair(best, best_q));
    return best;
  }

  Questionnaire rebuild(std::uint32_t mask) const {
    if (std::popcount(mask) == 1)
      return Questionnaire::leaf(t.event_labels[std::countr_zero(mask)]);
    const int q = memo.at(mask).second;
    return Questionnaire::internal(t.question_labels[q],
                                   rebuild(mask & ~qmask[q]),
                                   rebuild(mask & qmask[q]));
  }
};

} // namespace

OwbqExact exact_owbq(const ProblemTable &t, int cap) {
  if (t.event_count() > cap)
    throw CapExceededError("table exceeds the exact-solver cap of " +
                           std::to_string(cap) + " events");
  const auto report = validate_table(t);
  if (!report.complete)
    throw IncompleteTableError("table is not logically complete");

  OwbqSolver solver{t, outcome_masks(t),
                    t.event_count() == 32
                        ? ~std::uint32_t{0}
                        : (std::uint32_t{1} << t.event_count()) - 1,
                    {}};
  OwbqExact result;
  result.cost = solver.solve(solver.full);
  result.tree = solver.rebuild(solver.full);
  result.nodes_explored = static_cast<long>(solver.memo.size());
  return result;
}

CoverExact brute_min_cover(const SetCoverInstance &sc, int cap) {
  validate_instance(sc);
  const int m = static_cast<int>(sc.subsets.size());
  if (m > cap)
    throw CapExceededError("too many subsets for exhaustive cover search");

  std::vector<std::uint64_t> covers(m, 0);
  for (int s = 0; s < m; ++s)
    for (int u : sc.subsets[s])
      covers[s] |= std::uint64_t{1} << u;
  const std::uint64_t universe =
      sc.universe_size == 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << sc.universe_size) - 1;

  CoverExact result;
  result.value = std::numeric_limits<double>::infinity();
  for (std::uint32_t family = 1; family < (std::uint32_t{1} << m); ++family) {
    std::uint64_t covered = 0;
    double value = 0.0;
    for (int s = 0; s < m; ++s)
      if (family & (std::uint32_t{1} << s)) {
        covered |= covers[s];
        value += sc.weights ? (*sc.weights)[s] : 1.0;
      }
    ++result.nodes_explored;
    if (covered != universe || value >= result.value)
      continue;
    result.value = value;
    result.cover.clear();
    for (int s = 0; s < m; ++s)
      if (family & (std::uint32_t{1} << s))
        result.cover.push_back(s);
  }
  if (std::isinf(result.value))
    throw InfeasibleError("no family covers the universe");
  return result;
}

KnapsackExact knapsack_dp(const KnapsackInstance &ks, double scale) {
  const int n = static_cast<int>(ks.item_weights.size());
  if (n < 1)
    throw MalformedError("knapsack needs at least one item");
  if (!(ks.capacity >= 0.0))
    throw MalformedError("capacity must be non-negative");
  if (ks.item_values && ks.item_values->size() != ks.item_weights.size())
    throw MalformedError("value count does not match item count");

  const auto to_units = [scale](double x) {
    const double scaled = x * scale;
    if (scaled > 5e7)
      throw CapExceededError("scaled weight overflows the DP table");
    return static_cast<long>(std::llround(scaled));
  };
  const long capacity = to_units(ks.capacity);
  std::vector<long> weights(n);
  for (int i = 0; i < n; ++i) {
    weights[i] = to_units(ks.item_weights[i]);
    if (weights[i] <= 0)
      throw MalformedError("item weights must be positive");
  }
  if (static_cast<double>(n) * (capacity + 1) > 2e8)
    throw CapExceededError("DP table too large; lower the scale");

  std::vector<double> best(capacity + 1, 0.0);
  std::vector<std::vector<char>> take(
      n, std::vector<char>(capacity + 1, 0));
  for (int i = 0; i < n; ++i) {
    const double value = ks.item_values ? (*ks.item_values)[i] : 1.0;
    for (long c = capacity; c >= weights[i]; --c) {
      const double candidate = best[c - weights[i]] + value;
      if (candidate > best[c]) {
        best[c] = candidate;
        take[i][c] = 1;
      }
    }
  }

  KnapsackExact result;
  result.value = best[capacity];
  result.states = static_cast<long>(n) * (capacity + 1);
  long c = capacity;
  for (int i = n - 1; i >= 0; --i)
    if (take[i][c]) {
      result.items.push_back(i);
      c -= weights[i];
    }
  std::reverse(result.items.begin(), result.items.end());
  return result;
}

namespace {

struct LdqKey {
  std::uint32_t mask;
  long budget;
  bool operator==(const LdqKey &) const = default;
};

struct LdqKeyHash {
  std::size_t operator()(const LdqKey &key) const {
    return std::hash<std::uint64_t>{}(
        (static_cast<std::uint64_t>(key.mask) << 32) ^
        static_cast<std::uint64_t>(key.budget));
  }
};

struct LdqSolver {
  const ProblemTable &t;
  const std::vector<double> &sizes;
  std::vector<std::uint32_t> qmask;
  std::vector<long> cost_units;
  // (subset, remaining budget) -> (min degree, question; -1 for a block)
  std::unordered_map<LdqKey, std::pair<double, int>, LdqKeyHash> memo;

  double block_degree(std::uint32_t mask) const {
    double size = 0.0, mass = 0.0;
    for (std::uint32_t rest = mask; rest;) {
      const int e = std::countr_zero(rest);
      size += sizes[e];
      mass += t.masses[e];
      rest &= rest - 1;
    }
    return size * mass;
  }

  double solve(std::uint32_t mask, long budget) {
    const LdqKey key{mask, budget};
    auto it = memo.find(key);
    if (it != memo.end())
      return it->second.first;

    double best = block_degree(mask); // stopping here is always allowed
    int best_q = -1;
    if (std::popcount(mask) > 1) {
      for (int q = 0; q < t.question_count(); ++q) {
        if (cost_units[q] > budget)
          continue;
        const std::uint32_t m1 = mask & qmask[q];
        const std::uint32_t m0 = mask & ~qmask[q];
        if (m0 == 0 || m1 == 0)
          continue;
        const long rest = budget - cost_units[q];
        const double degree = solve(m0, rest) + solve(m1, rest);
        if (degree < best) {
          best = degree;
          best_q = q;
        }
      }
    }
    memo.emplace(key, std::pair(best, best_q));
    return best;
  }

  void rebuild(std::uint32_t mask, long budget, Partition &partition) const {
    const int q = memo.at(LdqKey{mask, budget}).second;
    if (q < 0) {
      Partition::Block block;
      for (std::uint32_t rest = mask; rest;) {
        const int e = std::countr_zero(rest);
        block.event_labels.push_back(t.event_labels[e]);
        block.mass += t.masses[e];
        block.size += sizes[e];
        rest &= rest - 1;
      }
      partition.blocks.push_back(std::move(block));
      return;
    }
    const long rest = budget - cost_units[q];
    rebuild(mask & ~qmask[q], rest, partition);
    rebuild(mask & qmask[q], rest, partition);
  }
};

} // namespace

LdqExact exact_ldq(const LdqInstance &inst, int cap) {
  const ProblemTable &t = inst.table;
  if (t.event_count() > cap)
    throw CapExceededError("instance exceeds the exact-LDQ cap of " +
                           std::to_string(cap) + " events");
  validate_structure(t);
  if (inst.sizes.size() != t.masses.size())
    throw MalformedError("size count does not match event count");

  // Costs and budget in integer units keep affordability and memo keys
  // exact regardless of subtraction order.
  constexpr double kUnits = 1e6;
  LdqSolver solver{t, inst.sizes, outcome_masks(t), {}, {}};
  solver.cost_units.reserve(t.question_count());
  for (double c : t.costs)
    solver.cost_units.push_back(std::llround(c * kUnits));
  const long budget = std::llround(inst.budget * kUnits);
  const std::uint32_t full =
      t.event_count() == 32 ? ~std::uint32_t{0}
                            : (std::uint32_t{1} << t.event_count()) - 1;

  LdqExact result;
  result.degree = solver.solve(full, budget);
  solver.rebuild(full, budget, result.partition);
  result.nodes_explored = static_cast<long>(solver.memo.size());
  return result;
}

} // namespace questopt
