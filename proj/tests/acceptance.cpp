// Acceptance suite: runs every criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "questopt/bench.hpp"
#include "questopt/errors.hpp"
#include "questopt/generate.hpp"
#include "questopt/genetic.hpp"
#include "questopt/io.hpp"
#include "questopt/local_search.hpp"
#include "questopt/oracles.hpp"
#include "questopt/reductions.hpp"
#include "questopt/selector.hpp"
#include "support.hpp"

using namespace questopt;

namespace {

struct Failure {
  std::string reason;
};

void expect(bool condition, const std::string &reason) {
  if (!condition)
    throw Failure{reason};
}

std::string fmt(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

// --- criterion bodies ------------------------------------------------

// 1. The reference questionnaire's cost equals the hand path-sum oracle.
void criterion_cost_fixture() {
  const auto t = qtest::a3_table();
  const auto tree = qtest::a3_reference_tree();
  const double oracle = qtest::a3_reference_cost_oracle();
  const double cost = questionnaire_cost(tree, t);
  expect(std::abs(cost - oracle) <= 1e-9,
         "cost " + fmt(cost) + " != oracle " + fmt(oracle));
}

// 2. Splitting the reference instance on question 1 reproduces the
//    documented outcome sets.
void criterion_split_fixture() {
  const auto [side0, side1] = split_on(qtest::a3_table(), 0);
  expect(side0.event_labels == std::vector<int>{1, 2, 3, 4, 5},
         "outcome-0 events differ");
  expect(side1.event_labels == std::vector<int>{6, 7, 8, 9},
         "outcome-1 events differ");
}

// 3. The preference function picks question 1, matching brute force.
void criterion_greedy_baseline() {
  const auto t = qtest::a3_table();
  const int picked = apply_elementary(ElementaryRqsf::qpf(), t);
  expect(picked == 0, "picked question index " + std::to_string(picked));

  int brute = -1;
  double brute_score = std::numeric_limits<double>::infinity();
  for (int q = 0; q < t.question_count(); ++q) {
    double m0 = 0.0, m1 = 0.0;
    for (int e = 0; e < t.event_count(); ++e)
      (t.outcome(q, e) ? m1 : m0) += t.masses[e];
    const double score = t.costs[q] / m0 + t.costs[q] / m1;
    if (score < brute_score) {
      brute_score = score;
      brute = q;
    }
  }
  expect(picked == brute, "brute-force scoring disagrees");
}

std::vector<ProblemTable> ls_instances() {
  std::vector<ProblemTable> tables;
  for (int i = 0; i < 50; ++i) {
    const int n = 6 + i % 7;       // 6..12
    const int k = 4 + (i * 3) % 7; // 4..10
    tables.push_back(generate_instance(
        n, k, 1000 + i, 1.0, 10.0,
        i % 2 ? ProbMode::Random : ProbMode::Uniform));
  }
  return tables;
}

// 4. Accepted steps strictly improve; greedy and mixed local search never
//    lose to the pure preference-function baseline.
void criterion_ls_dominance() {
  for (const auto &t : ls_instances()) {
    const double qpf_cost =
        questionnaire_cost(build_elementary(ElementaryRqsf::qpf(), t), t);
    for (bool mixed : {false, true}) {
      LsConfig cfg;
      cfg.rqsf_set = mixed ? mixed_rqsf_set(t.question_count())
                           : greedy_rqsf_set();
      const auto result = local_search(t, cfg);
      for (std::size_t i = 1; i < result.trace.size(); ++i)
        expect(result.trace[i].cost < result.trace[i - 1].cost,
               "non-decreasing accepted step");
      expect(result.cost <= qpf_cost + 1e-12,
             "LS cost " + fmt(result.cost) + " above QPF " + fmt(qpf_cost));
    }
  }
}

// 5. Exact optimum bounds every heuristic; the memoized solver matches
//    naive enumeration on small instances.
void criterion_oracle_sandwich() {
  for (int i = 0; i < 30; ++i) {
    const int n = 3 + i % 6; // 3..8
    const int k = 4 + i % 5; // 4..8
    const auto t = generate_instance(
        n, k, 2000 + i, 1.0, 10.0,
        i % 2 ? ProbMode::Random : ProbMode::Uniform);
    const double exact = exact_owbq(t).cost;

    std::vector<double> heuristic_costs;
    heuristic_costs.push_back(
        questionnaire_cost(build_elementary(ElementaryRqsf::qpf(), t), t));
    for (auto set : {greedy_rqsf_set(), dumb_rqsf_set(k), mixed_rqsf_set(k)}) {
      LsConfig cfg;
      cfg.rqsf_set = std::move(set);
      heuristic_costs.push_back(local_search(t, cfg).cost);
    }
    GaParams ga;
    ga.population_size = 16;
    ga.max_generations = 40;
    ga.generations_without_improvement = 6;
    ga.rqsf_set = mixed_rqsf_set(k);
    ga.seed = 3000 + i;
    heuristic_costs.push_back(evolve(t, ga).cost);

    for (double cost : heuristic_costs)
      expect(exact <= cost + 1e-9,
             "heuristic " + fmt(cost) + " beats exact " + fmt(exact));
    if (n <= 5)
      expect(std::abs(exact - qtest::naive_optimal_cost(t)) <= 1e-9,
             "memoized optimum differs from naive enumeration");
  }
}

// 6. Rebuilding the interval system after an accepted step regenerates a
//    structurally identical questionnaire. (Every local_search call also
//    verifies this internally after each accepted step.)
void criterion_interval_rebuild() {
  const auto tables = ls_instances();
  for (int i = 0; i < 10; ++i) {
    const auto &t = tables[i * 5];
    for (int steps : {1, 2, 3}) {
      LsConfig cfg;
      cfg.rqsf_set = mixed_rqsf_set(t.question_count());
      cfg.max_iterations = steps;
      const auto result = local_search(t, cfg);
      expect(build_questionnaire(result.selector, t) == result.questionnaire,
             "rebuilt selector generated a different questionnaire");
      expect(std::abs(questionnaire_cost(result.questionnaire, t) -
                      result.cost) <= 1e-12,
             "rebuilt cost drifted");
    }
  }
}

// 7. Seeded GA runs are reproducible, monotone, and bounded by the exact
//    optimum.
void criterion_ga_contract() {
  const auto t = qtest::a3_table();
  GaParams p;
  p.rqsf_set = mixed_rqsf_set(t.question_count());
  p.seed = 4242;
  const auto first = evolve(t, p);
  const auto second = evolve(t, p);
  expect(first.log.size() == second.log.size(), "log lengths differ");
  for (std::size_t i = 0; i < first.log.size(); ++i) {
    expect(first.log[i].generation == second.log[i].generation &&
               first.log[i].best_cost == second.log[i].best_cost &&
               first.log[i].mean_cost == second.log[i].mean_cost &&
               first.log[i].evaluations == second.log[i].evaluations,
           "generation logs differ at row " + std::to_string(i));
    if (i > 0)
      expect(first.log[i].best_cost <= first.log[i - 1].best_cost,
             "best cost increased between generations");
  }

  for (int i = 0; i < 5; ++i) {
    const int n = 4 + i; // 4..8
    const auto instance = generate_instance(n, 5, 4100 + i, 1.0, 10.0,
                                            ProbMode::Random);
    GaParams q;
    q.population_size = 16;
    q.max_generations = 40;
    q.generations_without_improvement = 6;
    q.rqsf_set = mixed_rqsf_set(5);
    q.seed = 4200 + i;
    expect(evolve(instance, q).cost >= exact_owbq(instance).cost - 1e-9,
           "GA beat the exact optimum");
  }
}

// 8. The exact questionnaire of a reduced set cover extracts a minimum
//    cover, and the probability rule stays valid.
void criterion_set_cover() {
  std::mt19937_64 rng(5000);
  for (int i = 0; i < 20; ++i) {
    const int universe = 3 + i % 6; // 3..8
    const int subsets = 2 + i % 5;  // 2..6
    const bool weighted = i >= 10;
    const auto sc = qtest::random_set_cover(universe, subsets, weighted, rng);

    const auto [table, mapping] = reduce_set_cover(sc);
    const int n = table.event_count() - 1;
    const int k = table.question_count();
    const double epsilon = table.masses.back();
    expect(epsilon * n * (k + 1) < 1.0, "epsilon rule violated");
    expect(table.masses.front() > 0.0, "y0 mass must stay positive");
    expect(std::abs(table.total_mass() - 1.0) <= 1e-9,
           "reduced masses do not sum to 1");

    const auto exact_tree = exact_owbq(table).tree;
    const auto cover = extract_cover(exact_tree, mapping);
    std::set<int> covered;
    for (int s : cover)
      covered.insert(sc.subsets[s].begin(), sc.subsets[s].end());
    expect(static_cast<int>(covered.size()) == sc.universe_size,
           "extracted set is not a cover");

    const auto brute = brute_min_cover(sc);
    double extracted_value = 0.0;
    for (int s : cover)
      extracted_value += weighted ? (*sc.weights)[s] : 1.0;
    expect(std::abs(extracted_value - brute.value) <= 1e-9,
           "extracted cover value " + fmt(extracted_value) +
               " != brute-force minimum " + fmt(brute.value));
  }
}

// 9. The exact limited-depth solver identifies exactly the DP-optimal
//    item count, with the matching degree of identification.
void criterion_knapsack_ldq() {
  std::mt19937_64 rng(6000);
  for (int i = 0; i < 20; ++i) {
    const int n = 2 + i % 9; // 2..10
    const auto ks = qtest::random_knapsack(n, rng, i % 4 == 0);
    const auto best_count = static_cast<int>(knapsack_dp(ks).items.size());

    const auto exact = exact_ldq(reduce_knapsack(ks));
    const double formula =
        double(best_count) / (double(n) * n) +
        double(n - best_count) * (n - best_count) / (double(n) * n);
    expect(std::abs(exact.degree - formula) <= 1e-9,
           "degree " + fmt(exact.degree) + " != " + fmt(formula) + " for " +
               std::to_string(best_count) + " of " + std::to_string(n) +
               " items");

    int singletons = 0;
    for (const auto &block : exact.partition.blocks)
      if (block.event_labels.size() == 1)
        ++singletons;
    // asking n-1 affordable checks already identifies all n events
    const int expected = best_count >= n - 1 ? n : best_count;
    expect(singletons == expected,
           "identified " + std::to_string(singletons) + " items, expected " +
               std::to_string(expected));
  }
}

// 10. parse(serialize(x)) is the identity across all three formats.
void criterion_round_trips() {
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const auto t = generate_instance(
        4 + i % 8, 4 + i % 5, 7000 + i, 0.5, 12.0,
        i % 2 ? ProbMode::Random : ProbMode::Uniform);
    expect(parse_owbq(serialize_owbq(t)) == t, "OWBQ round trip failed");
    ++checked;
  }
  std::mt19937_64 msc_rng(7100);
  for (int i = 0; i < 30; ++i) {
    const auto sc = qtest::random_set_cover(3 + i % 6, 2 + i % 5,
                                            i % 2 == 0, msc_rng);
    expect(parse_msc(serialize_msc(sc)) == sc, "MSC round trip failed");
    ++checked;
  }
  std::mt19937_64 ks_rng(7200);
  for (int i = 0; i < 30; ++i) {
    auto ks = qtest::random_knapsack(2 + i % 8, ks_rng, i % 5 == 0);
    if (i % 2 == 0) {
      ks.item_values.emplace();
      for (std::size_t j = 0; j < ks.item_weights.size(); ++j)
        ks.item_values->push_back(uniform_int(ks_rng, 1, 30));
    }
    expect(parse_ks(serialize_ks(ks)) == ks, "KS round trip failed");
    ++checked;
  }
  expect(checked == 100, "expected 100 round-trip instances");
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *name;
    double budget_ms;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "reference-cost-fixture", 1.0, criterion_cost_fixture},
      {2, "split-outcome-sets", 60000.0, criterion_split_fixture},
      {3, "greedy-baseline", 1.0, criterion_greedy_baseline},
      {4, "ls-monotone-dominance", 10000.0, criterion_ls_dominance},
      {5, "oracle-sandwich", 60000.0, criterion_oracle_sandwich},
      {6, "interval-rebuild-identity", 10000.0, criterion_interval_rebuild},
      {7, "ga-contract", 30000.0, criterion_ga_contract},
      {8, "set-cover-reduction", 30000.0, criterion_set_cover},
      {9, "knapsack-ldq", 30000.0, criterion_knapsack_ldq},
      {10, "format-round-trips", 60000.0, criterion_round_trips},
  };

  // touch the fixture once so the first timed criterion is not paying
  // one-time allocator setup
  questionnaire_cost(qtest::a3_reference_tree(), qtest::a3_table());

  int failures = 0;
  for (const auto &criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      criterion.body();
    } catch (const Failure &f) {
      failure = f.reason;
    } catch (const std::exception &e) {
      failure = std::string("unexpected error: ") + e.what();
    }
    const double elapsed_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
    if (failure.empty() && elapsed_ms > criterion.budget_ms)
      failure = "took " + fmt(elapsed_ms) + " ms, budget " +
                fmt(criterion.budget_ms) + " ms";
    if (failure.empty()) {
      std::printf("PASS criterion %2d %-26s (%.2f ms)\n", criterion.id,
                  criterion.name, elapsed_ms);
    } else {
      ++failures;
      std::printf("FAIL criterion %2d %-26s (%.2f ms): %s\n", criterion.id,
                  criterion.name, elapsed_ms, failure.c_str());
    }
  }
  if (failures)
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else
    std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
