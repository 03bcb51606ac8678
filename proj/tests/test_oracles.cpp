#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "questopt/errors.hpp"
#include "questopt/generate.hpp"
#include "questopt/genetic.hpp"
#include "questopt/local_search.hpp"
#include "questopt/oracles.hpp"
#include "support.hpp"

using namespace questopt;

TEST_CASE("exact solver on a two-event table") {
  const auto t = ProblemTable::from_rows({"01"}, {2.0}, {0.5, 0.5});
  const auto exact = exact_owbq(t);
  CHECK(exact.cost == doctest::Approx(2.0));
  CHECK(exact.tree.internal_count() == 1);
  CHECK(questionnaire_cost(exact.tree, t) == doctest::Approx(exact.cost));
}

TEST_CASE("memoized optimum equals naive tree enumeration") {
  for (std::uint64_t seed = 201; seed < 213; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3); // 3..5
    const auto t = generate_instance(n, 4, seed, 1.0, 9.0, ProbMode::Random);
    CHECK(exact_owbq(t).cost ==
          doctest::Approx(qtest::naive_optimal_cost(t)).epsilon(1e-12));
  }
}

TEST_CASE("the witness achieves the reported optimum") {
  for (std::uint64_t seed : {221u, 222u, 223u}) {
    const auto t = generate_instance(7, 5, seed, 1.0, 9.0, ProbMode::Random);
    const auto exact = exact_owbq(t);
    CHECK(questionnaire_cost(exact.tree, t) ==
          doctest::Approx(exact.cost).epsilon(1e-12));
    CHECK(exact.nodes_explored > 0);
  }
}

TEST_CASE("no heuristic beats the exact optimum") {
  const auto t = qtest::a3_table();
  const auto exact = exact_owbq(t);
  const double qpf =
      questionnaire_cost(build_elementary(ElementaryRqsf::qpf(), t), t);
  CHECK(exact.cost <= qpf + 1e-12);

  LsConfig cfg;
  cfg.rqsf_set = mixed_rqsf_set(t.question_count());
  CHECK(exact.cost <= local_search(t, cfg).cost + 1e-12);
}

TEST_CASE("doubling every cost exactly doubles the optimum") {
  const auto t = generate_instance(6, 4, 231, 1.0, 9.0, ProbMode::Random);
  auto doubled = t;
  for (double &c : doubled.costs)
    c *= 2.0;
  CHECK(exact_owbq(doubled).cost ==
        doctest::Approx(2.0 * exact_owbq(t).cost).epsilon(1e-12));
}

TEST_CASE("optimum is invariant under event permutation") {
  const auto t = generate_instance(7, 5, 241, 1.0, 9.0, ProbMode::Random);
  // rotate the event columns by two
  const int n = t.event_count();
  ProblemTable rotated = t;
  for (int e = 0; e < n; ++e) {
    const int src = (e + 2) % n;
    rotated.masses[e] = t.masses[src];
    rotated.event_labels[e] = t.event_labels[src];
    for (int q = 0; q < t.question_count(); ++q)
      rotated.bits[static_cast<std::size_t>(q) * n + e] = t.outcome(q, src);
  }
  CHECK(exact_owbq(rotated).cost ==
        doctest::Approx(exact_owbq(t).cost).epsilon(1e-12));
}

TEST_CASE("exact solver enforces its cap and completeness") {
  const auto big = generate_instance(9, 5, 251);
  CHECK_THROWS_AS(exact_owbq(big, 8), CapExceededError);
  const auto bad = ProblemTable::from_rows({"011"}, {1.0}, {0.4, 0.3, 0.3});
  CHECK_THROWS_AS(exact_owbq(bad), IncompleteTableError);
}

TEST_CASE("brute-force cover search") {
  SetCoverInstance sc;
  sc.universe_size = 3;
  sc.subsets = {{0, 1}, {1, 2}, {2}};
  const auto exact = brute_min_cover(sc);
  CHECK(exact.value == doctest::Approx(2.0));
  CHECK(exact.cover.size() == 2);

  SetCoverInstance whole;
  whole.universe_size = 4;
  whole.subsets = {{0, 1, 2, 3}, {1, 2}};
  CHECK(brute_min_cover(whole).value == doctest::Approx(1.0));

  SetCoverInstance singletons;
  singletons.universe_size = 4;
  singletons.subsets = {{0}, {1}, {2}, {3}};
  CHECK(brute_min_cover(singletons).value == doctest::Approx(4.0));

  SetCoverInstance weighted;
  weighted.universe_size = 2;
  weighted.subsets = {{0, 1}, {0}, {1}};
  weighted.weights = std::vector<double>{5.0, 1.0, 1.0};
  const auto best = brute_min_cover(weighted);
  CHECK(best.value == doctest::Approx(2.0));
  CHECK(best.cover == std::vector<int>{1, 2});
}

TEST_CASE("knapsack DP counts and values") {
  KnapsackInstance ks;
  ks.item_weights = {2.0, 3.0, 4.0};
  ks.capacity = 5.0;
  const auto uniform = knapsack_dp(ks);
  CHECK(uniform.value == doctest::Approx(2.0));
  CHECK(uniform.items.size() == 2);
  double packed = 0.0;
  for (int i : uniform.items)
    packed += ks.item_weights[i];
  CHECK(packed <= ks.capacity + 1e-9);

  ks.capacity = 0.0;
  CHECK(knapsack_dp(ks).value == doctest::Approx(0.0));

  ks.capacity = 9.0; // total weight
  CHECK(knapsack_dp(ks).items.size() == 3);

  ks.capacity = 5.0;
  ks.item_values = std::vector<double>{10.0, 1.0, 1.0};
  CHECK(knapsack_dp(ks).value == doctest::Approx(11.0));
}

TEST_CASE("uniform-value DP count equals the lightest-first count") {
  std::mt19937_64 rng(600);
  for (int round = 0; round < 12; ++round) {
    const auto ks = qtest::random_knapsack(7, rng, round % 4 == 0);
    const auto exact = knapsack_dp(ks);

    auto weights = ks.item_weights;
    std::sort(weights.begin(), weights.end());
    int count = 0;
    double used = 0.0;
    for (double w : weights) {
      if (used + w > ks.capacity + 1e-9)
        break;
      used += w;
      ++count;
    }
    CHECK(exact.value == doctest::Approx(count));
  }
}

TEST_CASE("exact limited-depth solver") {
  KnapsackInstance ks;
  ks.item_weights = {2.0, 3.0, 4.0};
  ks.capacity = 5.0;
  const auto inst = reduce_knapsack(ks);

  const auto exact = exact_ldq(inst);
  CHECK(exact.degree == doctest::Approx(3.0 / 9.0));
  CHECK(identification_degree(exact.partition) ==
        doctest::Approx(exact.degree).epsilon(1e-12));

  auto roomy = inst;
  roomy.budget = 1000.0;
  CHECK(exact_ldq(roomy).degree == doctest::Approx(1.0 / 3));

  auto zero = inst;
  zero.budget = 0.0;
  const auto blocked = exact_ldq(zero);
  CHECK(blocked.degree == doctest::Approx(1.0));
  CHECK(blocked.partition.blocks.size() == 1);
}

TEST_CASE("exact LDQ never exceeds the budgeted builder") {
  std::mt19937_64 rng(610);
  for (int round = 0; round < 8; ++round) {
    const auto ks = qtest::random_knapsack(6, rng);
    const auto inst = reduce_knapsack(ks);
    const auto sel =
        constant_selector(CharFn::Compactness, ElementaryRqsf::qpf());
    CHECK(exact_ldq(inst).degree <= ldq_build(sel, inst).degree + 1e-12);
  }
}

TEST_CASE("exact LDQ respects its cap") {
  KnapsackInstance ks;
  ks.item_weights.assign(13, 1.0);
  ks.capacity = 4.0;
  CHECK_THROWS_AS(exact_ldq(reduce_knapsack(ks), 12), CapExceededError);
}
