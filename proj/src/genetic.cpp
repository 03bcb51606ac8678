#include "questopt/genetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "questopt/errors.hpp"
#include "questopt/rng.hpp"

namespace questopt {

Questionnaire decode(const Genotype &g, const ProblemTable &t, CharFn fn) {
  if (g.genes.empty())
    throw MalformedError("empty genotype");
  const CharFnBounds bounds =
      char_fn_bounds(fn, t.event_count(), t.question_count());
  CompositeSelector sel;
  sel.intervals =
      equal_width_intervals(fn, bounds.lo, bounds.hi, g.length());
  sel.assignment = g.genes;
  if (sel.intervals.size() == 1 && g.length() > 1)
    sel.assignment = {g.genes.front()}; // degenerate span collapses
  return build_questionnaire(sel, t);
}

std::pair<Genotype, Genotype> crossover(const Genotype &a, const Genotype &b,
                                        int point) {
  if (a.length() != b.length())
    throw MalformedError("crossover needs genotypes of equal length");
  if (point < 1 || point >= a.length())
    throw MalformedError("crossover point out of range");
  Genotype c1, c2;
  c1.genes.assign(a.genes.begin(), a.genes.begin() + point);
  c1.genes.insert(c1.genes.end(), b.genes.begin() + point, b.genes.end());
  c2.genes.assign(b.genes.begin(), b.genes.begin() + point);
  c2.genes.insert(c2.genes.end(), a.genes.begin() + point, a.genes.end());
  return {std::move(c1), std::move(c2)};
}

Genotype mutate(const Genotype &g, const std::vector<ElementaryRqsf> &rqsf_set,
                int question_count, std::mt19937_64 &rng) {
  if (rqsf_set.size() < 2)
    throw MalformedError("mutation needs at least two RQSFs to choose from");
  if (question_count < 1)
    throw MalformedError("question count must be positive");
  const int length = g.length();
  int flips = (length + question_count - 1) / question_count; // ceil(L/r)
  flips = std::min(flips, length);

  // Partial Fisher-Yates picks `flips` distinct positions.
  std::vector<int> positions(length);
  std::iota(positions.begin(), positions.end(), 0);
  Genotype out = g;
  out.cached_cost.reset();
  for (int i = 0; i < flips; ++i) {
    const int j =
        i + static_cast<int>(uniform_below(rng, length - i));
    std::swap(positions[i], positions[j]);
    const int pos = positions[i];

    std::size_t current = rqsf_set.size();
    for (std::size_t s = 0; s < rqsf_set.size(); ++s)
      if (rqsf_set[s] == out.genes[pos]) {
        current = s;
        break;
      }
    if (current == rqsf_set.size()) {
      out.genes[pos] =
          rqsf_set[uniform_below(rng, rqsf_set.size())];
    } else {
      std::size_t pick = uniform_below(rng, rqsf_set.size() - 1);
      if (pick >= current)
        ++pick;
      out.genes[pos] = rqsf_set[pick];
    }
  }
  return out;
}

std::vector<double> selection_weight(const std::vector<double> &costs,
                                     bool literal) {
  if (costs.empty())
    throw MalformedError("selection needs at least one cost");
  const auto [lo_it, hi_it] = std::minmax_element(costs.begin(), costs.end());
  const double floor = 1e-9 * (1.0 + *hi_it);
  std::vector<double> weights;
  weights.reserve(costs.size());
  for (double c : costs)
    weights.push_back(literal ? c - *lo_it + floor : *hi_it - c + floor);
  return weights;
}

namespace {

struct Individual {
  Genotype genotype;
  double cost = 0.0;
  long id = 0; ///< insertion order, breaks cost ties in the trim
};

std::size_t draw_weighted(const std::vector<double> &cumulative,
                          std::mt19937_64 &rng) {
  const double u = uniform_unit(rng) * cumulative.back();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  if (it == cumulative.end())
    --it;
  return static_cast<std::size_t>(it - cumulative.begin());
}

} // namespace

GaResult evolve(const ProblemTable &t, const GaParams &params) {
  if (params.population_size < 2)
    throw MalformedError("population size must be at least 2");
  if (!(params.mating_rate > 0.0))
    throw MalformedError("mating rate must be positive");
  if (params.mutation_rate < 0.0 || params.mutation_rate > 1.0)
    throw MalformedError("mutation rate must lie in [0, 1]");
  if (params.rqsf_set.empty())
    throw MalformedError("GA needs a nonempty RQSF set");
  if (params.mutation_rate > 0.0 && params.rqsf_set.size() < 2)
    throw MalformedError("mutation needs at least two RQSFs in the set");
  const auto report = validate_table(t);
  if (!report.complete)
    throw IncompleteTableError("table is not logically complete");

  const int n = t.event_count();
  const int k = t.question_count();
  const int length =
      params.genotype_length > 0 ? params.genotype_length : n * k;
  if (length < 1)
    throw MalformedError("genotype length must be positive");

  std::mt19937_64 rng(params.seed);
  auto evaluate_cost = [&](const Genotype &g) {
    return questionnaire_cost(decode(g, t, params.char_fn), t);
  };

  long evaluations = 0;
  long next_id = 0;
  std::vector<Individual> population;
  population.reserve(params.population_size * 2);
  for (int i = 0; i < params.population_size; ++i) {
    Individual ind;
    ind.genotype.genes.reserve(length);
    for (int j = 0; j < length; ++j)
      ind.genotype.genes.push_back(
          params.rqsf_set[uniform_below(rng, params.rqsf_set.size())]);
    ind.cost = evaluate_cost(ind.genotype);
    ind.genotype.cached_cost = ind.cost;
    ind.id = next_id++;
    ++evaluations;
    population.push_back(std::move(ind));
  }

  auto by_fitness = [](const Individual &a, const Individual &b) {
    if (a.cost != b.cost)
      return a.cost < b.cost;
    return a.id < b.id;
  };
  std::sort(population.begin(), population.end(), by_fitness);

  GaResult result;
  auto log_generation = [&](int generation) {
    double sum = 0.0;
    for (const Individual &ind : population)
      sum += ind.cost;
    result.log.push_back({generation, population.front().cost,
                          sum / population.size(), evaluations});
  };
  log_generation(0);

  const int matings = static_cast<int>(
      std::ceil(params.population_size * params.mating_rate));
  int stagnant = 0;
  int generation = 0;
  do {
    std::vector<double> costs(population.size());
    for (std::size_t i = 0; i < population.size(); ++i)
      costs[i] = population[i].cost;
    std::vector<double> cumulative =
        selection_weight(costs, params.literal_fitness_scaling);
    std::partial_sum(cumulative.begin(), cumulative.end(), cumulative.begin());

    const double previous_best = population.front().cost;
    std::vector<Individual> offspring;
    offspring.reserve(2 * matings);
    for (int m = 0; m < matings; ++m) {
      const std::size_t male = draw_weighted(cumulative, rng);
      std::size_t female = draw_weighted(cumulative, rng);
      if (female == male)
        female = draw_weighted(cumulative, rng); // one re-draw, then accept

      std::pair<Genotype, Genotype> children;
      if (length >= 2) {
        const int point = uniform_int(rng, 1, length - 1);
        children = crossover(population[male].genotype,
                             population[female].genotype, point);
      } else {
        children = {population[male].genotype, population[female].genotype};
      }
      for (Genotype *child : {&children.first, &children.second}) {
        if (params.mutation_rate > 0.0 &&
            uniform_unit(rng) < params.mutation_rate)
          *child = mutate(*child, params.rqsf_set, k, rng);
        Individual ind;
        ind.genotype = std::move(*child);
        ind.cost = evaluate_cost(ind.genotype);
        ind.genotype.cached_cost = ind.cost;
        ind.id = next_id++;
        ++evaluations;
        offspring.push_back(std::move(ind));
      }
    }

    for (Individual &ind : offspring)
      population.push_back(std::move(ind));
    std::sort(population.begin(), population.end(), by_fitness);
    population.resize(params.population_size); // drop the least fit

    ++generation;
    const double improvement = previous_best - population.front().cost;
    stagnant = improvement > 0.0 ? 0 : stagnant + 1;
    log_generation(generation);
  } while (stagnant < params.generations_without_improvement &&
           generation < params.max_generations);

  result.best = population.front().genotype;
  result.cost = population.front().cost;
  result.questionnaire = decode(result.best, t, params.char_fn);
  return result;
}

} // namespace questopt
