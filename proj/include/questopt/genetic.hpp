#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "questopt/selector.hpp"

namespace questopt {

/// Parameters of the genetic algorithm. genotype_length 0 means the
/// default n*k (the low end of the sensible range, which runs up to
/// n^2 * k^2).
struct GaParams {
  int population_size = 30;
  double mating_rate = 1.0; ///< average matings per individual per generation
  double mutation_rate = 0.2;
  int genotype_length = 0;
  int generations_without_improvement = 15;
  int max_generations = 200;
  std::vector<ElementaryRqsf> rqsf_set;
  CharFn char_fn = CharFn::Entropy;
  std::uint64_t seed = 1;
  /// Use the raw C - min(C) fitness scale instead of the inverted
  /// max(C) - C one. With the raw scale the cheapest individual gets the
  /// smallest weight; kept selectable for comparison runs only.
  bool literal_fitness_scaling = false;
};

/// A GA individual: one elementary RQSF per equal-width interval.
struct Genotype {
  std::vector<ElementaryRqsf> genes;
  std::optional<double> cached_cost;

  int length() const { return static_cast<int>(genes.size()); }
};

/// Builds the fixed system of |genes| equal-width intervals spanning the
/// root table's theoretical characteristic-function range and constructs
/// the questionnaire it encodes.
Questionnaire decode(const Genotype &g, const ProblemTable &t, CharFn fn);

/// One-point crossover at `point` (1 <= point <= L-1).
std::pair<Genotype, Genotype> crossover(const Genotype &a, const Genotype &b,
                                        int point);

/// Replaces ceil(L / question_count) distinct, uniformly chosen genes,
/// each with a uniformly chosen different member of the set.
Genotype mutate(const Genotype &g, const std::vector<ElementaryRqsf> &rqsf_set,
                int question_count, std::mt19937_64 &rng);

/// Selection weights from questionnaire costs: w = max(C) - C + delta with
/// a small floor delta so the worst individual keeps nonzero mass; lower
/// cost means strictly larger weight. `literal` switches to C - min(C) +
/// delta.
std::vector<double> selection_weight(const std::vector<double> &costs,
                                     bool literal = false);

struct GenerationRow {
  int generation = 0;
  double best_cost = 0.0;
  double mean_cost = 0.0;
  long evaluations = 0; ///< cumulative decode+cost evaluations
};

struct GaResult {
  Questionnaire questionnaire;
  Genotype best;
  std::vector<GenerationRow> log; ///< row 0 is the initial population
  double cost = 0.0;
};

/**
 * The generational loop: random initial population, weight-proportional
 * parent selection, one-point crossover, per-offspring mutation, all
 * offspring added, then one competitive trim back to population_size.
 * Halts after generations_without_improvement stagnant generations or
 * max_generations, whichever comes first. Fully deterministic per seed.
 */
GaResult evolve(const ProblemTable &t, const GaParams &params);

} // namespace questopt
