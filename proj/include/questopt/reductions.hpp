#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "questopt/questionnaire.hpp"
#include "questopt/selector.hpp"
#include "questopt/table.hpp"

namespace questopt {

/// A (weighted) set-cover instance over universe {0 .. universe_size-1}.
struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> subsets;
  std::optional<std::vector<double>> weights; ///< per subset, weighted variant

  friend bool operator==(const SetCoverInstance &,
                         const SetCoverInstance &) = default;
};

/// Throws MalformedError on structural problems (empty or duplicate
/// subsets, out-of-range elements, bad weights) and InfeasibleError when
/// some universe element is covered by no subset.
void validate_instance(const SetCoverInstance &sc);

/// Book-keeping to translate questionnaire results back to the cover.
struct SetCoverMapping {
  int y0_label = 0; ///< event label of the added all-zero column
  /// question label -> subset index (identity here, kept explicit).
  std::vector<int> question_to_subset;
  /// event label - 1 -> the universe elements merged into that column.
  std::vector<std::vector<int>> event_to_elements;
};

/**
 * Builds the questionnaire table of a set-cover instance: one question per
 * subset, one event per distinct universe column plus the all-zero event
 * y0. Universe elements with identical membership columns are merged. The
 * y0 event receives almost all probability mass; every other event gets an
 * epsilon chosen so that a cost-optimal questionnaire's root-to-y0 branch
 * is a minimum cover (for the weighted variant epsilon additionally
 * shrinks with the total weight, so weight gaps >= 1/2 stay decisive).
 */
std::pair<ProblemTable, SetCoverMapping>
reduce_set_cover(const SetCoverInstance &sc);

/// Subset indices on the root-to-y0 branch of the questionnaire; always a
/// cover of the instance's universe. Throws
/// InconsistentQuestionnaireError when the y0 leaf is missing.
std::vector<int> extract_cover(const Questionnaire &q,
                               const SetCoverMapping &mapping);

/// A partition of the event set into identified blocks, each carrying its
/// probability mass and its size under the event measure d.
struct Partition {
  struct Block {
    std::vector<int> event_labels;
    double mass = 0.0;
    double size = 0.0;
  };
  std::vector<Block> blocks;
};

/// Degree of identification: sum over blocks of size * mass. 1/n at full
/// identification under uniform sizes and probabilities, 1 for the trivial
/// single-block partition; lower is better.
double identification_degree(const Partition &p);

/// A 0-1 knapsack instance. item_values absent means the uniform-value
/// problem (maximize the number of packed items).
struct KnapsackInstance {
  std::vector<double> item_weights;
  double capacity = 0.0;
  std::optional<std::vector<double>> item_values;

  friend bool operator==(const KnapsackInstance &,
                         const KnapsackInstance &) = default;
};

/// A limited-depth questionnaire problem: every branch's total question
/// cost is capped by `budget`; solutions are scored by the degree of
/// identification of the induced partition, not by expected cost.
struct LdqInstance {
  ProblemTable table;
  double budget = 0.0;
  std::vector<double> sizes; ///< event measure d, aligned with event_labels
};

/**
 * Encodes a knapsack as a limited-depth questionnaire: one event per item,
 * one single-item check question per item (cost = item weight), uniform
 * event sizes, budget = capacity. Probabilities are uniform; when
 * item_values is present they are set proportional to the values instead —
 * an experimental encoding, useful only against the DP oracle, since the
 * uniform construction is exact for uniform values only.
 */
LdqInstance reduce_knapsack(const KnapsackInstance &ks);

struct LdqBuildResult {
  Partition partition;
  double degree = 0.0;
};

/**
 * Budgeted top-down construction: at every node the selector may only
 * pick questions whose cost fits the remaining branch budget; a node with
 * no affordable question becomes a leaf block. A Dynamic interval system
 * with fewer than n-1 intervals is first back-filled by repeatedly
 * halving the largest interval (new halves inherit the split interval's
 * RQSF).
 */
LdqBuildResult ldq_build(const CompositeSelector &sel, const LdqInstance &inst);

/// The back-fill used by ldq_build, exposed for direct use: grows the
/// selector to `target_intervals` by splitting the widest interval
/// (measured within `span`) at its midpoint.
CompositeSelector backfill_selector(const CompositeSelector &sel,
                                    int target_intervals, CharFnBounds span);

} // namespace questopt
