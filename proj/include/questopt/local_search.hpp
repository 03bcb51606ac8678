#pragma once

#include <optional>
#include <vector>

#include "questopt/selector.hpp"

namespace questopt {

/// Configuration of the best-improvement local search over composite
/// selectors.
struct LsConfig {
  std::vector<ElementaryRqsf> rqsf_set; ///< nonempty neighborhood alphabet
  CharFn char_fn = CharFn::Entropy;
  int max_iterations = 1000;
};

struct LsTraceRow {
  int iteration = 0;
  double cost = 0.0;
  int neighbors_evaluated = 0;
};

/// Row 0 is the initial solution; every following row is an accepted
/// strictly-improving step, so the cost column strictly decreases.
using LsTrace = std::vector<LsTraceRow>;

struct LsResult {
  Questionnaire questionnaire;
  CompositeSelector selector;
  LsTrace trace;
  double cost = 0.0;
  long total_neighbors_evaluated = 0;
  int iterations = 0;
};

/**
 * Best-improvement local search. Starting from `init` (default: every
 * interval assigned Qpf), each iteration evaluates, on the frozen interval
 * system, every selector obtained by swapping one interval's elementary
 * RQSF for a different member of the set. The cheapest strictly improving
 * neighbor is accepted, after which the interval system is rebuilt from
 * the new questionnaire with RQSF types preserved per subordinate problem.
 * Halts when no neighbor improves or max_iterations is reached.
 *
 * Throws IncompleteTableError when the table is not logically complete.
 */
LsResult local_search(const ProblemTable &t, const LsConfig &cfg,
                      const std::optional<CompositeSelector> &init = {});

} // namespace questopt
