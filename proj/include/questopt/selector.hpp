#pragma once

#include <vector>

#include "questopt/intervals.hpp"
#include "questopt/questionnaire.hpp"
#include "questopt/rqsf.hpp"

namespace questopt {

/**
 * A composite root-question-selection function: an interval system over a
 * characteristic function's range plus one elementary RQSF per interval.
 * Building a questionnaire evaluates the characteristic function on each
 * subordinate problem, locates its interval and applies that interval's
 * elementary function.
 */
struct CompositeSelector {
  IntervalSystem intervals;
  std::vector<ElementaryRqsf> assignment; ///< one per interval

  friend bool operator==(const CompositeSelector &,
                         const CompositeSelector &) = default;
};

/// Single unbounded interval carrying one elementary function.
CompositeSelector constant_selector(CharFn fn, const ElementaryRqsf &f);

/// Top-down construction applying `f` at every subordinate problem.
Questionnaire build_elementary(const ElementaryRqsf &f, const ProblemTable &t);

/// Top-down construction driven by the composite selector. Deterministic:
/// equal inputs produce structurally equal trees.
Questionnaire build_questionnaire(const CompositeSelector &sel,
                                  const ProblemTable &t);

/// Characteristic-function values of every subordinate problem the
/// questionnaire induces on the table, one per internal node, in preorder.
std::vector<double> subordinate_char_values(const Questionnaire &q,
                                            const ProblemTable &t, CharFn fn);

/// The questionnaire-dependent interval system: one interval per distinct
/// characteristic value of the subordinate problems, boundaries midway
/// between adjacent distinct values.
IntervalSystem dynamic_intervals(const Questionnaire &q, const ProblemTable &t,
                                 CharFn fn);

/// Recomputes the dynamic interval system for `q` and assigns each new
/// interval the elementary RQSF that `old_sel` actually applied to the
/// subordinate problems falling in it. The returned selector rebuilds a
/// questionnaire structurally equal to `q`.
CompositeSelector rebuild_intervals_preserving(const CompositeSelector &old_sel,
                                               const Questionnaire &q,
                                               const ProblemTable &t);

} // namespace questopt
