#include "questopt/selector.hpp"

#include <limits>

#include "questopt/errors.hpp"

namespace questopt {

CompositeSelector constant_selector(CharFn fn, const ElementaryRqsf &f) {
  CompositeSelector sel;
  sel.intervals.mode = IntervalSystem::Mode::Dynamic;
  sel.intervals.char_fn = fn;
  sel.intervals.upper_bounds = {std::numeric_limits<double>::infinity()};
  sel.assignment = {f};
  return sel;
}

namespace {

// Shared recursion for the elementary and composite builders. `pick`
// maps a multi-event subtable to the question index to ask.
template <typename PickFn>
Questionnaire build_top_down(const ProblemTable &t, PickFn &&pick) {
  if (t.event_count() == 1)
    return Questionnaire::leaf(t.event_labels[0]);
  if (t.question_count() == 0)
    throw InternalInvariantError(
        "multi-event table with no questions: table is not complete");
  const int q = pick(t);
  auto [side0, side1] = split_on(t, q);
  return Questionnaire::internal(t.question_labels[q],
                                 build_top_down(side0, pick),
                                 build_top_down(side1, pick));
}

} // namespace

Questionnaire build_elementary(const ElementaryRqsf &f, const ProblemTable &t) {
  return build_top_down(
      t, [&](const ProblemTable &sub) { return apply_elementary(f, sub); });
}

Questionnaire build_questionnaire(const CompositeSelector &sel,
                                  const ProblemTable &t) {
  if (sel.assignment.size() !=
      static_cast<std::size_t>(sel.intervals.size()))
    throw MalformedError("selector assignment does not match interval count");
  return build_top_down(t, [&](const ProblemTable &sub) {
    const double v = evaluate(sel.intervals.char_fn, sub);
    const ElementaryRqsf &f = sel.assignment[locate_interval(sel.intervals, v)];
    return apply_elementary(f, sub);
  });
}

namespace {

// Walks the questionnaire over the table, re-deriving each internal
// node's subordinate problem by splitting along the tree's questions.
template <typename Visit>
void walk_subordinates(const Questionnaire &q, int node_index,
                       const ProblemTable &t, Visit &&visit) {
  const auto &node = q.nodes[node_index];
  if (node.is_leaf())
    return;
  int question = -1;
  for (int i = 0; i < t.question_count(); ++i)
    if (t.question_labels[i] == node.question_label) {
      question = i;
      break;
    }
  if (question < 0)
    throw InconsistentQuestionnaireError(
        "questionnaire asks a question the table does not have");
  visit(t, node_index);
  auto [side0, side1] = split_on(t, question);
  walk_subordinates(q, node.child[0], side0, visit);
  walk_subordinates(q, node.child[1], side1, visit);
}

} // namespace

std::vector<double> subordinate_char_values(const Questionnaire &q,
                                            const ProblemTable &t, CharFn fn) {
  std::vector<double> values;
  if (q.empty())
    return values;
  walk_subordinates(q, 0, t, [&](const ProblemTable &sub, int) {
    values.push_back(evaluate(fn, sub));
  });
  return values;
}

IntervalSystem dynamic_intervals(const Questionnaire &q, const ProblemTable &t,
                                 CharFn fn) {
  return midpoint_intervals(fn, subordinate_char_values(q, t, fn));
}

CompositeSelector rebuild_intervals_preserving(const CompositeSelector &old_sel,
                                               const Questionnaire &q,
                                               const ProblemTable &t) {
  const CharFn fn = old_sel.intervals.char_fn;
  const std::vector<double> values = subordinate_char_values(q, t, fn);
  if (values.empty())
    return old_sel; // no subordinate problems: nothing to rebuild

  CompositeSelector next;
  next.intervals = midpoint_intervals(fn, values);
  next.assignment.assign(next.intervals.size(), ElementaryRqsf{});
  std::vector<bool> assigned(next.assignment.size(), false);

  for (double v : values) {
    const ElementaryRqsf &applied =
        old_sel.assignment[locate_interval(old_sel.intervals, v)];
    const int slot = locate_interval(next.intervals, v);
    if (assigned[slot] && !(next.assignment[slot] == applied))
      throw InternalInvariantError(
          "conflicting RQSF assignments while preserving intervals");
    next.assignment[slot] = applied;
    assigned[slot] = true;
  }
  for (bool done : assigned)
    if (!done)
      throw InternalInvariantError("interval without a subordinate problem");
  return next;
}

} // namespace questopt
