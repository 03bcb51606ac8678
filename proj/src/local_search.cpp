#include "questopt/local_search.hpp"

#include "questopt/errors.hpp"

namespace questopt {

LsResult local_search(const ProblemTable &t, const LsConfig &cfg,
                      const std::optional<CompositeSelector> &init) {
  if (cfg.rqsf_set.empty())
    throw MalformedError("local search needs a nonempty RQSF set");
  if (cfg.max_iterations < 1)
    throw MalformedError("max_iterations must be at least 1");
  const auto report = validate_table(t);
  if (!report.complete)
    throw IncompleteTableError("table is not logically complete");

  LsResult result;
  const CompositeSelector start =
      init ? *init : constant_selector(cfg.char_fn, ElementaryRqsf::qpf());
  result.questionnaire = build_questionnaire(start, t);
  // Canonical form: dynamic intervals of the current questionnaire with
  // the applied RQSF types carried over.
  result.selector = rebuild_intervals_preserving(start, result.questionnaire, t);
  result.cost = questionnaire_cost(result.questionnaire, t);
  result.trace.push_back({0, result.cost, 0});

  for (int iteration = 1; iteration <= cfg.max_iterations; ++iteration) {
    int evaluated = 0;
    bool found = false;
    double best_cost = result.cost;
    CompositeSelector best_selector;
    Questionnaire best_tree;

    // The interval system stays frozen while the neighborhood is scored.
    for (int i = 0; i < result.selector.intervals.size(); ++i) {
      for (const ElementaryRqsf &candidate : cfg.rqsf_set) {
        if (candidate == result.selector.assignment[i])
          continue;
        CompositeSelector neighbor = result.selector;
        neighbor.assignment[i] = candidate;
        Questionnaire tree = build_questionnaire(neighbor, t);
        const double cost = questionnaire_cost(tree, t);
        ++evaluated;
        if (cost < best_cost) {
          best_cost = cost;
          best_selector = std::move(neighbor);
          best_tree = std::move(tree);
          found = true;
        }
      }
    }

    result.total_neighbors_evaluated += evaluated;
    result.iterations = iteration;
    if (!found)
      break;

    result.questionnaire = std::move(best_tree);
    result.cost = best_cost;
    result.selector =
        rebuild_intervals_preserving(best_selector, result.questionnaire, t);
    if (!(build_questionnaire(result.selector, t) == result.questionnaire))
      throw InternalInvariantError(
          "interval rebuild changed the generated questionnaire");
    result.trace.push_back({iteration, result.cost, evaluated});
  }

  return result;
}

} // namespace questopt
