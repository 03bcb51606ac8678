#include "questopt/reductions.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include "questopt/errors.hpp"

namespace questopt {

void validate_instance(const SetCoverInstance &sc) {
  if (sc.universe_size < 1)
    throw MalformedError("universe must be nonempty");
  if (sc.subsets.empty())
    throw MalformedError("need at least one subset");
  if (sc.weights && sc.weights->size() != sc.subsets.size())
    throw MalformedError("weight count does not match subset count");
  if (sc.weights)
    for (double w : *sc.weights)
      if (!(w > 0.0))
        throw MalformedError("subset weights must be positive");

  std::vector<std::vector<int>> normalized;
  normalized.reserve(sc.subsets.size());
  std::vector<bool> covered(sc.universe_size, false);
  for (const auto &subset : sc.subsets) {
    if (subset.empty())
      throw MalformedError("empty subsets are not allowed");
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw MalformedError("subset lists an element twice");
    for (int u : sorted) {
      if (u < 0 || u >= sc.universe_size)
        throw MalformedError("subset element out of range");
      covered[u] = true;
    }
    normalized.push_back(std::move(sorted));
  }
  std::sort(normalized.begin(), normalized.end());
  if (std::adjacent_find(normalized.begin(), normalized.end()) !=
      normalized.end())
    throw MalformedError("duplicate subsets are not allowed");
  for (int u = 0; u < sc.universe_size; ++u)
    if (!covered[u])
      throw InfeasibleError("universe element " + std::to_string(u) +
                            " is covered by no subset");
}

std::pair<ProblemTable, SetCoverMapping>
reduce_set_cover(const SetCoverInstance &sc) {
  validate_instance(sc);
  const int k = static_cast<int>(sc.subsets.size());

  // Membership column of each universe element, then merge duplicates.
  std::vector<std::vector<std::uint8_t>> columns(
      sc.universe_size, std::vector<std::uint8_t>(k, 0));
  for (int s = 0; s < k; ++s)
    for (int u : sc.subsets[s])
      columns[u][s] = 1;

  std::map<std::vector<std::uint8_t>, int> column_event; // column -> event-1
  SetCoverMapping mapping;
  std::vector<std::vector<std::uint8_t>> distinct;
  for (int u = 0; u < sc.universe_size; ++u) {
    auto [it, inserted] = column_event.emplace(
        columns[u], static_cast<int>(distinct.size()));
    if (inserted) {
      distinct.push_back(columns[u]);
      mapping.event_to_elements.emplace_back();
    }
    mapping.event_to_elements[it->second].push_back(u);
  }
  const int n = static_cast<int>(distinct.size());

  double epsilon = 1.0 / (2.0 * n * (k + 1));
  if (sc.weights) {
    // Shrink epsilon with the total weight so the y0 branch dominates the
    // other branches' contribution whenever distinct cover weights differ
    // by at least 1/2.
    const double total_weight =
        std::accumulate(sc.weights->begin(), sc.weights->end(), 0.0);
    epsilon = 1.0 / (2.0 * n * (k + 1) * (1.0 + total_weight));
  }

  ProblemTable t;
  t.masses.reserve(n + 1);
  t.masses.push_back(1.0 - n * epsilon); // y0
  for (int e = 0; e < n; ++e)
    t.masses.push_back(epsilon);
  t.event_labels.resize(n + 1);
  std::iota(t.event_labels.begin(), t.event_labels.end(), 0);
  t.costs = sc.weights ? *sc.weights : std::vector<double>(k, 1.0);
  t.question_labels.resize(k);
  std::iota(t.question_labels.begin(), t.question_labels.end(), 0);
  t.bits.reserve(static_cast<std::size_t>(k) * (n + 1));
  for (int s = 0; s < k; ++s) {
    t.bits.push_back(0); // y0 column is all zeroes
    for (int e = 0; e < n; ++e)
      t.bits.push_back(distinct[e][s]);
  }
  validate_structure(t);

  mapping.y0_label = 0;
  mapping.question_to_subset.resize(k);
  std::iota(mapping.question_to_subset.begin(),
            mapping.question_to_subset.end(), 0);
  return {std::move(t), std::move(mapping)};
}

namespace {

bool find_path(const Questionnaire &q, int node, int target_label,
               std::vector<int> &questions) {
  const auto &nd = q.nodes[node];
  if (nd.is_leaf())
    return nd.event_label == target_label;
  questions.push_back(nd.question_label);
  if (find_path(q, nd.child[0], target_label, questions) ||
      find_path(q, nd.child[1], target_label, questions))
    return true;
  questions.pop_back();
  return false;
}

} // namespace

std::vector<int> extract_cover(const Questionnaire &q,
                               const SetCoverMapping &mapping) {
  std::vector<int> questions;
  if (q.empty() || !find_path(q, 0, mapping.y0_label, questions))
    throw InconsistentQuestionnaireError(
        "questionnaire has no leaf for the y0 event");
  std::vector<int> cover;
  cover.reserve(questions.size());
  for (int label : questions)
    cover.push_back(mapping.question_to_subset.at(label));
  std::sort(cover.begin(), cover.end());
  return cover;
}

double identification_degree(const Partition &p) {
  double degree = 0.0;
  for (const auto &block : p.blocks)
    degree += block.size * block.mass;
  return degree;
}

LdqInstance reduce_knapsack(const KnapsackInstance &ks) {
  const int n = static_cast<int>(ks.item_weights.size());
  if (n < 2)
    throw MalformedError("knapsack reduction needs at least two items");
  if (!(ks.capacity > 0.0))
    throw MalformedError("capacity must be positive");
  for (double w : ks.item_weights)
    if (!(w > 0.0))
      throw MalformedError("item weights must be positive");
  if (ks.item_values) {
    if (ks.item_values->size() != ks.item_weights.size())
      throw MalformedError("value count does not match item count");
    for (double v : *ks.item_values)
      if (!(v > 0.0))
        throw MalformedError("item values must be positive");
  }

  LdqInstance inst;
  ProblemTable &t = inst.table;
  t.costs = ks.item_weights;
  if (ks.item_values) {
    const double total =
        std::accumulate(ks.item_values->begin(), ks.item_values->end(), 0.0);
    for (double v : *ks.item_values)
      t.masses.push_back(v / total);
  } else {
    t.masses.assign(n, 1.0 / n);
  }
  t.event_labels.resize(n);
  std::iota(t.event_labels.begin(), t.event_labels.end(), 0);
  t.question_labels = t.event_labels;
  t.bits.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    t.bits[static_cast<std::size_t>(i) * n + i] = 1; // single-item check
  validate_structure(t);

  inst.budget = ks.capacity;
  inst.sizes.assign(n, 1.0 / n);
  return inst;
}

CompositeSelector backfill_selector(const CompositeSelector &sel,
                                    int target_intervals, CharFnBounds span) {
  if (sel.intervals.size() >= target_intervals)
    return sel;

  std::vector<double> bounds = sel.intervals.upper_bounds;
  bounds.pop_back(); // drop the +inf sentinel
  std::vector<ElementaryRqsf> assignment = sel.assignment;

  double lo = span.lo;
  double hi = span.hi;
  for (double b : bounds) {
    lo = std::min(lo, b);
    hi = std::max(hi, b);
  }

  while (static_cast<int>(assignment.size()) < target_intervals) {
    // Segment i runs from its left edge to bounds[i] (span edges at the
    // ends); pick the widest, leftmost on ties.
    int widest = -1;
    double widest_width = 0.0;
    double left = lo;
    for (std::size_t i = 0; i <= bounds.size(); ++i) {
      const double right = i < bounds.size() ? bounds[i] : hi;
      const double width = right - left;
      if (width > widest_width) {
        widest_width = width;
        widest = static_cast<int>(i);
      }
      left = right;
    }
    if (widest < 0 || widest_width <= 1e-12)
      break; // nothing left to halve

    double seg_left = widest == 0 ? lo : bounds[widest - 1];
    double seg_right =
        widest == static_cast<int>(bounds.size()) ? hi : bounds[widest];
    const double mid = (seg_left + seg_right) / 2.0;
    bounds.insert(bounds.begin() + widest, mid);
    assignment.insert(assignment.begin() + widest, assignment[widest]);
  }

  CompositeSelector out;
  out.intervals.mode = sel.intervals.mode;
  out.intervals.char_fn = sel.intervals.char_fn;
  out.intervals.upper_bounds = std::move(bounds);
  out.intervals.upper_bounds.push_back(
      std::numeric_limits<double>::infinity());
  out.assignment = std::move(assignment);
  return out;
}

namespace {

constexpr double kBudgetSlack = 1e-9;

struct LdqBuilder {
  const CompositeSelector &sel;
  const std::unordered_map<int, double> &size_of;
  Partition partition;

  void emit_block(const ProblemTable &t) {
    Partition::Block block;
    block.event_labels = t.event_labels;
    block.mass = t.total_mass();
    for (int label : t.event_labels)
      block.size += size_of.at(label);
    partition.blocks.push_back(std::move(block));
  }

  void build(const ProblemTable &t, double remaining) {
    if (t.event_count() == 1) {
      emit_block(t);
      return;
    }
    std::vector<int> affordable;
    for (int q = 0; q < t.question_count(); ++q)
      if (t.costs[q] <= remaining + kBudgetSlack)
        affordable.push_back(q);
    if (affordable.empty()) {
      emit_block(t);
      return;
    }

    int question;
    if (static_cast<int>(affordable.size()) == t.question_count()) {
      question = pick(t);
    } else {
      // Restrict the candidate rows to the affordable questions; the
      // 'dumb' modulus then runs over the affordable count.
      ProblemTable restricted;
      restricted.masses = t.masses;
      restricted.event_labels = t.event_labels;
      for (int q : affordable) {
        restricted.costs.push_back(t.costs[q]);
        restricted.question_labels.push_back(t.question_labels[q]);
        for (int e = 0; e < t.event_count(); ++e)
          restricted.bits.push_back(t.outcome(q, e));
      }
      question = affordable[pick(restricted)];
    }

    auto [side0, side1] = split_on(t, question);
    const double next = remaining - t.costs[question];
    build(side0, next);
    build(side1, next);
  }

  int pick(const ProblemTable &t) const {
    const double v = evaluate(sel.intervals.char_fn, t);
    return apply_elementary(sel.assignment[locate_interval(sel.intervals, v)],
                            t);
  }
};

} // namespace

LdqBuildResult ldq_build(const CompositeSelector &sel,
                         const LdqInstance &inst) {
  validate_structure(inst.table);
  if (inst.sizes.size() != inst.table.masses.size())
    throw MalformedError("size count does not match event count");
  for (double d : inst.sizes)
    if (!(d >= 0.0))
      throw MalformedError("event sizes must be non-negative");
  if (inst.budget < 0.0)
    throw MalformedError("budget must be non-negative");

  const int n = inst.table.event_count();
  CompositeSelector effective = sel;
  if (sel.intervals.mode == IntervalSystem::Mode::Dynamic &&
      sel.intervals.size() < n - 1)
    effective = backfill_selector(
        sel, n - 1,
        char_fn_bounds(sel.intervals.char_fn, n, inst.table.question_count()));

  std::unordered_map<int, double> size_of;
  for (int e = 0; e < n; ++e)
    size_of.emplace(inst.table.event_labels[e], inst.sizes[e]);

  LdqBuilder builder{effective, size_of, {}};
  builder.build(inst.table, inst.budget);

  LdqBuildResult result;
  result.partition = std::move(builder.partition);
  result.degree = identification_degree(result.partition);
  return result;
}

} // namespace questopt
