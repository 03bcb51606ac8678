#pragma once

#include <compare>
#include <string>
#include <vector>

#include "questopt/table.hpp"

namespace questopt {

/**
 * An elementary root-question-selection function. The four greedy rules
 * pick the root question of a (sub)problem by scoring every question;
 * Dumb(k) ignores the table content and returns question k modulo the
 * live question count, which makes it total on every nonempty table.
 *
 * Token form (selector dumps, genotype files): mc, dh, dhc, qpf, d<k>.
 */
struct ElementaryRqsf {
  enum class Kind {
    MinCost,            ///< argmin c(t)
    MaxEntropyDrop,     ///< argmax information gain
    EntropyDropPerCost, ///< argmax gain / cost
    Qpf,                ///< argmin c/p0 + c/p1
    Dumb                ///< constant k mod (question count)
  };

  Kind kind = Kind::Qpf;
  int dumb_index = 0; ///< the k of Dumb(k); ignored otherwise

  auto operator<=>(const ElementaryRqsf &) const = default;

  static ElementaryRqsf min_cost() { return {Kind::MinCost, 0}; }
  static ElementaryRqsf max_entropy_drop() { return {Kind::MaxEntropyDrop, 0}; }
  static ElementaryRqsf entropy_drop_per_cost() {
    return {Kind::EntropyDropPerCost, 0};
  }
  static ElementaryRqsf qpf() { return {Kind::Qpf, 0}; }
  static ElementaryRqsf dumb(int k) { return {Kind::Dumb, k}; }
};

std::string to_token(const ElementaryRqsf &f);
ElementaryRqsf rqsf_from_token(const std::string &token);

/// Information gain of asking question q: H(t) minus the mass-weighted
/// mean entropy of the two outcome subtables (weights and conditional
/// distributions normalized).
double delta_entropy(const ProblemTable &t, int question);

/// Applies an elementary RQSF to a table with at least one question and
/// returns the selected question index. Ties break to the lowest index.
/// Qpf scores a question +inf when an outcome side carries zero mass and
/// falls back to MinCost when every question scores +inf.
int apply_elementary(const ElementaryRqsf &f, const ProblemTable &t);

/// The four greedy rules, in table order.
std::vector<ElementaryRqsf> greedy_rqsf_set();
/// Dumb(0) .. Dumb(count-1).
std::vector<ElementaryRqsf> dumb_rqsf_set(int count);
/// Greedy rules plus Dumb(0) .. Dumb(dumb_count-1).
std::vector<ElementaryRqsf> mixed_rqsf_set(int dumb_count);

} // namespace questopt
