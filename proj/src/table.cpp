#include "questopt/table.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <set>

#include "questopt/errors.hpp"

namespace questopt {

double ProblemTable::total_mass() const {
  return std::accumulate(masses.begin(), masses.end(), 0.0);
}

ProblemTable ProblemTable::from_rows(const std::vector<std::string> &rows,
                                     std::vector<double> costs,
                                     std::vector<double> masses,
                                     std::vector<int> event_labels,
                                     std::vector<int> question_labels) {
  ProblemTable t;
  const std::size_t k = rows.size();
  const std::size_t n = masses.size();
  t.bits.reserve(k * n);
  for (const std::string &row : rows) {
    if (row.size() != n)
      throw MalformedError("row length does not match event count");
    for (char c : row) {
      if (c != '0' && c != '1')
        throw MalformedError("outcome characters must be 0 or 1");
      t.bits.push_back(c == '1' ? 1 : 0);
    }
  }
  t.costs = std::move(costs);
  t.masses = std::move(masses);
  if (event_labels.empty()) {
    event_labels.resize(n);
    std::iota(event_labels.begin(), event_labels.end(), 0);
  }
  if (question_labels.empty()) {
    question_labels.resize(k);
    std::iota(question_labels.begin(), question_labels.end(), 0);
  }
  t.event_labels = std::move(event_labels);
  t.question_labels = std::move(question_labels);
  validate_structure(t);
  return t;
}

namespace {

template <typename T> bool all_unique(const std::vector<T> &values) {
  std::set<T> seen(values.begin(), values.end());
  return seen.size() == values.size();
}

} // namespace

void validate_structure(const ProblemTable &t) {
  const std::size_t n = t.masses.size();
  const std::size_t k = t.costs.size();
  if (t.event_labels.size() != n || t.question_labels.size() != k)
    throw MalformedError("label count does not match table dimensions");
  if (t.bits.size() != n * k)
    throw MalformedError("outcome matrix does not match table dimensions");
  for (double c : t.costs)
    if (!(c > 0.0))
      throw MalformedError("question costs must be positive");
  for (double m : t.masses)
    if (!(m >= 0.0))
      throw MalformedError("event masses must be non-negative");
  if (!all_unique(t.event_labels) || !all_unique(t.question_labels))
    throw MalformedError("labels must be unique");
  for (std::size_t q = 0; q < k; ++q) {
    bool seen0 = false, seen1 = false;
    for (std::size_t e = 0; e < n; ++e)
      (t.bits[q * n + e] ? seen1 : seen0) = true;
    if (!seen0 || !seen1)
      throw MalformedError("question " +
                           std::to_string(t.question_labels[q]) +
                           " is senseless (single outcome)");
  }
}

CompletenessReport validate_table(const ProblemTable &t) {
  validate_structure(t);
  const int n = t.event_count();
  const int k = t.question_count();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      bool differs = false;
      for (int q = 0; q < k && !differs; ++q)
        differs = t.outcome(q, a) != t.outcome(q, b);
      if (!differs)
        return {false, std::make_pair(t.event_labels[a], t.event_labels[b])};
    }
  }
  return {true, std::nullopt};
}

std::pair<ProblemTable, ProblemTable> split_on(const ProblemTable &t,
                                               int question) {
  if (question < 0 || question >= t.question_count())
    throw MalformedError("question index out of range");
  if (t.event_count() < 2)
    throw MalformedError("cannot split a table with fewer than two events");

  const int n = t.event_count();
  std::array<std::vector<int>, 2> side_events;
  for (int e = 0; e < n; ++e)
    side_events[t.outcome(question, e)].push_back(e);
  if (side_events[0].empty() || side_events[1].empty())
    throw SenselessSplitError("question " +
                              std::to_string(t.question_labels[question]) +
                              " has an empty outcome side");

  auto make_side = [&](const std::vector<int> &events) {
    ProblemTable sub;
    sub.masses.reserve(events.size());
    sub.event_labels.reserve(events.size());
    for (int e : events) {
      sub.masses.push_back(t.masses[e]);
      sub.event_labels.push_back(t.event_labels[e]);
    }
    for (int q = 0; q < t.question_count(); ++q) {
      if (q == question)
        continue;
      bool seen0 = false, seen1 = false;
      for (int e : events)
        (t.outcome(q, e) ? seen1 : seen0) = true;
      if (!seen0 || !seen1)
        continue; // became senseless on this side
      sub.costs.push_back(t.costs[q]);
      sub.question_labels.push_back(t.question_labels[q]);
      for (int e : events)
        sub.bits.push_back(t.outcome(q, e));
    }
    return sub;
  };

  return {make_side(side_events[0]), make_side(side_events[1])};
}

namespace {

double mass_entropy(const std::vector<double> &masses) {
  const double total = std::accumulate(masses.begin(), masses.end(), 0.0);
  if (!(total > 0.0))
    throw UndefinedValueError("entropy of an all-zero mass is undefined");
  double h = 0.0;
  for (double m : masses) {
    if (m <= 0.0)
      continue; // 0 log 0 := 0
    const double p = m / total;
    h -= p * std::log2(p);
  }
  return h;
}

} // namespace

double entropy(const ProblemTable &t) { return mass_entropy(t.masses); }

double compactness(const ProblemTable &t) {
  if (t.question_count() == 0)
    throw UndefinedValueError("compactness is undefined on a leaf table");
  return static_cast<double>(t.event_count()) / t.question_count();
}

double cost_entropy(const ProblemTable &t) {
  if (t.question_count() == 0)
    throw UndefinedValueError("cost entropy is undefined on a leaf table");
  return mass_entropy(t.costs);
}

} // namespace questopt
