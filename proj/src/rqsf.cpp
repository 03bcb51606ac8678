#include "questopt/rqsf.hpp"

#include <cmath>
#include <limits>

#include "questopt/errors.hpp"

namespace questopt {

std::string to_token(const ElementaryRqsf &f) {
  switch (f.kind) {
  case ElementaryRqsf::Kind::MinCost:
    return "mc";
  case ElementaryRqsf::Kind::MaxEntropyDrop:
    return "dh";
  case ElementaryRqsf::Kind::EntropyDropPerCost:
    return "dhc";
  case ElementaryRqsf::Kind::Qpf:
    return "qpf";
  case ElementaryRqsf::Kind::Dumb:
    return "d" + std::to_string(f.dumb_index);
  }
  throw InternalInvariantError("unknown RQSF kind");
}

ElementaryRqsf rqsf_from_token(const std::string &token) {
  if (token == "mc")
    return ElementaryRqsf::min_cost();
  if (token == "dh")
    return ElementaryRqsf::max_entropy_drop();
  if (token == "dhc")
    return ElementaryRqsf::entropy_drop_per_cost();
  if (token == "qpf")
    return ElementaryRqsf::qpf();
  if (token.size() > 1 && token[0] == 'd') {
    std::size_t consumed = 0;
    const int k = std::stoi(token.substr(1), &consumed);
    if (consumed == token.size() - 1 && k >= 0)
      return ElementaryRqsf::dumb(k);
  }
  throw MalformedError("unknown RQSF token: " + token);
}

namespace {

struct OutcomeMasses {
  double m0 = 0.0;
  double m1 = 0.0;
};

OutcomeMasses outcome_masses(const ProblemTable &t, int question) {
  OutcomeMasses m;
  for (int e = 0; e < t.event_count(); ++e)
    (t.outcome(question, e) ? m.m1 : m.m0) += t.masses[e];
  return m;
}

double side_entropy(const ProblemTable &t, int question, std::uint8_t side,
                    double side_mass) {
  double h = 0.0;
  for (int e = 0; e < t.event_count(); ++e) {
    if (t.outcome(question, e) != side || t.masses[e] <= 0.0)
      continue;
    const double p = t.masses[e] / side_mass;
    h -= p * std::log2(p);
  }
  return h;
}

} // namespace

double delta_entropy(const ProblemTable &t, int question) {
  if (question < 0 || question >= t.question_count())
    throw MalformedError("question index out of range");
  const double h = entropy(t);
  const auto masses = outcome_masses(t, question);
  const double total = masses.m0 + masses.m1;
  double conditional = 0.0;
  if (masses.m0 > 0.0)
    conditional += masses.m0 / total * side_entropy(t, question, 0, masses.m0);
  if (masses.m1 > 0.0)
    conditional += masses.m1 / total * side_entropy(t, question, 1, masses.m1);
  return h - conditional;
}

int apply_elementary(const ElementaryRqsf &f, const ProblemTable &t) {
  const int k = t.question_count();
  if (k == 0)
    throw UndefinedValueError("cannot select a question from a leaf table");

  // Lower score wins; ties break to the lowest question index.
  auto argmin_score = [&](auto score) {
    int best = 0;
    double best_score = score(0);
    for (int q = 1; q < k; ++q) {
      const double s = score(q);
      if (s < best_score) {
        best = q;
        best_score = s;
      }
    }
    return std::pair(best, best_score);
  };

  switch (f.kind) {
  case ElementaryRqsf::Kind::MinCost:
    return argmin_score([&](int q) { return t.costs[q]; }).first;
  case ElementaryRqsf::Kind::MaxEntropyDrop:
    return argmin_score([&](int q) { return -delta_entropy(t, q); }).first;
  case ElementaryRqsf::Kind::EntropyDropPerCost:
    return argmin_score([&](int q) { return -delta_entropy(t, q) / t.costs[q]; })
        .first;
  case ElementaryRqsf::Kind::Qpf: {
    const double total = t.total_mass();
    auto [best, best_score] = argmin_score([&](int q) {
      const auto m = outcome_masses(t, q);
      if (m.m0 <= 0.0 || m.m1 <= 0.0)
        return std::numeric_limits<double>::infinity();
      return t.costs[q] * total / m.m0 + t.costs[q] * total / m.m1;
    });
    if (std::isinf(best_score))
      return apply_elementary(ElementaryRqsf::min_cost(), t);
    return best;
  }
  case ElementaryRqsf::Kind::Dumb:
    return f.dumb_index % k;
  }
  throw InternalInvariantError("unknown RQSF kind");
}

std::vector<ElementaryRqsf> greedy_rqsf_set() {
  return {ElementaryRqsf::min_cost(), ElementaryRqsf::max_entropy_drop(),
          ElementaryRqsf::entropy_drop_per_cost(), ElementaryRqsf::qpf()};
}

std::vector<ElementaryRqsf> dumb_rqsf_set(int count) {
  std::vector<ElementaryRqsf> set;
  set.reserve(count);
  for (int k = 0; k < count; ++k)
    set.push_back(ElementaryRqsf::dumb(k));
  return set;
}

std::vector<ElementaryRqsf> mixed_rqsf_set(int dumb_count) {
  std::vector<ElementaryRqsf> set = greedy_rqsf_set();
  for (int k = 0; k < dumb_count; ++k)
    set.push_back(ElementaryRqsf::dumb(k));
  return set;
}

} // namespace questopt
