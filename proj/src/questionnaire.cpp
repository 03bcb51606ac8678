#include "questopt/questionnaire.hpp"

#include <algorithm>
#include <unordered_map>

#include "questopt/errors.hpp"

namespace questopt {

int Questionnaire::internal_count() const {
  int count = 0;
  for (const Node &node : nodes)
    if (!node.is_leaf())
      ++count;
  return count;
}

std::vector<int> Questionnaire::leaf_labels() const {
  std::vector<int> labels;
  if (empty())
    return labels;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const Node &node = nodes[stack.back()];
    stack.pop_back();
    if (node.is_leaf()) {
      labels.push_back(node.event_label);
    } else {
      stack.push_back(node.child[1]);
      stack.push_back(node.child[0]);
    }
  }
  return labels;
}

namespace {

int copy_subtree(const std::vector<Questionnaire::Node> &src, int index,
                 std::vector<Questionnaire::Node> &dst) {
  const int out = static_cast<int>(dst.size());
  dst.push_back(src[index]);
  if (!src[index].is_leaf()) {
    dst[out].child[0] = copy_subtree(src, src[index].child[0], dst);
    dst[out].child[1] = copy_subtree(src, src[index].child[1], dst);
  }
  return out;
}

} // namespace

Questionnaire Questionnaire::subtree(int node_index) const {
  Questionnaire out;
  copy_subtree(nodes, node_index, out.nodes);
  return out;
}

Questionnaire Questionnaire::leaf(int event_label) {
  Questionnaire q;
  Node node;
  node.event_label = event_label;
  q.nodes.push_back(node);
  return q;
}

Questionnaire Questionnaire::internal(int question_label, Questionnaire s0,
                                      Questionnaire s1) {
  Questionnaire q;
  Node root;
  root.question_label = question_label;
  q.nodes.push_back(root);
  q.nodes[0].child[0] = copy_subtree(s0.nodes, 0, q.nodes);
  q.nodes[0].child[1] = copy_subtree(s1.nodes, 0, q.nodes);
  return q;
}

namespace {

bool equal_from(const Questionnaire &a, int ia, const Questionnaire &b,
                int ib) {
  const auto &na = a.nodes[ia];
  const auto &nb = b.nodes[ib];
  if (na.is_leaf() != nb.is_leaf())
    return false;
  if (na.is_leaf())
    return na.event_label == nb.event_label;
  return na.question_label == nb.question_label &&
         equal_from(a, na.child[0], b, nb.child[0]) &&
         equal_from(a, na.child[1], b, nb.child[1]);
}

} // namespace

bool Questionnaire::structurally_equal(const Questionnaire &a,
                                       const Questionnaire &b) {
  if (a.empty() || b.empty())
    return a.empty() == b.empty();
  return equal_from(a, 0, b, 0);
}

double questionnaire_cost(const Questionnaire &q, const ProblemTable &t) {
  if (q.empty())
    throw InconsistentQuestionnaireError("empty questionnaire");

  std::vector<int> leaves = q.leaf_labels();
  std::vector<int> events = t.event_labels;
  std::sort(leaves.begin(), leaves.end());
  std::sort(events.begin(), events.end());
  if (leaves != events)
    throw InconsistentQuestionnaireError(
        "questionnaire leaves do not match the table's event set");

  std::unordered_map<int, double> cost_of;
  for (int qi = 0; qi < t.question_count(); ++qi)
    cost_of.emplace(t.question_labels[qi], t.costs[qi]);
  std::unordered_map<int, double> mass_of;
  for (int e = 0; e < t.event_count(); ++e)
    mass_of.emplace(t.event_labels[e], t.masses[e]);

  double total = 0.0;
  // (node, accumulated path cost) pairs
  std::vector<std::pair<int, double>> stack{{0, 0.0}};
  while (!stack.empty()) {
    auto [index, path_cost] = stack.back();
    stack.pop_back();
    const auto &node = q.nodes[index];
    if (node.is_leaf()) {
      total += mass_of.at(node.event_label) * path_cost;
      continue;
    }
    auto it = cost_of.find(node.question_label);
    if (it == cost_of.end())
      throw InconsistentQuestionnaireError(
          "questionnaire asks a question the table does not have");
    stack.emplace_back(node.child[0], path_cost + it->second);
    stack.emplace_back(node.child[1], path_cost + it->second);
  }
  return total;
}

} // namespace questopt
