#pragma once

#include <array>
#include <vector>

#include "questopt/table.hpp"

namespace questopt {

/**
 * A binary questionnaire: a rooted tree whose internal nodes carry a
 * question label and whose leaves carry an event label. Outcome 0 of a
 * node's question leads to child 0, outcome 1 to child 1.
 *
 * Nodes live in a flat arena; node 0 is the root. The arena order is a
 * construction detail — equality is structural.
 */
struct Questionnaire {
  struct Node {
    int question_label = -1;           ///< valid when internal
    int event_label = -1;              ///< valid when leaf
    std::array<int, 2> child{-1, -1};  ///< arena indices, internal only
    bool is_leaf() const { return event_label >= 0; }
  };

  std::vector<Node> nodes;

  bool empty() const { return nodes.empty(); }
  const Node &root() const { return nodes.front(); }

  /// Number of internal nodes (questions asked somewhere in the tree).
  int internal_count() const;

  /// Event labels of all leaves, in left-to-right (outcome 0 first) order.
  std::vector<int> leaf_labels() const;

  /// Deep copy of the subtree rooted at an arena index, as its own tree.
  Questionnaire subtree(int node_index) const;

  static Questionnaire leaf(int event_label);
  static Questionnaire internal(int question_label, Questionnaire outcome0,
                                Questionnaire outcome1);

  friend bool operator==(const Questionnaire &a, const Questionnaire &b) {
    return structurally_equal(a, b);
  }

  static bool structurally_equal(const Questionnaire &a,
                                 const Questionnaire &b);
};

/// Expected identification cost of the questionnaire on the table:
/// sum over events of mass(event) * (total cost of the questions on the
/// root-to-leaf path). With root probabilities this is the mean cost of
/// identification; with unnormalized subtable masses it is the conditional
/// contribution, so cost decomposes additively over subtrees.
///
/// Throws InconsistentQuestionnaireError when the leaf labels do not match
/// the table's event set or a node names an unknown question.
double questionnaire_cost(const Questionnaire &q, const ProblemTable &t);

} // namespace questopt
