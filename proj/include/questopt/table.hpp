#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace questopt {

/**
 * An individual weighted-binary-questionnaire problem: n events (columns),
 * k binary questions (rows), a positive cost per question and a
 * non-negative mass per event.
 *
 * At the root the masses are probabilities summing to 1. Tables produced by
 * split_on carry the parent's masses unnormalized, so the expected-cost
 * functional decomposes additively over subtables; entropy and the other
 * characteristic functions normalize internally.
 *
 * Labels identify the original events/questions and are preserved across
 * splits, so a node of a questionnaire built from a subtable still refers
 * to the root table's numbering.
 */
struct ProblemTable {
  /// bits[q * n + e]: outcome of question q for event e, 0 or 1.
  std::vector<std::uint8_t> bits;
  std::vector<double> costs;        ///< per question, > 0
  std::vector<double> masses;       ///< per event, >= 0
  std::vector<int> event_labels;    ///< unique, stable across splits
  std::vector<int> question_labels; ///< unique, stable across splits

  int event_count() const { return static_cast<int>(masses.size()); }
  int question_count() const { return static_cast<int>(costs.size()); }

  std::uint8_t outcome(int question, int event) const {
    return bits[static_cast<std::size_t>(question) * masses.size() + event];
  }

  double total_mass() const;

  /// Builds a table from bit-string rows ("0100...", one per question).
  /// Labels default to 0-based positions when not given.
  static ProblemTable from_rows(const std::vector<std::string> &rows,
                                std::vector<double> costs,
                                std::vector<double> masses,
                                std::vector<int> event_labels = {},
                                std::vector<int> question_labels = {});

  friend bool operator==(const ProblemTable &, const ProblemTable &) = default;
};

/// Outcome of the logical-completeness check.
struct CompletenessReport {
  bool complete = false;
  /// Present iff complete is false: the first pair of event labels
  /// (in column order) that no question separates.
  std::optional<std::pair<int, int>> witness;
};

/// Throws MalformedError unless dimensions are consistent, costs are
/// positive, masses non-negative, labels unique, and no question row is
/// single-outcome (senseless).
void validate_structure(const ProblemTable &table);

/// Logical completeness: every pair of event columns differs in at least
/// one question row. Structural problems throw MalformedError.
CompletenessReport validate_table(const ProblemTable &table);

/// Splits the table on a question: the s-subtable keeps exactly the events
/// whose outcome for `question` is s, drops that question's row, and drops
/// every row that became single-outcome on the kept events. Masses are
/// carried over unnormalized.
///
/// Throws SenselessSplitError when one outcome side is empty and
/// MalformedError when `question` is out of range or the table has fewer
/// than two events.
std::pair<ProblemTable, ProblemTable> split_on(const ProblemTable &table,
                                               int question);

/// Shannon entropy of the normalized event masses, in bits.
/// Zero-mass events contribute nothing; an all-zero table has no
/// distribution and throws UndefinedValueError.
double entropy(const ProblemTable &table);

/// Events per question, n/r. Throws UndefinedValueError on leaf tables
/// (r = 0).
double compactness(const ProblemTable &table);

/// Entropy of the question costs read as a discrete distribution
/// (costs normalized to sum 1). Throws UndefinedValueError when r = 0.
double cost_entropy(const ProblemTable &table);

} // namespace questopt
