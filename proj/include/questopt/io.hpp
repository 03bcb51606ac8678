#pragma once

#include <string>
#include <string_view>

#include "questopt/genetic.hpp"
#include "questopt/local_search.hpp"
#include "questopt/reductions.hpp"
#include "questopt/table.hpp"

namespace questopt {

// Instance text formats (line-oriented, UTF-8). All three round-trip:
// parse(serialize(x)) == x.
//
//   OWBQ 1          MSC 1                KS 1
//   n k             n m                  n capacity
//   k costs         [weights: m reals]   n weights
//   n probs         m element lines      [n values]
//   k bit rows

std::string serialize_owbq(const ProblemTable &t);
ProblemTable parse_owbq(std::string_view text);

std::string serialize_msc(const SetCoverInstance &sc);
SetCoverInstance parse_msc(std::string_view text);

std::string serialize_ks(const KnapsackInstance &ks);
KnapsackInstance parse_ks(std::string_view text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view content);

// CSV dumps.
std::string trace_csv(const LsTrace &trace);
std::string generation_log_csv(const std::vector<GenerationRow> &log);
/// One line of RQSF tokens.
std::string genotype_line(const Genotype &g);

/// Shortest-width decimal that parses back to the same double.
std::string format_double(double v);

} // namespace questopt
