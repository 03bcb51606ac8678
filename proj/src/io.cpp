#include "questopt/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "questopt/errors.hpp"

namespace questopt {

std::string format_double(double v) {
  // Try increasing precision until the text round-trips exactly.
  char buffer[64];
  for (int precision : {15, 16, 17}) {
    std::snprintf(buffer, sizeof buffer, "%.*g", precision, v);
    if (std::strtod(buffer, nullptr) == v)
      break;
  }
  return buffer;
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty())
    lines.pop_back();
  return lines;
}

std::vector<std::string> tokens_of(const std::string &line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token)
    tokens.push_back(token);
  return tokens;
}

double parse_real(const std::string &token) {
  std::size_t consumed = 0;
  double v;
  try {
    v = std::stod(token, &consumed);
  } catch (const std::exception &) {
    throw MalformedError("not a number: " + token);
  }
  if (consumed != token.size() || !std::isfinite(v))
    throw MalformedError("not a number: " + token);
  return v;
}

int parse_int(const std::string &token) {
  std::size_t consumed = 0;
  int v;
  try {
    v = std::stoi(token, &consumed);
  } catch (const std::exception &) {
    throw MalformedError("not an integer: " + token);
  }
  if (consumed != token.size())
    throw MalformedError("not an integer: " + token);
  return v;
}

std::vector<double> parse_reals(const std::string &line,
                                std::size_t expected, const char *what) {
  const auto tokens = tokens_of(line);
  if (tokens.size() != expected)
    throw MalformedError(std::string("expected ") + std::to_string(expected) +
                         " " + what + ", got " +
                         std::to_string(tokens.size()));
  std::vector<double> values;
  values.reserve(tokens.size());
  for (const auto &token : tokens)
    values.push_back(parse_real(token));
  return values;
}

void append_reals(std::string &out, const std::vector<double> &values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += ' ';
    out += format_double(values[i]);
  }
  out += '\n';
}

} // namespace

std::string serialize_owbq(const ProblemTable &t) {
  std::string out = "OWBQ 1\n";
  out += std::to_string(t.event_count());
  out += ' ';
  out += std::to_string(t.question_count());
  out += '\n';
  append_reals(out, t.costs);
  append_reals(out, t.masses);
  for (int q = 0; q < t.question_count(); ++q) {
    for (int e = 0; e < t.event_count(); ++e)
      out += t.outcome(q, e) ? '1' : '0';
    out += '\n';
  }
  return out;
}

ProblemTable parse_owbq(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < 4 || tokens_of(lines[0]) != std::vector<std::string>{
                              "OWBQ", "1"})
    throw MalformedError("not an OWBQ 1 instance");
  const auto dims = tokens_of(lines[1]);
  if (dims.size() != 2)
    throw MalformedError("expected 'n k' on line 2");
  const int n = parse_int(dims[0]);
  const int k = parse_int(dims[1]);
  if (n < 1 || k < 0)
    throw MalformedError("need n >= 1 and k >= 0");
  if (lines.size() != static_cast<std::size_t>(4 + k))
    throw MalformedError("expected " + std::to_string(4 + k) +
                         " lines, got " + std::to_string(lines.size()));

  auto costs = parse_reals(lines[2], k, "costs");
  auto probs = parse_reals(lines[3], n, "probabilities");
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-6)
    throw MalformedError("probabilities sum to " + format_double(total) +
                         ", not 1");
  std::vector<std::string> rows(lines.begin() + 4, lines.end());
  // from_rows validates bits, positivity, and senseless rows
  return ProblemTable::from_rows(rows, std::move(costs), std::move(probs));
}

std::string serialize_msc(const SetCoverInstance &sc) {
  std::string out = "MSC 1\n";
  out += std::to_string(sc.universe_size);
  out += ' ';
  out += std::to_string(sc.subsets.size());
  out += '\n';
  if (sc.weights) {
    out += "weights:";
    for (double w : *sc.weights) {
      out += ' ';
      out += format_double(w);
    }
    out += '\n';
  }
  for (const auto &subset : sc.subsets) {
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i)
        out += ' ';
      out += std::to_string(subset[i]);
    }
    out += '\n';
  }
  return out;
}

SetCoverInstance parse_msc(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < 2 ||
      tokens_of(lines[0]) != std::vector<std::string>{"MSC", "1"})
    throw MalformedError("not an MSC 1 instance");
  const auto dims = tokens_of(lines[1]);
  if (dims.size() != 2)
    throw MalformedError("expected 'n m' on line 2");
  SetCoverInstance sc;
  sc.universe_size = parse_int(dims[0]);
  const int m = parse_int(dims[1]);
  if (sc.universe_size < 1 || m < 1)
    throw MalformedError("need n >= 1 and m >= 1");

  std::size_t next = 2;
  if (next < lines.size()) {
    auto tokens = tokens_of(lines[next]);
    if (!tokens.empty() && tokens[0] == "weights:") {
      if (static_cast<int>(tokens.size()) != m + 1)
        throw MalformedError("expected " + std::to_string(m) + " weights");
      sc.weights.emplace();
      for (int i = 1; i <= m; ++i)
        sc.weights->push_back(parse_real(tokens[i]));
      ++next;
    }
  }
  if (lines.size() - next != static_cast<std::size_t>(m))
    throw MalformedError("expected " + std::to_string(m) + " subset lines");
  for (; next < lines.size(); ++next) {
    std::vector<int> subset;
    for (const auto &token : tokens_of(lines[next]))
      subset.push_back(parse_int(token));
    sc.subsets.push_back(std::move(subset));
  }
  validate_instance(sc);
  return sc;
}

std::string serialize_ks(const KnapsackInstance &ks) {
  std::string out = "KS 1\n";
  out += std::to_string(ks.item_weights.size());
  out += ' ';
  out += format_double(ks.capacity);
  out += '\n';
  append_reals(out, ks.item_weights);
  if (ks.item_values)
    append_reals(out, *ks.item_values);
  return out;
}

KnapsackInstance parse_ks(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < 3 ||
      tokens_of(lines[0]) != std::vector<std::string>{"KS", "1"})
    throw MalformedError("not a KS 1 instance");
  const auto dims = tokens_of(lines[1]);
  if (dims.size() != 2)
    throw MalformedError("expected 'n capacity' on line 2");
  const int n = parse_int(dims[0]);
  if (n < 1)
    throw MalformedError("need at least one item");
  if (lines.size() != 3 && lines.size() != 4)
    throw MalformedError("expected 3 or 4 lines");

  KnapsackInstance ks;
  ks.capacity = parse_real(dims[1]);
  if (!(ks.capacity > 0.0))
    throw MalformedError("capacity must be positive");
  ks.item_weights = parse_reals(lines[2], n, "weights");
  for (double w : ks.item_weights)
    if (!(w > 0.0))
      throw MalformedError("item weights must be positive");
  if (lines.size() == 4) {
    ks.item_values = parse_reals(lines[3], n, "values");
    for (double v : *ks.item_values)
      if (!(v > 0.0))
        throw MalformedError("item values must be positive");
  }
  return ks;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw MalformedError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string &path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw MalformedError("cannot write " + path);
  out << content;
}

std::string trace_csv(const LsTrace &trace) {
  std::string out = "iteration,cost,neighbors_evaluated\n";
  for (const auto &row : trace) {
    out += std::to_string(row.iteration);
    out += ',';
    out += format_double(row.cost);
    out += ',';
    out += std::to_string(row.neighbors_evaluated);
    out += '\n';
  }
  return out;
}

std::string generation_log_csv(const std::vector<GenerationRow> &log) {
  std::string out = "generation,best_cost,mean_cost,evaluations\n";
  for (const auto &row : log) {
    out += std::to_string(row.generation);
    out += ',';
    out += format_double(row.best_cost);
    out += ',';
    out += format_double(row.mean_cost);
    out += ',';
    out += std::to_string(row.evaluations);
    out += '\n';
  }
  return out;
}

std::string genotype_line(const Genotype &g) {
  std::string out;
  for (std::size_t i = 0; i < g.genes.size(); ++i) {
    if (i)
      out += ' ';
    out += to_token(g.genes[i]);
  }
  out += '\n';
  return out;
}

} // namespace questopt
