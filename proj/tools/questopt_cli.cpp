// questopt: build, solve, reduce and benchmark binary-questionnaire
// optimization instances. Machine-readable CSV goes to stdout, summaries
// and errors to stderr.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "questopt/bench.hpp"
#include "questopt/errors.hpp"
#include "questopt/generate.hpp"
#include "questopt/genetic.hpp"
#include "questopt/io.hpp"
#include "questopt/local_search.hpp"
#include "questopt/oracles.hpp"
#include "questopt/reductions.hpp"
#include "questopt/selector.hpp"

using namespace questopt;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

struct SolveFlags {
  std::string method;
  std::string char_fn = "entropy";
  std::uint64_t seed = 0;
  bool seed_given = false;
  int max_iterations = 1000;
  int dumb_count = 0; // 0: one constant per question
  int exact_cap = 14;
  GaParams ga;
  bool literal_scaling = false;
  std::string trace_path, log_path, genotype_path;
};

void add_solve_flags(CLI::App *cmd, SolveFlags &flags,
                     const std::vector<std::string> &methods) {
  cmd->add_option("--method", flags.method, "solver to run")
      ->required()
      ->check(CLI::IsMember(methods));
  cmd->add_option("--char-fn", flags.char_fn, "characteristic function")
      ->check(CLI::IsMember({"entropy", "compactness", "cost-entropy"}));
  auto *seed =
      cmd->add_option("--seed", flags.seed, "RNG seed (stochastic methods)");
  cmd->parse_complete_callback(
      [&flags, seed] { flags.seed_given = seed->count() > 0; });
  cmd->add_option("--max-iterations", flags.max_iterations,
                  "local search iteration cap");
  cmd->add_option("--dumb-count", flags.dumb_count,
                  "number of constant functions (default: question count)");
  cmd->add_option("--exact-cap", flags.exact_cap,
                  "event cap for the exact solver");
  cmd->add_option("--population-size", flags.ga.population_size);
  cmd->add_option("--mating-rate", flags.ga.mating_rate);
  cmd->add_option("--mutation-rate", flags.ga.mutation_rate);
  cmd->add_option("--genotype-length", flags.ga.genotype_length);
  cmd->add_option("--generations-without-improvement",
                  flags.ga.generations_without_improvement);
  cmd->add_option("--max-generations", flags.ga.max_generations);
  cmd->add_flag("--literal-fitness-scaling", flags.literal_scaling,
                "use the raw cost-minus-min fitness scale");
  cmd->add_option("--trace", flags.trace_path,
                  "write the local-search trace CSV here");
  cmd->add_option("--log", flags.log_path,
                  "write the GA generation log CSV here");
  cmd->add_option("--genotype", flags.genotype_path,
                  "write the best genotype's tokens here");
}

int dumb_count_for(const SolveFlags &flags, const ProblemTable &t) {
  return flags.dumb_count > 0 ? flags.dumb_count : t.question_count();
}

// Runs one OWBQ method; returns (cost, tree).
std::pair<double, Questionnaire> run_owbq_method(const SolveFlags &flags,
                                                 const ProblemTable &t) {
  const CharFn fn = char_fn_from_string(flags.char_fn);
  if (flags.method == "qpf") {
    auto tree = build_elementary(ElementaryRqsf::qpf(), t);
    return {questionnaire_cost(tree, t), std::move(tree)};
  }
  if (flags.method == "exact") {
    auto exact = exact_owbq(t, flags.exact_cap);
    return {exact.cost, std::move(exact.tree)};
  }
  if (flags.method == "ga") {
    if (!flags.seed_given)
      throw MalformedError("--seed is required for the ga method");
    GaParams params = flags.ga;
    params.char_fn = fn;
    params.seed = flags.seed;
    params.literal_fitness_scaling = flags.literal_scaling;
    if (params.rqsf_set.empty())
      params.rqsf_set = mixed_rqsf_set(dumb_count_for(flags, t));
    auto result = evolve(t, params);
    if (!flags.log_path.empty())
      write_file(flags.log_path, generation_log_csv(result.log));
    if (!flags.genotype_path.empty())
      write_file(flags.genotype_path, genotype_line(result.best));
    return {result.cost, std::move(result.questionnaire)};
  }

  LsConfig cfg;
  cfg.char_fn = fn;
  cfg.max_iterations = flags.max_iterations;
  if (flags.method == "ls-dumb")
    cfg.rqsf_set = dumb_rqsf_set(dumb_count_for(flags, t));
  else if (flags.method == "ls-greedy")
    cfg.rqsf_set = greedy_rqsf_set();
  else // ls-mixed
    cfg.rqsf_set = mixed_rqsf_set(dumb_count_for(flags, t));
  auto result = local_search(t, cfg);
  if (!flags.trace_path.empty())
    write_file(flags.trace_path, trace_csv(result.trace));
  return {result.cost, std::move(result.questionnaire)};
}

int run_gen(int n, int k, std::uint64_t seed, double cost_min,
            double cost_max, const std::string &prob_mode,
            const std::string &output) {
  const auto table = generate_instance(
      n, k, seed, cost_min, cost_max,
      prob_mode == "random" ? ProbMode::Random : ProbMode::Uniform);
  const std::string text = serialize_owbq(table);
  if (output.empty())
    std::cout << text;
  else
    write_file(output, text);
  std::cerr << "generated n=" << n << " k=" << k << " seed=" << seed << "\n";
  return 0;
}

int run_validate(const std::string &path) {
  const auto table = parse_owbq(read_file(path));
  const auto report = validate_table(table);
  std::cout << "complete,witness_a,witness_b\n";
  if (report.complete) {
    std::cout << "true,,\n";
    std::cerr << path << ": complete (n=" << table.event_count()
              << ", k=" << table.question_count() << ")\n";
  } else {
    std::cout << "false," << report.witness->first << ','
              << report.witness->second << "\n";
    std::cerr << path << ": events " << report.witness->first << " and "
              << report.witness->second << " are inseparable\n";
  }
  return 0;
}

int run_solve(const std::string &path, const SolveFlags &flags) {
  const auto table = parse_owbq(read_file(path));
  if (const auto report = validate_table(table); !report.complete)
    throw IncompleteTableError(
        path + ": events " + std::to_string(report.witness->first) + " and " +
        std::to_string(report.witness->second) + " are inseparable");
  Timer timer;
  const auto [cost, tree] = run_owbq_method(flags, table);
  const double elapsed = timer.ms();
  std::cout << "method,cost,time_ms\n"
            << flags.method << ',' << format_double(cost) << ','
            << format_double(elapsed) << "\n";
  std::cerr << path << ": " << flags.method << " cost "
            << format_double(cost) << " in " << elapsed << " ms ("
            << tree.internal_count() << " questions asked)\n";
  return 0;
}

int run_reduce_set_cover(const std::string &path, const SolveFlags &flags,
                         bool solve) {
  const auto sc = parse_msc(read_file(path));
  const auto [table, mapping] = reduce_set_cover(sc);
  if (!solve) {
    std::cout << serialize_owbq(table);
    std::cerr << "reduced " << path << " to an OWBQ instance with "
              << table.event_count() << " events\n";
    return 0;
  }
  Timer timer;
  const auto [cost, tree] = run_owbq_method(flags, table);
  const auto cover = extract_cover(tree, mapping);
  const double elapsed = timer.ms();
  double weight = 0.0;
  for (int s : cover)
    weight += sc.weights ? (*sc.weights)[s] : 1.0;
  std::cout << "method,cover_size,cover_weight,cost,time_ms,subsets\n"
            << flags.method << ',' << cover.size() << ','
            << format_double(weight) << ',' << format_double(cost) << ','
            << format_double(elapsed) << ",\"";
  for (std::size_t i = 0; i < cover.size(); ++i)
    std::cout << (i ? " " : "") << cover[i];
  std::cout << "\"\n";
  std::cerr << path << ": cover of " << cover.size() << " subsets, weight "
            << weight << "\n";
  return 0;
}

int run_reduce_knapsack(const std::string &path, const SolveFlags &flags,
                        bool solve) {
  const auto ks = parse_ks(read_file(path));
  const auto inst = reduce_knapsack(ks);
  if (!solve) {
    std::cout << serialize_owbq(inst.table);
    std::cerr << "reduced " << path << " to a depth-limited instance, budget "
              << format_double(inst.budget) << "\n";
    return 0;
  }

  Timer timer;
  Partition partition;
  double degree = 0.0;
  if (flags.method == "exact") {
    auto exact = exact_ldq(inst, std::max(flags.exact_cap, 12));
    partition = std::move(exact.partition);
    degree = exact.degree;
  } else { // qpf
    const auto sel = constant_selector(char_fn_from_string(flags.char_fn),
                                       ElementaryRqsf::qpf());
    auto built = ldq_build(sel, inst);
    partition = std::move(built.partition);
    degree = built.degree;
  }
  const double elapsed = timer.ms();

  std::vector<int> identified;
  for (const auto &block : partition.blocks)
    if (block.event_labels.size() == 1)
      identified.push_back(block.event_labels.front());
  std::sort(identified.begin(), identified.end());
  std::cout << "method,degree,identified_items,time_ms,items\n"
            << flags.method << ',' << format_double(degree) << ','
            << identified.size() << ',' << format_double(elapsed) << ",\"";
  for (std::size_t i = 0; i < identified.size(); ++i)
    std::cout << (i ? " " : "") << identified[i];
  std::cout << "\"\n";
  std::cerr << path << ": degree " << format_double(degree) << ", "
            << identified.size() << " items identified\n";
  return 0;
}

int run_bench_cmd(const std::vector<std::string> &paths,
                  const BenchOptions &options) {
  std::vector<std::pair<std::string, ProblemTable>> instances;
  for (const auto &path : paths) {
    std::string name = path;
    if (const auto slash = name.find_last_of('/');
        slash != std::string::npos)
      name = name.substr(slash + 1);
    instances.emplace_back(std::move(name), parse_owbq(read_file(path)));
  }
  const auto rows = run_bench(instances, options);
  std::cout << bench_csv(rows);
  int failed = 0;
  for (const auto &row : rows)
    if (!row.error.empty()) {
      ++failed;
      std::cerr << "error," << row.test << ',' << row.error << "\n";
    }
  std::cerr << rows.size() - failed << "/" << rows.size()
            << " instances completed\n";
  return failed ? 1 : 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"minimum-expected-cost binary questionnaires: greedy, local "
               "search, genetic search, exact solvers and reductions"};
  app.require_subcommand(1);

  // gen
  auto *gen = app.add_subcommand("gen", "generate a random OWBQ instance");
  int gen_n = 9, gen_k = 5;
  std::uint64_t gen_seed = 1;
  double cost_min = 1.0, cost_max = 10.0;
  std::string prob_mode = "uniform", gen_output;
  gen->add_option("--n", gen_n, "number of events")->required();
  gen->add_option("--k", gen_k, "number of questions")->required();
  gen->add_option("--seed", gen_seed, "RNG seed")->required();
  gen->add_option("--cost-min", cost_min);
  gen->add_option("--cost-max", cost_max);
  gen->add_option("--prob-mode", prob_mode)
      ->check(CLI::IsMember({"uniform", "random"}));
  gen->add_option("-o,--output", gen_output, "write here instead of stdout");

  // validate
  auto *validate = app.add_subcommand(
      "validate", "parse an OWBQ instance and check logical completeness");
  std::string validate_path;
  validate->add_option("file", validate_path)->required();

  // solve
  auto *solve = app.add_subcommand("solve", "solve an OWBQ instance");
  std::string solve_path;
  SolveFlags solve_flags;
  solve->add_option("file", solve_path)->required();
  add_solve_flags(solve, solve_flags,
                  {"qpf", "ls-dumb", "ls-greedy", "ls-mixed", "ga", "exact"});

  // reduce
  auto *reduce = app.add_subcommand("reduce", "reduce other problems to "
                                              "questionnaire instances");
  reduce->require_subcommand(1);
  auto *reduce_sc = reduce->add_subcommand(
      "set-cover", "minimum/weighted set cover to OWBQ");
  std::string reduce_sc_path;
  SolveFlags reduce_sc_flags;
  reduce_sc_flags.char_fn = "compactness";
  reduce_sc->add_option("file", reduce_sc_path)->required();
  bool reduce_sc_solve = false;
  reduce_sc->add_flag("--solve", reduce_sc_solve,
                      "also solve and print the extracted cover");
  add_solve_flags(reduce_sc, reduce_sc_flags,
                  {"qpf", "ls-dumb", "ls-greedy", "ls-mixed", "ga", "exact"});
  reduce_sc->get_option("--method")->required(false)->default_str("exact");

  auto *reduce_ks = reduce->add_subcommand(
      "knapsack", "0-1 knapsack to a depth-limited questionnaire");
  std::string reduce_ks_path;
  SolveFlags reduce_ks_flags;
  reduce_ks_flags.char_fn = "compactness";
  reduce_ks_flags.method = "exact";
  reduce_ks->add_option("file", reduce_ks_path)->required();
  bool reduce_ks_solve = false;
  reduce_ks->add_flag("--solve", reduce_ks_solve,
                      "also solve and print the identified items");
  reduce_ks->add_option("--method", reduce_ks_flags.method)
      ->check(CLI::IsMember({"qpf", "exact"}));
  reduce_ks->add_option("--char-fn", reduce_ks_flags.char_fn)
      ->check(CLI::IsMember({"entropy", "compactness", "cost-entropy"}));

  // bench
  auto *bench = app.add_subcommand(
      "bench", "run every solver over instances and emit a comparison CSV");
  std::vector<std::string> bench_paths;
  BenchOptions bench_options;
  bool skip_exact = false;
  bench->add_option("files", bench_paths, "OWBQ instance files")->required();
  bench->add_option("--seed", bench_options.ga_seed, "base GA seed")
      ->required();
  bench->add_flag("--skip-exact", skip_exact);
  bench->add_option("--exact-cap", bench_options.exact_cap);
  bench->add_option("--threads", bench_options.threads);
  bench->add_option("--max-iterations", bench_options.ls_max_iterations);
  bench->add_option("--population-size", bench_options.ga.population_size);
  bench->add_option("--mating-rate", bench_options.ga.mating_rate);
  bench->add_option("--mutation-rate", bench_options.ga.mutation_rate);
  bench->add_option("--max-generations", bench_options.ga.max_generations);
  bench->add_option("--generations-without-improvement",
                    bench_options.ga.generations_without_improvement);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return run_gen(gen_n, gen_k, gen_seed, cost_min, cost_max, prob_mode,
                     gen_output);
    if (validate->parsed())
      return run_validate(validate_path);
    if (solve->parsed())
      return run_solve(solve_path, solve_flags);
    if (reduce_sc->parsed()) {
      if (reduce_sc_flags.method.empty())
        reduce_sc_flags.method = "exact";
      return run_reduce_set_cover(reduce_sc_path, reduce_sc_flags,
                                  reduce_sc_solve);
    }
    if (reduce_ks->parsed())
      return run_reduce_knapsack(reduce_ks_path, reduce_ks_flags,
                                 reduce_ks_solve);
    if (bench->parsed()) {
      bench_options.run_exact = !skip_exact;
      return run_bench_cmd(bench_paths, bench_options);
    }
  } catch (const std::exception &e) {
    std::cerr << "error,cli," << e.what() << "\n";
    return 1;
  }
  return 0;
}
