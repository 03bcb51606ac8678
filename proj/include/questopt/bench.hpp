#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "questopt/genetic.hpp"
#include "questopt/local_search.hpp"
#include "questopt/table.hpp"

namespace questopt {

/// One benchmark result line: the five heuristic costs, the exact optimum
/// when within the cap, and per-column wall times.
struct BenchRow {
  std::string test;
  std::optional<double> opt, qpf, dumb, greedy, mixed, ga;
  double t_opt_ms = 0, t_qpf_ms = 0, t_dumb_ms = 0, t_greedy_ms = 0,
         t_mixed_ms = 0, t_ga_ms = 0;
  std::string error; ///< empty when the row completed
};

struct BenchOptions {
  std::uint64_t ga_seed = 1; ///< per-instance seed = ga_seed + row index
  bool run_exact = true;
  int exact_cap = 14;
  int threads = 0; ///< 0: hardware concurrency; QUESTOPT_THREADS caps it
  CharFn char_fn = CharFn::Entropy;
  int ls_max_iterations = 1000;
  GaParams ga; ///< rqsf_set/char_fn/seed filled per instance
};

/// Runs QPF, Dumb-LS, Greedy-LS, Mixed-LS, GA and (within the cap) the
/// exact solver on every instance. Rows may be computed in parallel
/// across instances; the output order is the input order and per-instance
/// failures are recorded in the row without stopping the run.
std::vector<BenchRow>
run_bench(const std::vector<std::pair<std::string, ProblemTable>> &instances,
          const BenchOptions &options);

/// CSV with the fixed column schema, one row per instance and a final
/// `sum` row of column sums.
std::string bench_csv(const std::vector<BenchRow> &rows);

/// Worker count after applying the QUESTOPT_THREADS cap.
int bench_worker_count(int requested);

} // namespace questopt
