#include "questopt/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "questopt/io.hpp"
#include "questopt/oracles.hpp"

namespace questopt {

namespace {

double run_timed_ms(double &slot, auto &&body) {
  const auto start = std::chrono::steady_clock::now();
  const double value = body();
  slot = std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
             .count();
  return value;
}

BenchRow run_instance(const std::string &name, const ProblemTable &t,
                      const BenchOptions &options, std::uint64_t ga_seed) {
  BenchRow row;
  row.test = name;
  try {
    const int k = t.question_count();
    row.qpf = run_timed_ms(row.t_qpf_ms, [&] {
      return questionnaire_cost(build_elementary(ElementaryRqsf::qpf(), t), t);
    });

    LsConfig ls;
    ls.char_fn = options.char_fn;
    ls.max_iterations = options.ls_max_iterations;

    ls.rqsf_set = dumb_rqsf_set(k);
    row.dumb =
        run_timed_ms(row.t_dumb_ms, [&] { return local_search(t, ls).cost; });
    ls.rqsf_set = greedy_rqsf_set();
    row.greedy = run_timed_ms(row.t_greedy_ms,
                              [&] { return local_search(t, ls).cost; });
    ls.rqsf_set = mixed_rqsf_set(k);
    row.mixed = run_timed_ms(row.t_mixed_ms,
                             [&] { return local_search(t, ls).cost; });

    GaParams ga = options.ga;
    ga.char_fn = options.char_fn;
    if (ga.rqsf_set.empty())
      ga.rqsf_set = mixed_rqsf_set(k);
    ga.seed = ga_seed;
    row.ga = run_timed_ms(row.t_ga_ms, [&] { return evolve(t, ga).cost; });

    if (options.run_exact && t.event_count() <= options.exact_cap)
      row.opt = run_timed_ms(
          row.t_opt_ms, [&] { return exact_owbq(t, options.exact_cap).cost; });
  } catch (const std::exception &e) {
    row.error = e.what();
  }
  return row;
}

} // namespace

int bench_worker_count(int requested) {
  int workers = requested > 0
                    ? requested
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1)
    workers = 1;
  if (const char *cap_text = std::getenv("QUESTOPT_THREADS")) {
    const int cap = std::atoi(cap_text);
    if (cap >= 1 && cap < workers)
      workers = cap;
  }
  return workers;
}

std::vector<BenchRow>
run_bench(const std::vector<std::pair<std::string, ProblemTable>> &instances,
          const BenchOptions &options) {
  std::vector<BenchRow> rows(instances.size());
  const int workers = std::min<int>(bench_worker_count(options.threads),
                                    std::max<std::size_t>(instances.size(), 1));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < instances.size();
         i = next.fetch_add(1))
      rows[i] = run_instance(instances[i].first, instances[i].second, options,
                             options.ga_seed + i);
  };
  if (workers <= 1 || instances.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(work);
    for (auto &thread : pool)
      thread.join();
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow> &rows) {
  std::string out = "test,opt,qpf,dumb,greedy,mixed,ga,"
                    "t_opt_ms,t_qpf_ms,t_dumb_ms,t_greedy_ms,t_mixed_ms,"
                    "t_ga_ms\n";
  auto cell = [](const std::optional<double> &v) {
    return v ? format_double(*v) : std::string();
  };

  double sums[12] = {};
  for (const BenchRow &row : rows) {
    const std::optional<double> costs[6] = {row.opt,    row.qpf,  row.dumb,
                                            row.greedy, row.mixed, row.ga};
    const double times[6] = {row.t_opt_ms,    row.t_qpf_ms,  row.t_dumb_ms,
                             row.t_greedy_ms, row.t_mixed_ms, row.t_ga_ms};
    out += row.test;
    for (int c = 0; c < 6; ++c) {
      out += ',';
      out += cell(costs[c]);
      if (costs[c])
        sums[c] += *costs[c];
    }
    for (int c = 0; c < 6; ++c) {
      out += ',';
      out += format_double(times[c]);
      sums[6 + c] += times[c];
    }
    out += '\n';
  }
  out += "sum";
  for (double sum : sums) {
    out += ',';
    out += format_double(sum);
  }
  out += '\n';
  return out;
}

} // namespace questopt
