#include "dragonfly/grid.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "dragonfly/functions.hpp"
#include "dragonfly/ga.hpp"
#include "dragonfly/gwo.hpp"
#include "dragonfly/multiobjective.hpp"
#include "dragonfly/problems.hpp"

namespace dfa {

namespace {

constexpr std::pair<Algo, const char*> algo_names[] = {
    {Algo::da, "da"},   {Algo::da_brownian, "da_brownian"}, {Algo::bda, "bda"},
    {Algo::moda, "moda"}, {Algo::pso, "pso"}, {Algo::gwo, "gwo"}, {Algo::ga, "ga"}};

enum class ProblemKind { continuous, binary, multi };

ProblemKind problem_kind(const std::string& id) {
  const auto binary = binary_problem_ids();
  const auto multi = multi_problem_ids();
  if (std::find(binary.begin(), binary.end(), id) != binary.end()) return ProblemKind::binary;
  if (std::find(multi.begin(), multi.end(), id) != multi.end()) return ProblemKind::multi;
  return ProblemKind::continuous;
}

ProblemKind algo_kind(Algo algo) {
  if (algo == Algo::bda) return ProblemKind::binary;
  if (algo == Algo::moda) return ProblemKind::multi;
  return ProblemKind::continuous;
}

std::vector<std::string> function_ids(const RunConfig& cfg) {
  if (!cfg.functions.empty()) return cfg.functions;
  if (cfg.suite == "binary") return binary_problem_ids();
  if (cfg.suite == "multi") return multi_problem_ids();
  std::vector<std::string> ids;
  for (const auto& fn : suite(cfg.suite, static_cast<std::size_t>(cfg.dim))) ids.push_back(fn.id);
  return ids;
}

BenchmarkFn load_benchmark(const RunConfig& cfg, const std::string& id) {
  BenchmarkFn fn = find_function(id, static_cast<std::size_t>(cfg.dim));
  if (cfg.cec_data && fn.group == FnGroup::cec2019) {
    const auto path = *cfg.cec_data / (id + ".csv");
    if (std::filesystem::exists(path)) fn = with_transform(std::move(fn), read_cec_transform_file(path));
  }
  return fn;
}

DaConfig da_config(const RunConfig& cfg, std::uint64_t seed) {
  DaConfig da;
  da.pop = cfg.pop;
  da.iters = cfg.iters;
  da.step_mode = cfg.step_mode;
  da.seed = seed;
  return da;
}

RunResult execute(const RunConfig& cfg, Algo algo, const std::string& fn_id, int run) {
  RunResult result;
  result.algo = algo;
  result.function = fn_id;
  result.run = run;
  result.seed = run_seed(cfg, run);
  try {
    const std::uint64_t seed = result.seed;
    switch (algo) {
      case Algo::da:
      case Algo::da_brownian: {
        const BenchmarkFn fn = load_benchmark(cfg, fn_id);
        DaConfig da = da_config(cfg, seed);
        if (algo == Algo::da_brownian) da.step_mode = StepMode::brownian;
        result.record = optimize(fn.objective(), fn.space, da);
        break;
      }
      case Algo::bda: {
        TransferConfig tf;
        tf.kind = cfg.tf_kind;
        result.record = optimize_binary(onemax_zeros, static_cast<std::size_t>(cfg.dim),
                                        da_config(cfg, seed), tf);
        break;
      }
      case Algo::moda: {
        const MultiProblem problem = find_multi_problem(fn_id, static_cast<std::size_t>(cfg.dim));
        ModaConfig moda;
        moda.da = da_config(cfg, seed);
        moda.capacity = cfg.capacity;
        moda.n_segments = cfg.n_segments;
        ModaResult out = optimize_multi(problem.objectives, problem.space, moda);
        result.record = std::move(out.record);
        result.archive = std::move(out.archive);
        break;
      }
      case Algo::pso: {
        const BenchmarkFn fn = load_benchmark(cfg, fn_id);
        PsoConfig pso;
        pso.inertia_mode = cfg.inertia;
        pso.pop = cfg.pop;
        pso.iters = cfg.iters;
        pso.seed = seed;
        result.record = pso_optimize(fn.objective(), fn.space, pso);
        break;
      }
      case Algo::gwo: {
        const BenchmarkFn fn = load_benchmark(cfg, fn_id);
        result.record = gwo_optimize(fn.objective(), fn.space, cfg.pop, cfg.iters, seed);
        break;
      }
      case Algo::ga: {
        const BenchmarkFn fn = load_benchmark(cfg, fn_id);
        GaConfig ga;
        ga.pop = cfg.pop;
        ga.iters = cfg.iters;
        ga.seed = seed;
        result.record = ga_optimize(fn.objective(), fn.space, ga);
        break;
      }
    }
    if (!cfg.timing) result.record.wall_seconds = 0.0;
    result.ok = true;
  } catch (const std::exception& e) {
    result.ok = false;
    result.error = e.what();
  }
  return result;
}

}  // namespace

Algo parse_algo(const std::string& name) {
  for (const auto& [algo, n] : algo_names)
    if (name == n) return algo;
  throw std::invalid_argument("unknown algorithm: " + name);
}

const char* to_string(Algo algo) {
  for (const auto& [a, n] : algo_names)
    if (a == algo) return n;
  return "unknown";
}

std::vector<Algo> all_algos() {
  std::vector<Algo> out;
  for (const auto& [algo, n] : algo_names) out.push_back(algo);
  return out;
}

void RunConfig::validate() const {
  if (algos.empty()) throw std::invalid_argument("RunConfig: no algorithm selected");
  if (runs < 1) throw std::invalid_argument("RunConfig: runs must be at least 1");
  if (pop < 2) throw std::invalid_argument("RunConfig: pop must be at least 2");
  if (iters < 1) throw std::invalid_argument("RunConfig: iters must be at least 1");
  if (dim < 1) throw std::invalid_argument("RunConfig: dim must be at least 1");
  if (jobs < 1) throw std::invalid_argument("RunConfig: jobs must be at least 1");
  if (n_segments < 1) throw std::invalid_argument("RunConfig: segments must be at least 1");
}

std::uint64_t run_seed(const RunConfig& cfg, int run) {
  return cfg.base_seed + static_cast<std::uint64_t>(run);
}

bool GridResult::all_ok() const {
  return std::all_of(runs.begin(), runs.end(), [](const RunResult& r) { return r.ok; });
}

std::vector<std::pair<Algo, std::string>> expand_cells(const RunConfig& cfg) {
  const auto ids = function_ids(cfg);
  for (const auto& id : ids)
    if (problem_kind(id) == ProblemKind::continuous) (void)find_function(id, static_cast<std::size_t>(cfg.dim));
  std::vector<std::pair<Algo, std::string>> cells;
  for (Algo algo : cfg.algos)
    for (const auto& id : ids)
      if (problem_kind(id) == algo_kind(algo)) cells.emplace_back(algo, id);
  if (cells.empty()) throw std::invalid_argument("no (algorithm, function) pair fits the configuration");
  return cells;
}

GridResult run_grid(const RunConfig& cfg) {
  cfg.validate();
  const auto cells = expand_cells(cfg);
  const std::size_t per_cell = static_cast<std::size_t>(cfg.runs);
  const std::size_t total = cells.size() * per_cell;

  GridResult grid;
  grid.runs.resize(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      const auto& [algo, fn] = cells[k / per_cell];
      grid.runs[k] = execute(cfg, algo, fn, static_cast<int>(k % per_cell));
    }
  };
  const std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), total);
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }

  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::vector<RunRecord> ok;
    for (std::size_t r = 0; r < per_cell; ++r)
      if (const auto& run = grid.runs[c * per_cell + r]; run.ok) ok.push_back(run.record);
    if (!ok.empty()) grid.stats.push_back(aggregate(to_string(cells[c].first), cells[c].second, ok));
  }
  // Group rows by function in the order functions were listed.
  std::vector<std::string> fn_order;
  for (const auto& [algo, fn] : cells)
    if (std::find(fn_order.begin(), fn_order.end(), fn) == fn_order.end()) fn_order.push_back(fn);
  std::stable_sort(grid.stats.begin(), grid.stats.end(), [&](const StatRow& a, const StatRow& b) {
    return std::find(fn_order.begin(), fn_order.end(), a.function) <
           std::find(fn_order.begin(), fn_order.end(), b.function);
  });
  return grid;
}

std::string config_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["algos"] = nlohmann::ordered_json::array();
  for (Algo a : cfg.algos) j["algos"].push_back(to_string(a));
  j["functions"] = nlohmann::ordered_json::array();
  for (const auto& [algo, fn] : expand_cells(cfg))
    if (std::find(j["functions"].begin(), j["functions"].end(), fn) == j["functions"].end())
      j["functions"].push_back(fn);
  j["dim"] = cfg.dim;
  j["pop"] = cfg.pop;
  j["iters"] = cfg.iters;
  j["runs"] = cfg.runs;
  j["base_seed"] = cfg.base_seed;
  j["step_mode"] = cfg.step_mode == StepMode::levy ? "levy" : "brownian";
  j["tf_kind"] = cfg.tf_kind == TransferKind::static_v ? "static" : "time-varying";
  j["inertia"] = cfg.inertia == InertiaMode::constriction ? "constriction" : "linear";
  j["capacity"] = cfg.capacity;
  j["n_segments"] = cfg.n_segments;
  j["cec_data"] = cfg.cec_data ? cfg.cec_data->string() : "";
  j["timing"] = cfg.timing;
  j["std"] = "sample (n - 1)";
  j["time_sec"] = "total over runs";
  return j.dump(2) + "\n";
}

void write_grid_outputs(const RunConfig& cfg, const GridResult& result) {
  std::filesystem::create_directories(cfg.out_dir);
  write_text_file(cfg.out_dir / "config.json", config_json(cfg));

  std::string results = "function,algo,run,seed,status,best_value\n";
  for (const auto& r : result.runs)
    results += fmt::format("{},{},{},{},{},{}\n", r.function, to_string(r.algo), r.run, r.seed,
                           r.ok ? "ok" : "failed", r.ok ? format_real(r.record.best_value) : "");
  write_text_file(cfg.out_dir / "results.csv", results);

  if (!result.stats.empty())
    for (ReportFormat f : cfg.formats)
      emit_report(result.stats, f, cfg.out_dir / fmt::format("stats.{}", report_extension(f)));

  std::vector<RunRecord> curves;
  std::vector<std::string> labels;
  for (const auto& r : result.runs) {
    if (!r.ok) continue;
    curves.push_back(r.record);
    labels.push_back(fmt::format("{}:{}:run{}", to_string(r.algo), r.function, r.run));
    if (r.archive) {
      std::ostringstream out;
      r.archive->write_csv(out);
      write_text_file(cfg.out_dir / fmt::format("archive_{}_run{}.csv", r.function, r.run), out.str());
    }
  }
  if (!curves.empty()) convergence_dump(curves, cfg.out_dir / "curves.csv", labels);
}

}  // namespace dfa
