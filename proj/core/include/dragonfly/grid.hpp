#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dragonfly/binary.hpp"
#include "dragonfly/continuous.hpp"
#include "dragonfly/pareto.hpp"
#include "dragonfly/pso.hpp"
#include "dragonfly/report.hpp"
#include "dragonfly/stats.hpp"

namespace dfa {

enum class Algo { da, da_brownian, bda, moda, pso, gwo, ga };

Algo parse_algo(const std::string& name);
const char* to_string(Algo algo);
std::vector<Algo> all_algos();

struct RunConfig {
  std::vector<Algo> algos{Algo::da};
  /// Used when `functions` is empty: "classical", "cec2019", "binary" or "multi".
  std::string suite = "classical";
  /// Benchmark ids (TF*, CEC*), "onemax", "schaffer" or "zdt1".
  std::vector<std::string> functions;
  /// Dimension for TF1..TF13, onemax and zdt1.
  int dim = 30;
  int pop = 100;
  int iters = 1000;
  int runs = 30;
  std::uint64_t base_seed = 0;
  std::filesystem::path out_dir = "results";
  std::vector<ReportFormat> formats{ReportFormat::csv, ReportFormat::json, ReportFormat::markdown};
  /// Random walk of the da algorithm; da_brownian always uses brownian.
  StepMode step_mode = StepMode::levy;
  TransferKind tf_kind = TransferKind::static_v;
  InertiaMode inertia = InertiaMode::constriction;
  std::size_t capacity = 100;
  std::size_t n_segments = 10;
  /// Directory holding optional CECnn.csv shift/rotation files.
  std::optional<std::filesystem::path> cec_data;
  /// When false, wall times are reported as 0 so every output file is reproducible.
  bool timing = true;
  int jobs = 1;

  void validate() const;
};

/// Seed of run k: base_seed + k.
std::uint64_t run_seed(const RunConfig& cfg, int run);

struct RunResult {
  Algo algo = Algo::da;
  std::string function;
  int run = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  RunRecord record;
  /// Final archive of a moda run.
  std::optional<ParetoArchive> archive;
};

struct GridResult {
  /// Ordered by (algo, function, run) as listed in the config.
  std::vector<RunResult> runs;
  /// One row per (function, algo) cell with at least one successful run.
  std::vector<StatRow> stats;

  bool all_ok() const;
};

/// (algo, function) pairs the config expands to; pairs whose problem kind does
/// not fit the algorithm (e.g. bda on TF1) are dropped. Throws if none remain.
std::vector<std::pair<Algo, std::string>> expand_cells(const RunConfig& cfg);

/// Run every cell `runs` times, up to cfg.jobs at once. A run whose objective
/// throws is marked failed and left out of the stats.
GridResult run_grid(const RunConfig& cfg);

/// config.json (the settings used), results.csv, stats.<ext> per format,
/// curves.csv and, for moda runs, archive_<fn>_run<k>.csv under cfg.out_dir.
void write_grid_outputs(const RunConfig& cfg, const GridResult& result);

}  // namespace dfa
