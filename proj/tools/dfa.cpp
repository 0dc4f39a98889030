// dfa: run benchmark grids and list available functions.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dragonfly/functions.hpp"
#include "dragonfly/grid.hpp"
#include "dragonfly/problems.hpp"

namespace {

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const std::size_t comma = item.find(',', start);
      const std::string part = item.substr(start, comma - start);
      if (!part.empty()) out.push_back(part);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

void list_functions() {
  fmt::print("{:<7} {:<16} {:>4}  {:<28} {}\n", "id", "group", "dim", "range", "name");
  for (const char* name : {"classical", "cec2019"}) {
    for (const auto& fn : dfa::suite(name, 30)) {
      const auto range = fmt::format("[{:g}, {:g}]", fn.space.lower(0), fn.space.upper(0));
      fmt::print("{:<7} {:<16} {:>4}  {:<28} {}\n", fn.id, dfa::to_string(fn.group), fn.dim(),
                 range, fn.name);
    }
  }
  for (const auto& id : dfa::binary_problem_ids()) fmt::print("{:<7} binary (for bda)\n", id);
  for (const auto& id : dfa::multi_problem_ids()) fmt::print("{:<7} multi-objective (for moda)\n", id);
  fmt::print("\nalgorithms:");
  for (auto a : dfa::all_algos()) fmt::print(" {}", dfa::to_string(a));
  fmt::print("\n");
}

// Keys of a flat config file belong to the run subcommand.
struct RunConfigFile : CLI::ConfigINI {
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigINI::from_config(input);
    for (auto& item : items)
      if (item.parents.empty()) item.parents = {"run"};
    return items;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dragonfly Algorithm benchmark runner"};
  app.require_subcommand(1);

  // CLI11 only reads config files at the top level; run falls through to it.
  app.set_config("--config", "", "Flat key = value file for run; flags on the command line win");
  app.config_formatter(std::make_shared<RunConfigFile>());
  app.allow_config_extras(CLI::config_extras_mode::error);
  auto* run = app.add_subcommand("run", "Run an (algorithm x function x seed) grid");
  run->fallthrough();

  std::vector<std::string> algos{"da"};
  std::string suite_name = "classical";
  std::vector<std::string> fns;
  std::vector<std::string> formats{"csv", "json", "markdown"};
  std::string step_mode = "levy";
  std::string tf_kind = "static";
  std::string inertia = "constriction";
  std::string timing = "on";
  std::string cec_data;
  dfa::RunConfig cfg;
  std::string out_dir = cfg.out_dir.string();

  run->add_option("--algo", algos, "Algorithms (comma separated): da, da_brownian, bda, moda, pso, gwo, ga")
      ->delimiter(',')
      ->capture_default_str();
  run->add_option("--suite", suite_name, "classical, cec2019, binary or multi (used without --fn)")
      ->capture_default_str();
  run->add_option("--fn", fns, "Function ids (comma separated), e.g. TF1,TF10 or onemax")->delimiter(',');
  run->add_option("--dim", cfg.dim, "Dimension of TF1-TF13, onemax and zdt1")->capture_default_str();
  run->add_option("--pop", cfg.pop, "Search agents")->capture_default_str();
  run->add_option("--iters", cfg.iters, "Iterations")->capture_default_str();
  run->add_option("--runs", cfg.runs, "Independent runs per cell")->capture_default_str();
  run->add_option("--seed", cfg.base_seed, "Base seed; run k uses seed + k")->capture_default_str();
  run->add_option("--out", out_dir, "Output directory")->capture_default_str();
  run->add_option("--format", formats, "Stats formats: csv, json, markdown")
      ->delimiter(',')
      ->capture_default_str();
  run->add_option("--step-mode", step_mode, "Random walk of da: levy or brownian")
      ->check(CLI::IsMember({"levy", "brownian"}))
      ->capture_default_str();
  run->add_option("--tf-kind", tf_kind, "bda transfer function: static or time-varying")
      ->check(CLI::IsMember({"static", "time-varying"}))
      ->capture_default_str();
  run->add_option("--inertia", inertia, "pso inertia: constriction or linear")
      ->check(CLI::IsMember({"constriction", "linear"}))
      ->capture_default_str();
  run->add_option("--capacity", cfg.capacity, "moda archive capacity")->capture_default_str();
  run->add_option("--segments", cfg.n_segments, "moda grid segments per objective")->capture_default_str();
  run->add_option("--cec-data", cec_data, "Directory with CECnn.csv shift/rotation files");
  run->add_option("--timing", timing, "Record wall time (off writes 0 for reproducible files)")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  run->add_option("--jobs", cfg.jobs, "Runs executed in parallel")->capture_default_str();

  app.add_subcommand("list", "List functions, problems and algorithms");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list")) {
      list_functions();
      return 0;
    }

    cfg.algos.clear();
    for (const auto& a : split_list(algos)) cfg.algos.push_back(dfa::parse_algo(a));
    cfg.suite = suite_name;
    cfg.functions = split_list(fns);
    cfg.formats.clear();
    for (const auto& f : split_list(formats)) cfg.formats.push_back(dfa::parse_report_format(f));
    cfg.step_mode = step_mode == "brownian" ? dfa::StepMode::brownian : dfa::StepMode::levy;
    cfg.tf_kind = tf_kind == "time-varying" ? dfa::TransferKind::time_varying : dfa::TransferKind::static_v;
    cfg.inertia = inertia == "linear" ? dfa::InertiaMode::linear : dfa::InertiaMode::constriction;
    cfg.timing = timing == "on";
    cfg.out_dir = out_dir;
    if (!cec_data.empty()) cfg.cec_data = cec_data;

    const dfa::GridResult grid = dfa::run_grid(cfg);
    dfa::write_grid_outputs(cfg, grid);

    int failed = 0;
    for (const auto& r : grid.runs) {
      if (r.ok) continue;
      ++failed;
      fmt::print(stderr, "run failed: {} {} run {} (seed {}): {}\n", dfa::to_string(r.algo),
                 r.function, r.run, r.seed, r.error);
    }
    fmt::print("{} runs, {} failed; results in {}\n", grid.runs.size(), failed, cfg.out_dir.string());
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  }
}
