#include "dragonfly/report.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace dfa {

ReportFormat parse_report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  if (name == "markdown" || name == "md") return ReportFormat::markdown;
  throw std::invalid_argument("unknown report format: " + name);
}

const char* report_extension(ReportFormat format) {
  switch (format) {
    case ReportFormat::csv: return "csv";
    case ReportFormat::json: return "json";
    case ReportFormat::markdown: return "md";
  }
  return "txt";
}

std::string format_real(double v) { return fmt::format("{:.16e}", v); }

std::string render_csv(std::span<const StatRow> stats) {
  std::string out = "function,algo,mean,std,time_sec,runs\n";
  for (const auto& s : stats)
    out += fmt::format("{},{},{},{},{},{}\n", s.function, s.algo, format_real(s.mean),
                       format_real(s.std), format_real(s.total_time), s.runs);
  return out;
}

std::string render_json(std::span<const StatRow> stats) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& s : stats)
    rows.push_back({{"algo", s.algo},
                    {"function", s.function},
                    {"mean", s.mean},
                    {"std", s.std},
                    {"total_time", s.total_time},
                    {"runs", s.runs}});
  return rows.dump(2) + "\n";
}

std::string render_markdown(std::span<const StatRow> stats) {
  std::vector<std::string> functions, algos;
  auto remember = [](std::vector<std::string>& seen, const std::string& key) {
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) seen.push_back(key);
  };
  double total = 0.0;
  for (const auto& s : stats) {
    remember(functions, s.function);
    remember(algos, s.algo);
    total += s.total_time;
  }
  auto cell = [&](const std::string& fn, const std::string& algo, auto field) -> std::string {
    for (const auto& s : stats)
      if (s.function == fn && s.algo == algo) return field(s);
    return "-";
  };

  std::string out = "| Test Function | Measurement |";
  std::string rule = "|---|---|";
  for (const auto& a : algos) {
    out += " " + a + " |";
    rule += "---|";
  }
  out += "\n" + rule + "\n";
  for (const auto& fn : functions) {
    out += "| " + fn + " | Mean |";
    for (const auto& a : algos)
      out += " " + cell(fn, a, [](const StatRow& s) { return fmt::format("{:.15g}", s.mean); }) + " |";
    out += "\n|  | Std. |";
    for (const auto& a : algos)
      out += " " + cell(fn, a, [](const StatRow& s) { return fmt::format("{:.15g}", s.std); }) + " |";
    out += "\n|  | Time (Sec.) |";
    for (const auto& a : algos)
      out += " " + cell(fn, a, [](const StatRow& s) { return fmt::format("{:.6g}", s.total_time); }) + " |";
    out += "\n";
  }
  out += fmt::format(
      "\nStd. is the sample standard deviation (n - 1). Time (Sec.) is the total wall time of "
      "all runs in the cell; {:.6g} s overall.\n",
      total);
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << text;
  out.close();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void emit_report(std::span<const StatRow> stats, ReportFormat format,
                 const std::filesystem::path& path) {
  if (stats.empty()) throw std::invalid_argument("emit_report: no stats");
  switch (format) {
    case ReportFormat::csv: write_text_file(path, render_csv(stats)); break;
    case ReportFormat::json: write_text_file(path, render_json(stats)); break;
    case ReportFormat::markdown: write_text_file(path, render_markdown(stats)); break;
  }
}

void convergence_dump(std::span<const RunRecord> records, const std::filesystem::path& path,
                      std::span<const std::string> labels) {
  if (records.empty()) throw std::invalid_argument("convergence_dump: no records");
  if (!labels.empty() && labels.size() != records.size())
    throw std::invalid_argument("convergence_dump: one label per record required");
  const std::size_t rows = records.front().curve.size();
  for (const auto& r : records)
    if (r.curve.size() != rows) throw std::invalid_argument("convergence_dump: curve lengths differ");

  std::string out = "iteration";
  for (std::size_t k = 0; k < records.size(); ++k)
    out += labels.empty() ? fmt::format(",run{}", k) : "," + labels[k];
  out += '\n';
  for (std::size_t t = 0; t < rows; ++t) {
    out += std::to_string(t + 1);
    for (const auto& r : records) out += "," + format_real(r.curve[t]);
    out += '\n';
  }
  write_text_file(path, out);
}

}  // namespace dfa
