#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "dragonfly/stats.hpp"
#include "dragonfly/types.hpp"

namespace dfa {

enum class ReportFormat { csv, json, markdown };

ReportFormat parse_report_format(const std::string& name);
/// File extension without the dot: csv, json, md.
const char* report_extension(ReportFormat format);

/// Reals are written as "{:.16e}" so they round-trip exactly.
std::string format_real(double v);

/// CSV header: function,algo,mean,std,time_sec,runs.
std::string render_csv(std::span<const StatRow> stats);
/// Array of objects with the StatRow field names.
std::string render_json(std::span<const StatRow> stats);
/// One block of Mean / Std. / Time (Sec.) rows per function, functions in
/// first-appearance order and one column per algorithm.
std::string render_markdown(std::span<const StatRow> stats);

/// Render and write; throws std::runtime_error if the file cannot be written
/// and std::invalid_argument for empty stats.
void emit_report(std::span<const StatRow> stats, ReportFormat format,
                 const std::filesystem::path& path);

/// Columns: iteration, then one best-so-far column per record. Column names
/// default to run0, run1, ... All curves must have the same length.
void convergence_dump(std::span<const RunRecord> records, const std::filesystem::path& path,
                      std::span<const std::string> labels = {});

/// Write text to a file, throwing std::runtime_error on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace dfa
