#include "dragonfly/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dfa {

namespace {

double sorted_sum(Vec values) {
  std::sort(values.begin(), values.end());
  return std::accumulate(values.begin(), values.end(), 0.0);
}

}  // namespace

double sample_std(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  const double mean = sorted_sum(Vec(values.begin(), values.end())) / static_cast<double>(n);
  Vec dev;
  dev.reserve(n);
  for (double v : values) dev.push_back((v - mean) * (v - mean));
  return std::sqrt(sorted_sum(std::move(dev)) / static_cast<double>(n - 1));
}

StatRow aggregate(const std::string& algo, const std::string& function,
                  std::span<const RunRecord> records) {
  if (records.empty()) throw std::invalid_argument("aggregate: no runs");
  Vec best, time;
  for (const auto& r : records) {
    best.push_back(r.best_value);
    time.push_back(r.wall_seconds);
  }
  StatRow row;
  row.algo = algo;
  row.function = function;
  row.runs = static_cast<int>(records.size());
  row.mean = sorted_sum(best) / static_cast<double>(best.size());
  // Keep the mean inside [min, max] despite rounding.
  const auto [lo, hi] = std::minmax_element(best.begin(), best.end());
  row.mean = std::clamp(row.mean, *lo, *hi);
  row.std = sample_std(best);
  row.total_time = sorted_sum(std::move(time));
  return row;
}

}  // namespace dfa
