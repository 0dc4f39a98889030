#pragma once

#include <span>
#include <string>

#include "dragonfly/types.hpp"

namespace dfa {

/// Aggregate of one (algorithm, function) cell of a grid.
struct StatRow {
  std::string algo;
  std::string function;
  double mean = 0.0;
  /// Sample standard deviation (n - 1); 0 when runs == 1.
  double std = 0.0;
  /// Sum of the member runs' wall time.
  double total_time = 0.0;
  int runs = 0;
};

/// Sample standard deviation; 0 for fewer than two values.
double sample_std(std::span<const double> values);

/// Order-free aggregation: values are sorted before summation, so any
/// permutation of `records` yields bit-identical output. Throws on empty input.
StatRow aggregate(const std::string& algo, const std::string& function,
                  std::span<const RunRecord> records);

}  // namespace dfa
