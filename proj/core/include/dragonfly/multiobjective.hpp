#pragma once

#include <functional>
#include <span>

#include "dragonfly/continuous.hpp"
#include "dragonfly/pareto.hpp"

namespace dfa {

/// Vector objective to be minimized componentwise.
using MultiObjective = std::function<ObjectiveVector(std::span<const double>)>;

struct ModaConfig {
  DaConfig da;
  std::size_t capacity = 100;
  std::size_t n_segments = 10;
};

struct ModaResult {
  ParetoArchive archive;
  /// best_value and curve track the smallest equal-weight objective sum seen;
  /// best_position is the matching point.
  RunRecord record;
};

/// Multi-objective Dragonfly Algorithm.
///
/// Each iteration every agent is offered to the archive, then one food and one
/// enemy are drawn from it and the swarm moves as in the single-objective
/// loop. If the archive is empty (capacity 0) the swarm's best and worst by
/// objective sum stand in.
ModaResult optimize_multi(const MultiObjective& objectives, const SearchSpace& space,
                          const ModaConfig& cfg);

}  // namespace dfa
