#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dragonfly/continuous.hpp"
#include "dragonfly/rng.hpp"
#include "dragonfly/types.hpp"

namespace dfa {

using Bits = std::vector<std::uint8_t>;

/// Objective over a 0/1 vector (minimized).
using BinaryObjective = std::function<double(std::span<const std::uint8_t>)>;

struct BinaryDragonfly {
  Bits bits;
  Vec step;
};

enum class TransferKind { static_v, time_varying };

/// V-shaped transfer |dX / sqrt(dX^2 + tau^2)|. The static form fixes tau = 1;
/// the time-varying form ramps tau linearly from tau_start to tau_end over the run.
struct TransferConfig {
  TransferKind kind = TransferKind::static_v;
  double tau_start = 4.0;
  double tau_end = 1.0;

  void validate() const;
};

double transfer_tau(const TransferConfig& cfg, int t, int T);

/// Flip probability in [0, 1) for one step component.
double transfer(double step, const TransferConfig& cfg, int t, int T);

/// Complement bit j when a fresh r in [0,1) falls below probs[j].
BinaryDragonfly flip_update(const BinaryDragonfly& agent, std::span<const double> probs,
                            RngStream& rng);

/// Binary DA. Every agent treats the rest of the swarm as its neighborhood;
/// forces act on the bits cast to {0.0, 1.0} and the position update is
/// transfer + flip. best_position holds the best bit pattern as 0.0/1.0.
RunRecord optimize_binary(const BinaryObjective& objective, std::size_t dim, const DaConfig& cfg,
                          const TransferConfig& tf);

struct FeatureFitnessParams {
  double alpha = 0.99;
  int total_features = 1;

  double beta() const noexcept { return 1.0 - alpha; }
  void validate() const;
};

/// Wrapper feature-selection fitness: alpha * error_rate + (1 - alpha) * selected / total.
double feature_fitness(double error_rate, int selected, const FeatureFitnessParams& params);

}  // namespace dfa
