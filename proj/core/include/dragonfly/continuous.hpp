#pragma once

#include <cstdint>
#include <span>

#include "dragonfly/neighborhood.hpp"
#include "dragonfly/random_walk.hpp"
#include "dragonfly/rng.hpp"
#include "dragonfly/schedule.hpp"
#include "dragonfly/types.hpp"

namespace dfa {

/// Random walk used when an agent has no neighbors.
enum class StepMode { levy, brownian };

/// E_i = X- + X as literally written, or the repulsive difference X - X-.
enum class EnemyForm { additive, repulsive };

/// How the food-attraction multiplier is drawn: one scalar per iteration
/// (the f of SwarmWeights) or an independent U[0, span) draw per agent and
/// dimension.
enum class FoodDraw { shared, per_dimension };

/// What happens to the step when a position is clamped at a bound.
enum class WallPolicy { keep_step, reflect_step };

struct DaConfig {
  int pop = 100;
  int iters = 1000;
  WeightSchedule weights;
  LevyParams levy;
  StepMode step_mode = StepMode::levy;
  double brownian_sigma = 0.01;
  RadiusSchedule radius;
  EnemyForm enemy_form = EnemyForm::additive;
  FoodDraw food_draw = FoodDraw::per_dimension;
  WallPolicy wall_policy = WallPolicy::reflect_step;
  /// Only attract towards food lying within the neighborhood radius.
  bool food_within_radius_only = false;
  /// Redraw the random weight multipliers for every agent instead of once per iteration.
  bool weights_per_agent = false;
  /// Zero the step vector after a random-walk move.
  bool reset_step_after_walk = true;
  std::uint64_t seed = 0;

  void validate() const;
};

struct ForceSet {
  Vec separation;
  Vec alignment;
  Vec cohesion;
  Vec food_attr;
  Vec enemy_distr;
};

// Swarming forces. The neighbor-based three reject an empty NeighborSet.
Vec separation(const Dragonfly& agent, const NeighborSet& nbrs);
Vec alignment(const NeighborSet& nbrs);
Vec cohesion(const Dragonfly& agent, const NeighborSet& nbrs);
Vec food_attraction(const Dragonfly& agent, std::span<const double> food);
Vec enemy_distraction(const Dragonfly& agent, std::span<const double> enemy,
                      EnemyForm form = EnemyForm::additive);

/// dX' = s S + a A + c C + f F + e E + w dX, clamped per dimension to the
/// range width when a space is given.
Vec step_update(const ForceSet& forces, const SwarmWeights& weights,
                std::span<const double> prev_step, const SearchSpace* space = nullptr);

/// X' = clamp(X + dX'); the returned agent carries new_step.
Dragonfly position_update(const Dragonfly& agent, std::span<const double> new_step,
                          const SearchSpace& space);

/// X' = clamp(X + Levy(d) * X) componentwise; step reset to zero.
Dragonfly levy_position_update(const Dragonfly& agent, const SearchSpace& space,
                               const LevyParams& params, RngStream& rng);

/// Same multiplicative form with a Brownian step of the given sigma.
Dragonfly brownian_position_update(const Dragonfly& agent, const SearchSpace& space,
                                   double sigma, RngStream& rng);

/// Uniform positions in the box and steps in +-width/10.
std::vector<Dragonfly> initialize_swarm(const SearchSpace& space, int pop, RngStream& rng);

/// Initial agents plus a stable identity per agent. The identity seeds the
/// agent's private random-walk stream and orders neighbor sums, so a run does
/// not depend on where an agent sits in the array.
struct InitialSwarm {
  std::vector<Dragonfly> agents;
  std::vector<std::uint64_t> ids;
};

/// Agent k is drawn from its own stream derived from (seed, k); ids are 0..pop-1.
InitialSwarm seeded_swarm(const SearchSpace& space, int pop, std::uint64_t seed);

/// Move one agent of `state` given its neighbors, the food/enemy in `state` and
/// this iteration's weights. Used by the single- and multi-objective loops.
Dragonfly advance_agent(const SwarmState& state, std::size_t i, const NeighborSet& nbrs,
                        const SwarmWeights& weights, double radius, const SearchSpace& space,
                        const DaConfig& cfg, RngStream& rng);

/// Single-objective continuous Dragonfly Algorithm (minimization).
///
/// Synchronous: every agent is evaluated, food (best so far) and enemy (worst of
/// the current population, ties to the lowest agent id) are refreshed, then all
/// agents move from the same snapshot. Agents without neighbors take a random
/// walk (Levy or Brownian). Throws NonFiniteObjective if the objective misbehaves.
RunRecord optimize(const Objective& objective, const SearchSpace& space, const DaConfig& cfg);

/// As above, starting from an explicit swarm (cfg.pop is ignored).
RunRecord optimize(const Objective& objective, const SearchSpace& space, const DaConfig& cfg,
                   InitialSwarm initial);

}  // namespace dfa
