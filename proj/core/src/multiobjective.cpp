#include "dragonfly/multiobjective.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dfa {

namespace {

ObjectiveVector evaluate_vector(const MultiObjective& objectives, std::span<const double> x) {
  ObjectiveVector f = objectives(x);
  if (f.size() < 2) throw std::invalid_argument("optimize_multi: at least two objectives required");
  for (double v : f)
    if (!std::isfinite(v))
      throw NonFiniteObjective("objective returned a non-finite value", Vec(x.begin(), x.end()));
  return f;
}

}  // namespace

ModaResult optimize_multi(const MultiObjective& objectives, const SearchSpace& space,
                          const ModaConfig& cfg) {
  if (space.mode() != SpaceMode::continuous)
    throw std::invalid_argument("optimize_multi: continuous search space required");
  cfg.da.validate();

  const auto start = std::chrono::steady_clock::now();
  const DaConfig& da = cfg.da;
  InitialSwarm initial = seeded_swarm(space, da.pop, da.seed);
  RngStream weight_rng(derive_seed(da.seed, 0, 2));
  RngStream archive_rng(derive_seed(da.seed, 0, 3));
  std::vector<RngStream> walk_rng;
  for (auto id : initial.ids) walk_rng.emplace_back(derive_seed(da.seed, id, 1));

  ModaResult result{ParetoArchive(cfg.capacity, cfg.n_segments), RunRecord{}};
  RunRecord& record = result.record;
  record.seed = da.seed;
  record.best_value = std::numeric_limits<double>::infinity();

  SwarmState state;
  state.T = da.iters;
  state.agents = std::move(initial.agents);

  // Evaluate the swarm, feed the archive and pick this iteration's food and enemy.
  auto absorb = [&] {
    std::size_t best = 0;
    std::size_t worst = 0;
    Vec sums(state.agents.size());
    for (std::size_t i = 0; i < state.agents.size(); ++i) {
      ObjectiveVector f = evaluate_vector(objectives, state.agents[i].position);
      sums[i] = std::accumulate(f.begin(), f.end(), 0.0);
      if (sums[i] < sums[best]) best = i;
      if (sums[i] > sums[worst]) worst = i;
      result.archive.insert({state.agents[i].position, std::move(f)}, archive_rng);
    }
    if (sums[best] < record.best_value) {
      record.best_value = sums[best];
      record.best_position = state.agents[best].position;
    }
    if (result.archive.empty()) {
      state.food = state.agents[best].position;
      state.enemy = state.agents[worst].position;
    } else {
      state.food = result.archive.select_food(archive_rng);
      state.enemy = result.archive.select_enemy(archive_rng);
    }
  };

  absorb();
  record.curve.reserve(static_cast<std::size_t>(da.iters));
  std::vector<Dragonfly> next(state.agents.size());
  for (int t = 1; t <= da.iters; ++t) {
    state.t = t;
    const double radius = euclidean_radius(space, t, da.iters, da.radius);
    const SwarmWeights shared = weights_at(da.weights, t, da.iters, weight_rng);
    for (std::size_t i = 0; i < state.agents.size(); ++i) {
      const SwarmWeights w =
          da.weights_per_agent ? weights_at(da.weights, t, da.iters, walk_rng[i]) : shared;
      const NeighborSet nbrs(state.agents, neighborhood(state.agents, i, radius).indices());
      next[i] = advance_agent(state, i, nbrs, w, radius, space, da, walk_rng[i]);
    }
    state.agents.swap(next);
    absorb();
    record.curve.push_back(record.best_value);
  }

  record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace dfa
