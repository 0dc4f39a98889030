#include "dragonfly/continuous.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace dfa {

void DaConfig::validate() const {
  if (pop < 2) throw std::invalid_argument("DaConfig: pop must be >= 2");
  if (iters < 1) throw std::invalid_argument("DaConfig: iters must be >= 1");
  if (!(brownian_sigma > 0.0)) throw std::invalid_argument("DaConfig: brownian_sigma must be > 0");
  weights.validate();
  levy.validate();
}

namespace {
void require_neighbors(const NeighborSet& nbrs, const char* what) {
  if (nbrs.empty())
    throw std::invalid_argument(std::string(what) + ": empty neighbor set (take the random-walk branch)");
}
}  // namespace

Vec separation(const Dragonfly& agent, const NeighborSet& nbrs) {
  require_neighbors(nbrs, "separation");
  Vec s(agent.position.size(), 0.0);
  for (std::size_t k = 0; k < nbrs.count(); ++k) {
    const auto xj = nbrs.position(k);
    for (std::size_t d = 0; d < s.size(); ++d) s[d] -= agent.position[d] - xj[d];
  }
  return s;
}

Vec alignment(const NeighborSet& nbrs) {
  require_neighbors(nbrs, "alignment");
  Vec a(nbrs.step(0).size(), 0.0);
  for (std::size_t k = 0; k < nbrs.count(); ++k) {
    const auto vj = nbrs.step(k);
    for (std::size_t d = 0; d < a.size(); ++d) a[d] += vj[d];
  }
  const auto n = static_cast<double>(nbrs.count());
  for (auto& v : a) v /= n;
  return a;
}

Vec cohesion(const Dragonfly& agent, const NeighborSet& nbrs) {
  require_neighbors(nbrs, "cohesion");
  Vec c(agent.position.size(), 0.0);
  for (std::size_t k = 0; k < nbrs.count(); ++k) {
    const auto xj = nbrs.position(k);
    for (std::size_t d = 0; d < c.size(); ++d) c[d] += xj[d];
  }
  const auto n = static_cast<double>(nbrs.count());
  for (std::size_t d = 0; d < c.size(); ++d) c[d] = c[d] / n - agent.position[d];
  return c;
}

Vec food_attraction(const Dragonfly& agent, std::span<const double> food) {
  if (food.size() != agent.position.size())
    throw std::invalid_argument("food_attraction: dimension mismatch");
  Vec f(food.size());
  for (std::size_t d = 0; d < f.size(); ++d) f[d] = food[d] - agent.position[d];
  return f;
}

Vec enemy_distraction(const Dragonfly& agent, std::span<const double> enemy, EnemyForm form) {
  if (enemy.size() != agent.position.size())
    throw std::invalid_argument("enemy_distraction: dimension mismatch");
  Vec e(enemy.size());
  for (std::size_t d = 0; d < e.size(); ++d)
    e[d] = form == EnemyForm::additive ? enemy[d] + agent.position[d]
                                       : agent.position[d] - enemy[d];
  return e;
}

Vec step_update(const ForceSet& forces, const SwarmWeights& w, std::span<const double> prev_step,
                const SearchSpace* space) {
  const std::size_t dim = prev_step.size();
  auto term = [&](const Vec& v, std::size_t d) { return v.empty() ? 0.0 : v[d]; };
  Vec out(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    out[d] = (w.s * term(forces.separation, d) + w.a * term(forces.alignment, d) +
              w.c * term(forces.cohesion, d) + w.f * term(forces.food_attr, d) +
              w.e * term(forces.enemy_distr, d)) +
             w.w * prev_step[d];
  }
  if (space != nullptr) space->clamp_step(out);
  return out;
}

Dragonfly position_update(const Dragonfly& agent, std::span<const double> new_step,
                          const SearchSpace& space) {
  Dragonfly out{agent.position, Vec(new_step.begin(), new_step.end())};
  for (std::size_t d = 0; d < out.position.size(); ++d) out.position[d] += new_step[d];
  space.clamp(out.position);
  return out;
}

namespace {
Dragonfly multiplicative_walk(const Dragonfly& agent, const SearchSpace& space, const Vec& walk) {
  Dragonfly out{agent.position, Vec(agent.position.size(), 0.0)};
  for (std::size_t d = 0; d < out.position.size(); ++d)
    out.position[d] += walk[d] * agent.position[d];
  space.clamp(out.position);
  return out;
}
}  // namespace

Dragonfly levy_position_update(const Dragonfly& agent, const SearchSpace& space,
                               const LevyParams& params, RngStream& rng) {
  return multiplicative_walk(agent, space, levy_step(agent.position.size(), params, rng));
}

Dragonfly brownian_position_update(const Dragonfly& agent, const SearchSpace& space, double sigma,
                                   RngStream& rng) {
  return multiplicative_walk(agent, space, brownian_step(agent.position.size(), sigma, rng));
}

std::vector<Dragonfly> initialize_swarm(const SearchSpace& space, int pop, RngStream& rng) {
  std::vector<Dragonfly> agents(static_cast<std::size_t>(pop));
  const std::size_t dim = space.dim();
  for (auto& a : agents) {
    a.position.resize(dim);
    a.step.resize(dim);
    for (std::size_t d = 0; d < dim; ++d) a.position[d] = rng.uniform(space.lower(d), space.upper(d));
    for (std::size_t d = 0; d < dim; ++d) {
      const double limit = space.width(d) / 10.0;
      a.step[d] = rng.uniform(-limit, limit);
    }
  }
  return agents;
}

Dragonfly advance_agent(const SwarmState& state, std::size_t i, const NeighborSet& nbrs,
                        const SwarmWeights& weights, double radius, const SearchSpace& space,
                        const DaConfig& cfg, RngStream& rng) {
  const Dragonfly& agent = state.agents[i];
  if (nbrs.empty()) {
    Dragonfly moved = cfg.step_mode == StepMode::levy
                          ? levy_position_update(agent, space, cfg.levy, rng)
                          : brownian_position_update(agent, space, cfg.brownian_sigma, rng);
    if (!cfg.reset_step_after_walk) moved.step = agent.step;
    return moved;
  }

  ForceSet forces;
  forces.separation = separation(agent, nbrs);
  forces.alignment = alignment(nbrs);
  forces.cohesion = cohesion(agent, nbrs);
  SwarmWeights w = weights;
  if (!cfg.food_within_radius_only || euclidean_distance(agent.position, state.food) <= radius) {
    forces.food_attr = food_attraction(agent, state.food);
    if (cfg.food_draw == FoodDraw::per_dimension) {
      for (auto& v : forces.food_attr) v *= cfg.weights.multiplier_span * rng.uniform();
      w.f = cfg.weights.f_base;
    }
  }
  forces.enemy_distr = enemy_distraction(agent, state.enemy, cfg.enemy_form);

  const Vec step = step_update(forces, w, agent.step, &space);
  Dragonfly moved = position_update(agent, step, space);
  if (cfg.wall_policy == WallPolicy::reflect_step) {
    for (std::size_t d = 0; d < step.size(); ++d) {
      const double unclamped = agent.position[d] + step[d];
      if (unclamped > space.upper(d) || unclamped < space.lower(d)) moved.step[d] = -step[d];
    }
  }
  return moved;
}

namespace {

// Refresh food (elitist best so far) and enemy (worst of the current population).
// Ties go to the lowest agent id.
void refresh_food_enemy(SwarmState& state, const Vec& fitness, const std::vector<std::uint64_t>& ids) {
  std::size_t best = 0;
  std::size_t worst = 0;
  for (std::size_t i = 1; i < fitness.size(); ++i) {
    if (fitness[i] < fitness[best] || (fitness[i] == fitness[best] && ids[i] < ids[best])) best = i;
    if (fitness[i] > fitness[worst] || (fitness[i] == fitness[worst] && ids[i] < ids[worst])) worst = i;
  }
  if (fitness[best] < state.food_value) {
    state.food_value = fitness[best];
    state.food = state.agents[best].position;
  }
  state.enemy_value = fitness[worst];
  state.enemy = state.agents[worst].position;
}

Vec evaluate_all(const Objective& objective, const SwarmState& state) {
  Vec fitness(state.agents.size());
  for (std::size_t i = 0; i < fitness.size(); ++i)
    fitness[i] = evaluate_checked(objective, state.agents[i].position);
  return fitness;
}

}  // namespace

InitialSwarm seeded_swarm(const SearchSpace& space, int pop, std::uint64_t seed) {
  if (pop < 1) throw std::invalid_argument("seeded_swarm: pop must be positive");
  InitialSwarm swarm;
  for (int k = 0; k < pop; ++k) {
    const auto id = static_cast<std::uint64_t>(k);
    RngStream rng(derive_seed(seed, id, 0));
    swarm.agents.push_back(std::move(initialize_swarm(space, 1, rng).front()));
    swarm.ids.push_back(id);
  }
  return swarm;
}

RunRecord optimize(const Objective& objective, const SearchSpace& space, const DaConfig& cfg) {
  return optimize(objective, space, cfg, seeded_swarm(space, cfg.pop, cfg.seed));
}

RunRecord optimize(const Objective& objective, const SearchSpace& space, const DaConfig& cfg,
                   InitialSwarm initial) {
  if (space.mode() != SpaceMode::continuous)
    throw std::invalid_argument("optimize: continuous search space required");
  DaConfig checked = cfg;
  checked.pop = static_cast<int>(initial.agents.size());
  checked.validate();
  if (initial.ids.size() != initial.agents.size())
    throw std::invalid_argument("optimize: one id per initial agent required");
  for (const auto& a : initial.agents)
    if (a.position.size() != space.dim() || a.step.size() != space.dim())
      throw std::invalid_argument("optimize: initial agent dimension mismatch");

  const auto start = std::chrono::steady_clock::now();
  RngStream weight_rng(derive_seed(cfg.seed, 0, 2));
  std::vector<RngStream> walk_rng;
  for (auto id : initial.ids) walk_rng.emplace_back(derive_seed(cfg.seed, id, 1));
  const std::vector<std::uint64_t> ids = std::move(initial.ids);

  SwarmState state;
  state.T = cfg.iters;
  state.agents = std::move(initial.agents);
  refresh_food_enemy(state, evaluate_all(objective, state), ids);

  RunRecord record;
  record.seed = cfg.seed;
  record.curve.reserve(static_cast<std::size_t>(cfg.iters));

  std::vector<Dragonfly> next(state.agents.size());
  std::vector<SwarmWeights> agent_weights(state.agents.size());
  for (int t = 1; t <= cfg.iters; ++t) {
    state.t = t;
    const double radius = euclidean_radius(space, t, cfg.iters, cfg.radius);
    if (cfg.weights_per_agent) {
      for (std::size_t i = 0; i < agent_weights.size(); ++i)
        agent_weights[i] = weights_at(cfg.weights, t, cfg.iters, walk_rng[i]);
    } else {
      std::fill(agent_weights.begin(), agent_weights.end(),
                weights_at(cfg.weights, t, cfg.iters, weight_rng));
    }

    for (std::size_t i = 0; i < state.agents.size(); ++i) {
      std::vector<std::size_t> members = neighborhood(state.agents, i, radius).indices();
      std::sort(members.begin(), members.end(),
                [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });
      const NeighborSet nbrs(state.agents, std::move(members));
      next[i] = advance_agent(state, i, nbrs, agent_weights[i], radius, space, cfg, walk_rng[i]);
    }
    state.agents.swap(next);

    refresh_food_enemy(state, evaluate_all(objective, state), ids);
    record.curve.push_back(state.food_value);
  }

  record.best_value = state.food_value;
  record.best_position = state.food;
  record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

}  // namespace dfa
