#include "dragonfly/binary.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace dfa {

void TransferConfig::validate() const {
  if (!(tau_start >= tau_end && tau_end > 0.0))
    throw std::invalid_argument("TransferConfig: need tau_start >= tau_end > 0");
}

double transfer_tau(const TransferConfig& cfg, int t, int T) {
  if (T < 1) throw std::invalid_argument("transfer: T must be >= 1");
  if (cfg.kind == TransferKind::static_v) return 1.0;
  if (t >= T) return cfg.tau_end;
  return cfg.tau_start - (cfg.tau_start - cfg.tau_end) * static_cast<double>(t) / T;
}

double transfer(double step, const TransferConfig& cfg, int t, int T) {
  const double tau = transfer_tau(cfg, t, T);
  // hypot avoids overflow for huge steps; saturation must stay below 1.
  const double p = std::abs(step) / std::hypot(step, tau);
  return std::min(p, std::nextafter(1.0, 0.0));
}

BinaryDragonfly flip_update(const BinaryDragonfly& agent, std::span<const double> probs,
                            RngStream& rng) {
  if (probs.size() != agent.bits.size())
    throw std::invalid_argument("flip_update: probability/bit length mismatch");
  BinaryDragonfly out = agent;
  for (std::size_t j = 0; j < out.bits.size(); ++j)
    if (rng.uniform() < probs[j]) out.bits[j] = out.bits[j] ? 0 : 1;
  return out;
}

namespace {

struct BinarySwarm {
  std::vector<BinaryDragonfly> agents;
  Bits food;
  double food_value = std::numeric_limits<double>::infinity();
  Bits enemy;
};

void refresh(BinarySwarm& swarm, const Vec& fitness) {
  std::size_t best = 0;
  std::size_t worst = 0;
  for (std::size_t i = 1; i < fitness.size(); ++i) {
    if (fitness[i] < fitness[best]) best = i;
    if (fitness[i] > fitness[worst]) worst = i;
  }
  if (fitness[best] < swarm.food_value) {
    swarm.food_value = fitness[best];
    swarm.food = swarm.agents[best].bits;
  }
  swarm.enemy = swarm.agents[worst].bits;
}

Vec evaluate_all(const BinaryObjective& objective, const BinarySwarm& swarm) {
  Vec fitness(swarm.agents.size());
  for (std::size_t i = 0; i < fitness.size(); ++i) {
    fitness[i] = objective(swarm.agents[i].bits);
    if (!std::isfinite(fitness[i])) {
      Vec at(swarm.agents[i].bits.begin(), swarm.agents[i].bits.end());
      throw NonFiniteObjective("binary objective returned a non-finite value", std::move(at));
    }
  }
  return fitness;
}

}  // namespace

RunRecord optimize_binary(const BinaryObjective& objective, std::size_t dim, const DaConfig& cfg,
                          const TransferConfig& tf) {
  if (dim < 1) throw std::invalid_argument("optimize_binary: dim must be >= 1");
  cfg.validate();
  tf.validate();

  const auto start = std::chrono::steady_clock::now();
  const SearchSpace space = SearchSpace::binary(dim);
  RngStream rng(cfg.seed);

  BinarySwarm swarm;
  swarm.agents.resize(static_cast<std::size_t>(cfg.pop));
  for (auto& a : swarm.agents) {
    a.bits.resize(dim);
    a.step.resize(dim);
    for (auto& b : a.bits) b = rng.uniform() < 0.5 ? 1 : 0;
    for (auto& s : a.step) s = rng.uniform(-0.1, 0.1);
  }
  refresh(swarm, evaluate_all(objective, swarm));

  RunRecord record;
  record.seed = cfg.seed;
  record.curve.reserve(static_cast<std::size_t>(cfg.iters));

  const std::size_t n = swarm.agents.size();
  const auto others = static_cast<double>(n - 1);
  Vec sum_x(dim);
  Vec sum_step(dim);
  Vec probs(dim);
  std::vector<BinaryDragonfly> next(n);

  for (int t = 1; t <= cfg.iters; ++t) {
    // One swarm: every other agent is a neighbor, so the neighbor sums are
    // the swarm totals minus the focal agent. O(pop * dim) per iteration.
    std::fill(sum_x.begin(), sum_x.end(), 0.0);
    std::fill(sum_step.begin(), sum_step.end(), 0.0);
    for (const auto& a : swarm.agents) {
      for (std::size_t d = 0; d < dim; ++d) {
        sum_x[d] += a.bits[d];
        sum_step[d] += a.step[d];
      }
    }

    SwarmWeights w = weights_at(cfg.weights, t, cfg.iters, rng);
    for (std::size_t i = 0; i < n; ++i) {
      if (cfg.weights_per_agent && i > 0) w = weights_at(cfg.weights, t, cfg.iters, rng);
      const auto& agent = swarm.agents[i];
      Vec step(dim);
      for (std::size_t d = 0; d < dim; ++d) {
        const double x = agent.bits[d];
        const double nbr_x = sum_x[d] - x;
        const double sep = nbr_x - others * x;
        const double ali = (sum_step[d] - agent.step[d]) / others;
        const double coh = nbr_x / others - x;
        double food = static_cast<double>(swarm.food[d]) - x;
        double f = w.f;
        if (cfg.food_draw == FoodDraw::per_dimension) {
          food *= cfg.weights.multiplier_span * rng.uniform();
          f = cfg.weights.f_base;
        }
        const double enemy = cfg.enemy_form == EnemyForm::additive
                                 ? static_cast<double>(swarm.enemy[d]) + x
                                 : x - static_cast<double>(swarm.enemy[d]);
        step[d] = (w.s * sep + w.a * ali + w.c * coh + f * food + w.e * enemy) + w.w * agent.step[d];
      }
      space.clamp_step(step);
      for (std::size_t d = 0; d < dim; ++d) probs[d] = transfer(step[d], tf, t, cfg.iters);
      next[i] = flip_update(BinaryDragonfly{agent.bits, std::move(step)}, probs, rng);
    }
    swarm.agents.swap(next);

    refresh(swarm, evaluate_all(objective, swarm));
    record.curve.push_back(swarm.food_value);
  }

  record.best_value = swarm.food_value;
  record.best_position.assign(swarm.food.begin(), swarm.food.end());
  record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

void FeatureFitnessParams::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("feature_fitness: alpha must lie in [0, 1]");
  if (total_features < 1) throw std::invalid_argument("feature_fitness: total_features must be >= 1");
}

double feature_fitness(double error_rate, int selected, const FeatureFitnessParams& params) {
  params.validate();
  if (selected < 0 || selected > params.total_features)
    throw std::invalid_argument("feature_fitness: selected must lie in [0, total_features]");
  return params.alpha * error_rate +
         params.beta() * (static_cast<double>(selected) / params.total_features);
}

}  // namespace dfa
