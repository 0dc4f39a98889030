#include "dragonfly/pso.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "dragonfly/rng.hpp"

namespace dfa {

void PsoConfig::validate() const {
  if (pop < 2) throw std::invalid_argument("PsoConfig: pop must be at least 2");
  if (iters < 1) throw std::invalid_argument("PsoConfig: iters must be positive");
  if (c1 < 0.0 || c2 < 0.0) throw std::invalid_argument("PsoConfig: negative acceleration");
  if (inertia_mode == InertiaMode::constriction && !(c1 + c2 > 4.0))
    throw std::invalid_argument("PsoConfig: constriction needs c1 + c2 > 4");
}

double constriction_coefficient(double c) {
  if (!(c > 4.0)) throw std::invalid_argument("constriction_coefficient: c must exceed 4");
  return 2.0 / std::abs(2.0 - c - std::sqrt(c * c - 4.0 * c));
}

RunRecord pso_optimize(const Objective& objective, const SearchSpace& space, const PsoConfig& cfg) {
  if (space.mode() != SpaceMode::continuous)
    throw std::invalid_argument("pso_optimize: continuous search space required");
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  RngStream rng(cfg.seed);
  const std::size_t n = static_cast<std::size_t>(cfg.pop);
  const std::size_t d = space.dim();
  const double chi =
      cfg.inertia_mode == InertiaMode::constriction ? constriction_coefficient(cfg.c1 + cfg.c2) : 1.0;

  std::vector<Vec> x(n, Vec(d));
  std::vector<Vec> v(n, Vec(d, 0.0));
  for (auto& xi : x)
    for (std::size_t j = 0; j < d; ++j) xi[j] = rng.uniform(space.lower(j), space.upper(j));

  std::vector<Vec> pbest = x;
  Vec pbest_value(n);
  std::size_t g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    pbest_value[i] = evaluate_checked(objective, x[i]);
    if (pbest_value[i] < pbest_value[g]) g = i;
  }
  Vec gbest = pbest[g];
  double gbest_value = pbest_value[g];

  RunRecord record;
  record.seed = cfg.seed;
  record.curve.reserve(static_cast<std::size_t>(cfg.iters));
  for (int t = 1; t <= cfg.iters; ++t) {
    const double w = cfg.inertia_mode == InertiaMode::linear
                         ? cfg.w_start - (cfg.w_start - cfg.w_end) * t / cfg.iters
                         : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const double pull = cfg.c1 * rng.uniform() * (pbest[i][j] - x[i][j]) +
                            cfg.c2 * rng.uniform() * (gbest[j] - x[i][j]);
        v[i][j] = chi * (w * v[i][j] + pull);
      }
      space.clamp_step(v[i]);
      for (std::size_t j = 0; j < d; ++j) x[i][j] += v[i][j];
      space.clamp(x[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double f = evaluate_checked(objective, x[i]);
      if (f < pbest_value[i]) {
        pbest_value[i] = f;
        pbest[i] = x[i];
        if (f < gbest_value) {
          gbest_value = f;
          gbest = x[i];
        }
      }
    }
    record.curve.push_back(gbest_value);
  }

  record.best_value = gbest_value;
  record.best_position = std::move(gbest);
  record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

}  // namespace dfa
