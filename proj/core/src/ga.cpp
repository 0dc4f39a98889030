#include "dragonfly/ga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dragonfly/rng.hpp"

namespace dfa {

int GaConfig::n_crossover() const {
  return 2 * static_cast<int>(std::round(pop * pc / 2.0));
}

int GaConfig::n_mutation() const { return static_cast<int>(std::round(pop * pm)); }

void GaConfig::validate() const {
  if (pop < 2) throw std::invalid_argument("GaConfig: pop must be at least 2");
  if (iters < 1) throw std::invalid_argument("GaConfig: iters must be positive");
  if (!(pc >= 0.0 && pc <= 1.0)) throw std::invalid_argument("GaConfig: pc outside [0,1]");
  if (!(pm >= 0.0 && pm <= 1.0)) throw std::invalid_argument("GaConfig: pm outside [0,1]");
  if (!(sigma_fraction >= 0.0)) throw std::invalid_argument("GaConfig: negative sigma_fraction");
  if (!(blend_gamma >= 0.0)) throw std::invalid_argument("GaConfig: negative blend_gamma");
  if (elites < 0 || elites > pop) throw std::invalid_argument("GaConfig: elites outside [0,pop]");
}

namespace {

struct Individual {
  Vec x;
  double f;
};

}  // namespace

RunRecord ga_optimize(const Objective& objective, const SearchSpace& space, const GaConfig& cfg) {
  if (space.mode() != SpaceMode::continuous)
    throw std::invalid_argument("ga_optimize: continuous search space required");
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  RngStream rng(cfg.seed);
  const std::size_t n = static_cast<std::size_t>(cfg.pop);
  const std::size_t d = space.dim();

  std::vector<Individual> pop(n);
  for (auto& ind : pop) {
    ind.x.resize(d);
    for (std::size_t j = 0; j < d; ++j) ind.x[j] = rng.uniform(space.lower(j), space.upper(j));
    ind.f = evaluate_checked(objective, ind.x);
  }
  auto by_fitness = [](const Individual& a, const Individual& b) { return a.f < b.f; };
  std::stable_sort(pop.begin(), pop.end(), by_fitness);

  auto tournament = [&]() -> const Individual& {
    const Individual& a = pop[rng.below(n)];
    const Individual& b = pop[rng.below(n)];
    return b.f < a.f ? b : a;
  };

  RunRecord record;
  record.seed = cfg.seed;
  record.best_value = pop.front().f;
  record.best_position = pop.front().x;
  record.curve.reserve(static_cast<std::size_t>(cfg.iters));

  std::vector<Individual> next;
  next.reserve(n + static_cast<std::size_t>(cfg.n_crossover() + cfg.n_mutation()));
  for (int t = 1; t <= cfg.iters; ++t) {
    next.clear();
    for (int e = 0; e < cfg.elites; ++e) next.push_back(pop[static_cast<std::size_t>(e)]);

    for (int k = 0; k < cfg.n_crossover(); k += 2) {
      const Individual& p1 = tournament();
      const Individual& p2 = tournament();
      Individual c1{Vec(d), 0.0};
      Individual c2{Vec(d), 0.0};
      for (std::size_t j = 0; j < d; ++j) {
        const double alpha = rng.uniform(-cfg.blend_gamma, 1.0 + cfg.blend_gamma);
        c1.x[j] = alpha * p1.x[j] + (1.0 - alpha) * p2.x[j];
        c2.x[j] = alpha * p2.x[j] + (1.0 - alpha) * p1.x[j];
      }
      space.clamp(c1.x);
      space.clamp(c2.x);
      c1.f = evaluate_checked(objective, c1.x);
      c2.f = evaluate_checked(objective, c2.x);
      next.push_back(std::move(c1));
      next.push_back(std::move(c2));
    }

    for (int k = 0; k < cfg.n_mutation(); ++k) {
      Individual m = tournament();
      for (std::size_t j = 0; j < d; ++j)
        m.x[j] += cfg.sigma_fraction * space.width(j) * rng.normal();
      space.clamp(m.x);
      m.f = evaluate_checked(objective, m.x);
      next.push_back(std::move(m));
    }

    while (next.size() < n) next.push_back(tournament());
    std::stable_sort(next.begin(), next.end(), by_fitness);
    next.resize(n);
    pop.swap(next);

    if (pop.front().f < record.best_value) {
      record.best_value = pop.front().f;
      record.best_position = pop.front().x;
    }
    record.curve.push_back(record.best_value);
  }

  record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

}  // namespace dfa
