#include "dragonfly/gwo.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dragonfly/rng.hpp"

namespace dfa {

RunRecord gwo_optimize(const Objective& objective, const SearchSpace& space, int pop, int iters,
                       std::uint64_t seed) {
  if (space.mode() != SpaceMode::continuous)
    throw std::invalid_argument("gwo_optimize: continuous search space required");
  if (pop < 2) throw std::invalid_argument("gwo_optimize: pop must be at least 2");
  if (iters < 1) throw std::invalid_argument("gwo_optimize: iters must be positive");
  const auto start = std::chrono::steady_clock::now();
  RngStream rng(seed);
  const std::size_t n = static_cast<std::size_t>(pop);
  const std::size_t d = space.dim();

  std::vector<Vec> x(n, Vec(d));
  for (auto& xi : x)
    for (std::size_t j = 0; j < d; ++j) xi[j] = rng.uniform(space.lower(j), space.upper(j));

  constexpr double inf = std::numeric_limits<double>::infinity();
  std::array<Vec, 3> leader{Vec(d), Vec(d), Vec(d)};
  std::array<double, 3> leader_value{inf, inf, inf};
  auto rank = [&](const Vec& xi, double f) {
    if (f < leader_value[0]) {
      leader[2] = leader[1], leader_value[2] = leader_value[1];
      leader[1] = leader[0], leader_value[1] = leader_value[0];
      leader[0] = xi, leader_value[0] = f;
    } else if (f < leader_value[1]) {
      leader[2] = leader[1], leader_value[2] = leader_value[1];
      leader[1] = xi, leader_value[1] = f;
    } else if (f < leader_value[2]) {
      leader[2] = xi, leader_value[2] = f;
    }
  };
  for (const auto& xi : x) rank(xi, evaluate_checked(objective, xi));

  RunRecord record;
  record.seed = seed;
  record.curve.reserve(static_cast<std::size_t>(iters));
  for (int t = 1; t <= iters; ++t) {
    const double a = 2.0 - 2.0 * (t - 1) / iters;
    for (auto& xi : x) {
      for (std::size_t j = 0; j < d; ++j) {
        double sum = 0.0;
        for (const auto& l : leader) {
          const double A = 2.0 * a * rng.uniform() - a;
          const double C = 2.0 * rng.uniform();
          sum += l[j] - A * std::abs(C * l[j] - xi[j]);
        }
        xi[j] = sum / 3.0;
      }
      space.clamp(xi);
    }
    for (const auto& xi : x) rank(xi, evaluate_checked(objective, xi));
    record.curve.push_back(leader_value[0]);
  }

  record.best_value = leader_value[0];
  record.best_position = leader[0];
  record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

}  // namespace dfa
