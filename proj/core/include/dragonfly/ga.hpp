#pragma once

#include <cstdint>

#include "dragonfly/types.hpp"

namespace dfa {

struct GaConfig {
  double pc = 0.8;
  double pm = 0.03;
  int pop = 100;
  int iters = 1000;
  /// Mutation sigma as a fraction of each dimension's range.
  double sigma_fraction = 0.1;
  /// Crossover blend weights are drawn from U[-gamma, 1 + gamma] per gene, so
  /// children may land slightly outside the segment between their parents.
  double blend_gamma = 0.4;
  int elites = 1;
  std::uint64_t seed = 0;

  /// 2 * round(pop * pc / 2)
  int n_crossover() const;
  /// round(pop * pm)
  int n_mutation() const;
  void validate() const;
};

/// Real-coded GA. Each generation is the elites of the previous one, then
/// n_crossover arithmetic-crossover children (per-gene blend weight, parents by
/// binary tournament), then n_mutation Gaussian mutants of tournament winners,
/// topped up with plain tournament winners; the best pop survive.
RunRecord ga_optimize(const Objective& objective, const SearchSpace& space, const GaConfig& cfg);

}  // namespace dfa
