#pragma once

#include <cstdint>

#include "dragonfly/types.hpp"

namespace dfa {

enum class InertiaMode { constriction, linear };

struct PsoConfig {
  double c1 = 2.05;
  double c2 = 2.05;
  InertiaMode inertia_mode = InertiaMode::constriction;
  /// Inertia range for the linear mode, decreasing over the run.
  double w_start = 0.9;
  double w_end = 0.4;
  int pop = 100;
  int iters = 1000;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Clerc constriction coefficient 2 / |2 - c - sqrt(c^2 - 4c)|; needs c > 4.
double constriction_coefficient(double c);

/// Global-best PSO. Constriction mode: v' = chi (v + c1 r1 (p - x) + c2 r2 (g - x)).
/// Linear mode: v' = w v + c1 r1 (p - x) + c2 r2 (g - x). Velocities start at
/// zero and are clamped to the range width; positions are clamped to the box.
RunRecord pso_optimize(const Objective& objective, const SearchSpace& space, const PsoConfig& cfg);

}  // namespace dfa
