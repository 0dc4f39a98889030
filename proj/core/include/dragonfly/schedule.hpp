#pragma once

#include "dragonfly/rng.hpp"
#include "dragonfly/types.hpp"

namespace dfa {

/// Neighborhood radius r_j(t) = width_j * (initial + growth * t / T).
///
/// With the defaults the radius starts at a quarter of the range and covers
/// the whole box from t = 3T/8 on, so the swarm merges into one group.
struct RadiusSchedule {
  double initial_fraction = 0.25;
  double growth = 2.0;
};

/// Per-dimension radius at iteration t of T. Throws on T == 0 or t > T.
Vec radius_schedule(const SearchSpace& space, int t, int T, const RadiusSchedule& sched = {});

/// Scalar Euclidean radius matching the per-dimension radius vector (its 2-norm).
double euclidean_radius(const SearchSpace& space, int t, int T, const RadiusSchedule& sched = {});

/// Base magnitudes of the swarming weights and the inertia ramp.
struct WeightSchedule {
  double s_base = 0.1;
  double a_base = 0.1;
  double c_base = 0.7;
  double f_base = 1.0;
  double e_base = 1.0;
  double w_start = 0.9;
  double w_end = 0.2;
  /// Random multipliers are drawn from U[0, multiplier_span); the mean
  /// multiplier is half the span.
  double multiplier_span = 2.6;

  void validate() const;
};

struct SwarmWeights {
  double s = 0.0;  // separation
  double a = 0.0;  // alignment
  double c = 0.0;  // cohesion
  double f = 0.0;  // food attraction
  double e = 0.0;  // enemy distraction
  double w = 0.0;  // inertia
};

/// max(0, 1 - 2t/T)
double weight_decay(int t, int T);

/// Linear inertia ramp from w_start (t = 0) to w_end (t = T).
double inertia_at(const WeightSchedule& sched, int t, int T);

/// Swarming weights at iteration t. s, a, c, e are base * u * decay(t) and
/// f is f_base * u', each u a fresh U[0, multiplier_span) draw from `rng`
/// (five draws, in the order s, a, c, e, f).
SwarmWeights weights_at(const WeightSchedule& sched, int t, int T, RngStream& rng);

}  // namespace dfa
