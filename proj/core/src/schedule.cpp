#include "dragonfly/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dfa {

namespace {
void check_time(int t, int T) {
  if (T < 1) throw std::invalid_argument("schedule: T must be >= 1");
  if (t < 0 || t > T) throw std::invalid_argument("schedule: t must lie in [0, T]");
}
}  // namespace

Vec radius_schedule(const SearchSpace& space, int t, int T, const RadiusSchedule& sched) {
  check_time(t, T);
  const double factor = sched.initial_fraction + sched.growth * static_cast<double>(t) / T;
  Vec r(space.dim());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = space.width(j) * factor;
  return r;
}

double euclidean_radius(const SearchSpace& space, int t, int T, const RadiusSchedule& sched) {
  const Vec r = radius_schedule(space, t, T, sched);
  double sum = 0.0;
  for (double v : r) sum += v * v;
  return std::sqrt(sum);
}

void WeightSchedule::validate() const {
  if (s_base < 0 || a_base < 0 || c_base < 0 || f_base < 0 || e_base < 0)
    throw std::invalid_argument("WeightSchedule: base weights must be >= 0");
  if (!(w_start > w_end && w_end > 0))
    throw std::invalid_argument("WeightSchedule: need w_start > w_end > 0");
  if (!(multiplier_span > 0)) throw std::invalid_argument("WeightSchedule: multiplier_span must be > 0");
}

double weight_decay(int t, int T) {
  check_time(t, T);
  return std::max(0.0, 1.0 - 2.0 * static_cast<double>(t) / T);
}

double inertia_at(const WeightSchedule& sched, int t, int T) {
  check_time(t, T);
  if (t == T) return sched.w_end;
  return sched.w_start - (sched.w_start - sched.w_end) * static_cast<double>(t) / T;
}

SwarmWeights weights_at(const WeightSchedule& sched, int t, int T, RngStream& rng) {
  const double decay = weight_decay(t, T);
  const double m = sched.multiplier_span;
  SwarmWeights out;
  out.s = sched.s_base * m * rng.uniform() * decay;
  out.a = sched.a_base * m * rng.uniform() * decay;
  out.c = sched.c_base * m * rng.uniform() * decay;
  out.e = sched.e_base * m * rng.uniform() * decay;
  out.f = sched.f_base * m * rng.uniform();
  out.w = inertia_at(sched, t, T);
  return out;
}

}  // namespace dfa
