#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dragonfly/functions.hpp"
#include "dragonfly/ga.hpp"
#include "dragonfly/gwo.hpp"
#include "dragonfly/pso.hpp"
#include "support.hpp"

using namespace dfa;
using dfa::test::non_increasing;
using dfa::test::sphere;

namespace {

const SearchSpace plane = SearchSpace::box(2, -100, 100);

template <class Run>
int count_runs(int runs, double threshold, Run run) {
  int hits = 0;
  for (int s = 0; s < runs; ++s) hits += run(static_cast<std::uint64_t>(s)).best_value <= threshold ? 1 : 0;
  return hits;
}

void check_record(const RunRecord& r, const SearchSpace& space, int iters) {
  CHECK(r.curve.size() == static_cast<std::size_t>(iters));
  CHECK(non_increasing(r.curve));
  CHECK(r.curve.back() == r.best_value);
  CHECK(space.contains(r.best_position));
}

// Wraps an objective and records whether it was ever called out of bounds.
struct BoundsWatch {
  const SearchSpace* space;
  bool* violated;
  double operator()(std::span<const double> x) const {
    if (!space->contains(x)) *violated = true;
    return sphere(x);
  }
};

}  // namespace

TEST_SUITE("baselines") {

TEST_CASE("GA operator counts") {
  GaConfig cfg;
  cfg.pop = 100;
  CHECK(cfg.n_crossover() == 80);
  CHECK(cfg.n_mutation() == 3);
  cfg.pop = 30;
  CHECK(cfg.n_crossover() == 24);
  CHECK(cfg.n_mutation() == 1);
  cfg.pc = 1.5;
  CHECK_THROWS(cfg.validate());
}

TEST_CASE("constriction coefficient") {
  CHECK(constriction_coefficient(4.1) == doctest::Approx(0.7298).epsilon(1e-4));
  CHECK_THROWS(constriction_coefficient(4.0));
  PsoConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.c1 = cfg.c2 = 2.0;
  CHECK_THROWS(cfg.validate());
  cfg.inertia_mode = InertiaMode::linear;
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("PSO without acceleration is stationary") {
  PsoConfig cfg;
  cfg.c1 = cfg.c2 = 0.0;
  cfg.inertia_mode = InertiaMode::linear;
  cfg.pop = 20;
  cfg.iters = 50;
  const auto r = pso_optimize(sphere, plane, cfg);
  for (double v : r.curve) CHECK(v == r.curve.front());
}

TEST_CASE("GA without variation keeps its best") {
  GaConfig cfg;
  cfg.pc = 0.0;
  cfg.pm = 0.0;
  cfg.pop = 20;
  cfg.iters = 50;
  const auto r = ga_optimize(sphere, plane, cfg);
  for (double v : r.curve) CHECK(v == r.curve.front());
}

TEST_CASE("baselines stay in bounds and report monotone curves") {
  const auto box = SearchSpace::box(5, -3, 7);
  bool violated = false;
  const BoundsWatch watch{&box, &violated};

  PsoConfig pso;
  pso.pop = 20;
  pso.iters = 60;
  check_record(pso_optimize(watch, box, pso), box, 60);
  pso.inertia_mode = InertiaMode::linear;
  check_record(pso_optimize(watch, box, pso), box, 60);
  check_record(gwo_optimize(watch, box, 20, 60, 1), box, 60);
  GaConfig ga;
  ga.pop = 20;
  ga.iters = 60;
  check_record(ga_optimize(watch, box, ga), box, 60);
  CHECK_FALSE(violated);
}

TEST_CASE("baselines replay from a seed") {
  PsoConfig pso;
  pso.pop = 15;
  pso.iters = 40;
  pso.seed = 9;
  CHECK(pso_optimize(sphere, plane, pso).curve == pso_optimize(sphere, plane, pso).curve);
  CHECK(gwo_optimize(sphere, plane, 15, 40, 9).curve == gwo_optimize(sphere, plane, 15, 40, 9).curve);
  GaConfig ga;
  ga.pop = 15;
  ga.iters = 40;
  ga.seed = 9;
  CHECK(ga_optimize(sphere, plane, ga).curve == ga_optimize(sphere, plane, ga).curve);
  auto other = ga;
  other.seed = 10;
  CHECK(ga_optimize(sphere, plane, ga).curve != ga_optimize(sphere, plane, other).curve);
}

TEST_CASE("baselines reject non-finite objectives") {
  Objective bad = [](std::span<const double>) { return NAN; };
  PsoConfig pso;
  pso.pop = 5;
  pso.iters = 5;
  CHECK_THROWS_AS(pso_optimize(bad, plane, pso), NonFiniteObjective);
  CHECK_THROWS_AS(gwo_optimize(bad, plane, 5, 5, 0), NonFiniteObjective);
  GaConfig ga;
  ga.pop = 5;
  ga.iters = 5;
  CHECK_THROWS_AS(ga_optimize(bad, plane, ga), NonFiniteObjective);
}

TEST_CASE("PSO on sphere 2-D") {
  PsoConfig cfg;
  cfg.pop = 30;
  cfg.iters = 200;
  const int hits = count_runs(30, 1e-6, [&](std::uint64_t s) {
    cfg.seed = s;
    return pso_optimize(sphere, plane, cfg);
  });
  CHECK(hits >= 27);
}

TEST_CASE("GWO on sphere 2-D") {
  Vec best;
  for (std::uint64_t s = 0; s < 30; ++s) best.push_back(gwo_optimize(sphere, plane, 30, 200, s).best_value);
  std::nth_element(best.begin(), best.begin() + 15, best.end());
  CHECK(best[15] <= 1e-10);
}

TEST_CASE("GA on sphere 2-D") {
  GaConfig cfg;
  cfg.pop = 100;
  cfg.iters = 500;
  const int hits = count_runs(30, 1e-2, [&](std::uint64_t s) {
    cfg.seed = s;
    return ga_optimize(sphere, plane, cfg);
  });
  CHECK(hits >= 24);
}

TEST_CASE("PSO solves the step function") {
  const auto fn = classical_function("TF6", 10);
  PsoConfig cfg;
  const int hits = count_runs(30, 0.0, [&](std::uint64_t s) {
    cfg.seed = s;
    return pso_optimize(fn.objective(), fn.space, cfg);
  });
  CHECK(hits >= 24);
}

TEST_CASE("GWO reaches exact zero on Rastrigin") {
  const auto fn = classical_function("TF9", 10);
  const int hits = count_runs(30, 0.0, [&](std::uint64_t s) {
    return gwo_optimize(fn.objective(), fn.space, 100, 1000, s);
  });
  CHECK(hits >= 15);
}

}  // TEST_SUITE
