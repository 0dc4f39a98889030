#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dragonfly/continuous.hpp"
#include "support.hpp"

using namespace dfa;
using dfa::test::agents_at;

namespace {

NeighborSet all_but(const std::vector<Dragonfly>& swarm, std::size_t focal) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < swarm.size(); ++j)
    if (j != focal) idx.push_back(j);
  return NeighborSet(swarm, idx);
}

}  // namespace

TEST_SUITE("da-continuous") {

TEST_CASE("oracle: separation") {
  auto s1 = agents_at({{0, 0}, {1, 2}});
  CHECK(separation(s1[0], all_but(s1, 0)) == Vec{1, 2});
  auto s2 = agents_at({{1, 1}, {0, 0}, {2, 2}});
  CHECK(separation(s2[0], all_but(s2, 0)) == Vec{0, 0});
  auto s3 = agents_at({{4, -3}, {4, -3}});
  CHECK(separation(s3[0], all_but(s3, 0)) == Vec{0, 0});
  CHECK_THROWS_AS(separation(s3[0], NeighborSet(s3, {})), std::invalid_argument);
}

TEST_CASE("oracle: alignment") {
  std::vector<Dragonfly> swarm{{{0, 0}, {0, 0}}, {{1, 1}, {1, 1}}, {{2, 2}, {3, 3}}};
  CHECK(alignment(all_but(swarm, 0)) == Vec{2, 2});
  std::vector<Dragonfly> one{{{0, 0}, {0, 0}}, {{1, 1}, {5, -1}}};
  CHECK(alignment(all_but(one, 0)) == Vec{5, -1});
  std::vector<Dragonfly> opposed{{{0, 0}, {0, 0}}, {{1, 1}, {1, 0}}, {{2, 2}, {-1, 0}}};
  CHECK(alignment(all_but(opposed, 0)) == Vec{0, 0});
  CHECK_THROWS_AS(alignment(NeighborSet(one, {})), std::invalid_argument);
}

TEST_CASE("oracle: cohesion") {
  auto s1 = agents_at({{1, 1}, {2, 0}, {0, 2}});
  CHECK(cohesion(s1[0], all_but(s1, 0)) == Vec{0, 0});
  auto s2 = agents_at({{0, 0}, {4, 2}});
  CHECK(cohesion(s2[0], all_but(s2, 0)) == Vec{4, 2});
  auto s3 = agents_at({{3, 3}, {3, 3}, {3, 3}});
  CHECK(cohesion(s3[0], all_but(s3, 0)) == Vec{0, 0});
  CHECK_THROWS_AS(cohesion(s3[0], NeighborSet(s3, {})), std::invalid_argument);
}

TEST_CASE("oracle: food attraction") {
  const Dragonfly at_food{{5, -2, 7}, {0, 0, 0}};
  CHECK(food_attraction(at_food, Vec{5, -2, 7}) == Vec{0, 0, 0});
  CHECK(food_attraction({{1, 1}, {0, 0}}, Vec{2, 2}) == Vec{1, 1});
  CHECK(food_attraction({{2, 2}, {0, 0}}, Vec{1, 1}) == Vec{-1, -1});
  CHECK_THROWS(food_attraction({{2, 2}, {0, 0}}, Vec{1}));
}

TEST_CASE("oracle: enemy distraction as written") {
  CHECK(enemy_distraction({{1, 1}, {0, 0}}, Vec{2, 2}) == Vec{3, 3});
  CHECK(enemy_distraction({{0, 0}, {0, 0}}, Vec{0, 0}) == Vec{0, 0});
  CHECK(enemy_distraction({{-1, 2}, {0, 0}}, Vec{1, -2}) == Vec{0, 0});
  CHECK(enemy_distraction({{1, 1}, {0, 0}}, Vec{2, 2}, EnemyForm::repulsive) == Vec{-1, -1});
}

TEST_CASE("oracle: step update") {
  const ForceSet zero{{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}};
  CHECK(step_update(zero, {0, 0, 0, 0, 0, 0.9}, Vec{1, 0}) == Vec{0.9, 0});

  const ForceSet some{{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}};
  CHECK(step_update(some, {}, Vec{4, 4}) == Vec{0, 0});

  ForceSet food_only = zero;
  food_only.food_attr = {2, 2};
  CHECK(step_update(food_only, {0, 0, 0, 1, 0, 0}, Vec{0, 0}) == Vec{2, 2});

  const auto space = SearchSpace::box(2, 0.0, 1.0);
  CHECK(step_update(food_only, {0, 0, 0, 1, 0, 0}, Vec{0, 0}, &space) == Vec{1, 1});
}

TEST_CASE("oracle: position update") {
  const auto space = SearchSpace::box(2, 0.0, 10.0);
  CHECK(position_update({{1, 1}, {9, 9}}, Vec{0, 0}, space).position == Vec{1, 1});
  const auto moved = position_update({{1, 1}, {0, 0}}, Vec{2, 3}, space);
  CHECK(moved.position == Vec{3, 4});
  CHECK(moved.step == Vec{2, 3});
  CHECK(position_update({{9, 9}, {0, 0}}, Vec{5, 5}, space).position == Vec{10, 10});
}

TEST_CASE("oracle: levy position update") {
  const auto space = SearchSpace::box(2, -5.0, 5.0);
  RngStream rng(3);
  const auto origin = levy_position_update({{0, 0}, {1, 1}}, space, {}, rng);
  CHECK(origin.position == Vec{0, 0});
  CHECK(origin.step == Vec{0, 0});

  RngStream a(17), b(17);
  CHECK(levy_position_update({{1, 1}, {0, 0}}, space, {}, a).position ==
        levy_position_update({{1, 1}, {0, 0}}, space, {}, b).position);

  RngStream wild(5);
  LevyParams big;
  big.scale = 50.0;
  for (int i = 0; i < 200; ++i) {
    const auto out = levy_position_update({{4.5, -4.5}, {0, 0}}, space, big, wild);
    CHECK(space.contains(out.position));
  }
}

TEST_CASE("zero weights make positions fixed points") {
  const auto space = SearchSpace::box(2, -10.0, 10.0);
  DaConfig cfg;
  cfg.weights.s_base = cfg.weights.a_base = cfg.weights.c_base = 0.0;
  cfg.weights.f_base = cfg.weights.e_base = 0.0;
  SwarmState state;
  state.agents = {{{1, 2}, {0.5, -0.5}}, {{-3, 4}, {1, 1}}, {{0, 0}, {2, 0}}};
  state.food = {0, 0};
  state.enemy = {-3, 4};
  RngStream rng(1);
  for (std::size_t i = 0; i < state.agents.size(); ++i) {
    const auto nbrs = neighborhood(state.agents, i, 100.0);
    REQUIRE(!nbrs.empty());
    const auto next = advance_agent(state, i, nbrs, SwarmWeights{}, 100.0, space, cfg, rng);
    CHECK(next.position == state.agents[i].position);
  }
}

TEST_CASE("sphere 2-D converges in nearly every seeded run") {
  const auto space = SearchSpace::box(2, -100.0, 100.0);
  int good = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    DaConfig cfg;
    cfg.pop = 30;
    cfg.iters = 200;
    cfg.seed = seed;
    const auto rec = optimize(dfa::test::sphere, space, cfg);
    good += rec.best_value <= 1e-4 ? 1 : 0;
    CHECK(rec.curve.size() == 200);
    CHECK(dfa::test::non_increasing(rec.curve));
    CHECK(rec.curve.back() == rec.best_value);
    CHECK(space.contains(rec.best_position));
  }
  CHECK(good >= 27);
}

TEST_CASE("fixed seed replays the run") {
  const auto space = SearchSpace::box(5, -10.0, 10.0);
  for (auto mode : {StepMode::levy, StepMode::brownian}) {
    DaConfig cfg;
    cfg.pop = 12;
    cfg.iters = 40;
    cfg.seed = 77;
    cfg.step_mode = mode;
    const auto a = optimize(dfa::test::sphere, space, cfg);
    const auto b = optimize(dfa::test::sphere, space, cfg);
    CHECK(a.best_value == b.best_value);
    CHECK(a.best_position == b.best_position);
    CHECK(a.curve == b.curve);
    cfg.seed = 78;
    CHECK(optimize(dfa::test::sphere, space, cfg).curve != a.curve);
  }
}

TEST_CASE("permuting the initial agents does not change the outcome") {
  const auto space = SearchSpace::box(4, -5.0, 5.0);
  DaConfig cfg;
  cfg.pop = 15;
  cfg.iters = 60;
  cfg.seed = 9;
  const auto base = seeded_swarm(space, cfg.pop, cfg.seed);
  InitialSwarm shuffled;
  std::vector<std::size_t> order(base.agents.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = (i * 7 + 3) % order.size();
  for (auto k : order) {
    shuffled.agents.push_back(base.agents[k]);
    shuffled.ids.push_back(base.ids[k]);
  }
  const auto a = optimize(dfa::test::sphere, space, cfg, base);
  const auto b = optimize(dfa::test::sphere, space, cfg, shuffled);
  CHECK(a.best_value == b.best_value);
  CHECK(a.curve == b.curve);
}

TEST_CASE("positions stay inside the box under every variant") {
  const auto space = SearchSpace(Vec{-1, 0, 5}, Vec{1, 10, 6});
  for (auto enemy : {EnemyForm::additive, EnemyForm::repulsive}) {
    for (auto wall : {WallPolicy::keep_step, WallPolicy::reflect_step}) {
      DaConfig cfg;
      cfg.pop = 10;
      cfg.iters = 30;
      cfg.enemy_form = enemy;
      cfg.wall_policy = wall;
      SearchSpace checked = space;
      bool inside = true;
      Objective probe = [&](std::span<const double> x) {
        inside = inside && checked.contains(x);
        return dfa::test::sphere(x);
      };
      optimize(probe, space, cfg);
      CHECK(inside);
    }
  }
}

TEST_CASE("non-finite objective aborts the run") {
  const auto space = SearchSpace::box(2, -1.0, 1.0);
  DaConfig cfg;
  cfg.pop = 4;
  cfg.iters = 3;
  Objective bad = [](std::span<const double>) { return std::nan(""); };
  CHECK_THROWS_AS(optimize(bad, space, cfg), NonFiniteObjective);
}

TEST_CASE("config validation") {
  const auto space = SearchSpace::box(2, -1.0, 1.0);
  DaConfig cfg;
  cfg.pop = 1;
  CHECK_THROWS(optimize(dfa::test::sphere, space, cfg));
  cfg.pop = 5;
  cfg.iters = 0;
  CHECK_THROWS(optimize(dfa::test::sphere, space, cfg));
  cfg.iters = 5;
  CHECK_THROWS(optimize(dfa::test::sphere, SearchSpace::binary(3), cfg));
}

}  // TEST_SUITE
