#include <doctest.h>

#include <cmath>

#include "dragonfly/binary.hpp"
#include "dragonfly/problems.hpp"
#include "support.hpp"

using namespace dfa;

namespace {

TransferConfig static_tf() { return {}; }

TransferConfig varying_tf(double tau_start = 4.0, double tau_end = 1.0) {
  return {TransferKind::time_varying, tau_start, tau_end};
}

}  // namespace

TEST_SUITE("da-binary") {

TEST_CASE("oracle: transfer function values") {
  CHECK(transfer(0.0, static_tf(), 0, 10) == 0.0);
  CHECK(transfer(1.0, static_tf(), 0, 10) == 1.0 / std::sqrt(2.0));
  CHECK(transfer(1.0, static_tf(), 0, 10) == doctest::Approx(0.70711).epsilon(1e-5));
  CHECK(transfer(-1.0, static_tf(), 3, 10) == transfer(1.0, static_tf(), 3, 10));
  CHECK(transfer(0.0, varying_tf(), 2, 10) == 0.0);
  // tau(t) = 4 - 3 t / T; at t = T/3 it is 3.
  CHECK(transfer(4.0, varying_tf(), 10, 30) == 4.0 / 5.0);
}

TEST_CASE("oracle: flip update") {
  RngStream rng(4);
  const BinaryDragonfly agent{{0, 1, 1, 0, 1}, Vec(5, 0.0)};
  CHECK(flip_update(agent, Vec(5, 0.0), rng).bits == agent.bits);
  CHECK(flip_update(agent, Vec(5, 1.0), rng).bits == Bits{1, 0, 0, 1, 0});
  CHECK_THROWS(flip_update(agent, Vec(4, 0.5), rng));

  const BinaryDragonfly wide{Bits(1000, 0), Vec(1000, 0.0)};
  const auto flipped = flip_update(wide, Vec(1000, 0.3), rng).bits;
  double ones = 0.0;
  for (auto b : flipped) ones += b;
  CHECK(std::abs(ones / 1000.0 - 0.3) <= 0.05);
}

TEST_CASE("oracle: feature selection fitness") {
  FeatureFitnessParams p;
  p.total_features = 10;
  CHECK(feature_fitness(0.0, 0, p) == 0.0);
  p.alpha = 0.99;
  CHECK(feature_fitness(0.1, 5, p) == doctest::Approx(0.104).epsilon(1e-14));
  p.alpha = 1.0;
  CHECK(p.beta() == 0.0);
  CHECK(feature_fitness(0.25, 7, p) == 0.25);
  CHECK(feature_fitness(0.25, 0, p) == 0.25);
  CHECK_THROWS(feature_fitness(0.1, 11, p));
  CHECK_THROWS(feature_fitness(0.1, -1, p));
}

TEST_CASE("feature fitness is monotone in error and subset size") {
  FeatureFitnessParams p;
  p.total_features = 20;
  RngStream rng(6);
  for (int i = 0; i < 1000; ++i) {
    const double e = rng.uniform();
    const int k = static_cast<int>(rng.below(20));
    CHECK(feature_fitness(e, k, p) <= feature_fitness(std::min(1.0, e + 0.01), k, p));
    CHECK(feature_fitness(e, k, p) <= feature_fitness(e, k + 1, p));
  }
}

TEST_CASE("transfer property: even in the step") {
  RngStream rng(101);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.uniform(-50.0, 50.0);
    const int T = 1 + static_cast<int>(rng.below(500));
    const int t = static_cast<int>(rng.below(static_cast<std::size_t>(T) + 1));
    CHECK(transfer(x, static_tf(), t, T) == transfer(-x, static_tf(), t, T));
    CHECK(transfer(x, varying_tf(), t, T) == transfer(-x, varying_tf(), t, T));
  }
}

TEST_CASE("transfer property: strictly increasing in the step magnitude") {
  RngStream rng(202);
  for (int i = 0; i < 10000; ++i) {
    double a = std::abs(rng.uniform(-50.0, 50.0));
    double b = std::abs(rng.uniform(-50.0, 50.0));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const int T = 1 + static_cast<int>(rng.below(500));
    const int t = static_cast<int>(rng.below(static_cast<std::size_t>(T) + 1));
    const double sa = rng.uniform() < 0.5 ? -a : a;
    const double sb = rng.uniform() < 0.5 ? -b : b;
    CHECK(transfer(sa, static_tf(), t, T) < transfer(sb, static_tf(), t, T));
    CHECK(transfer(sa, varying_tf(), t, T) < transfer(sb, varying_tf(), t, T));
  }
}

TEST_CASE("transfer property: range is [0, 1)") {
  RngStream rng(303);
  for (int i = 0; i < 10000; ++i) {
    // Magnitudes spread over many decades, up to ones that saturate.
    const double x = std::copysign(std::pow(10.0, rng.uniform(-12.0, 200.0)), rng.uniform() - 0.5);
    const int T = 1 + static_cast<int>(rng.below(500));
    const int t = static_cast<int>(rng.below(static_cast<std::size_t>(T) + 1));
    for (const auto& tf : {static_tf(), varying_tf()}) {
      const double p = transfer(x, tf, t, T);
      CHECK(p >= 0.0);
      CHECK(p < 1.0);
    }
  }
  CHECK(transfer(1e300, static_tf(), 0, 1) < 1.0);
  CHECK(transfer(std::numeric_limits<double>::max(), static_tf(), 0, 1) < 1.0);
}

TEST_CASE("transfer property: time-varying form ends on the static shape") {
  RngStream rng(404);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.uniform(-50.0, 50.0);
    const int T = 1 + static_cast<int>(rng.below(1000));
    const double tau_start = rng.uniform(1.0, 10.0);
    CHECK(transfer(x, varying_tf(tau_start, 1.0), T, T) == transfer(x, static_tf(), 0, T));
  }
}

TEST_CASE("transfer config validation") {
  CHECK_THROWS(varying_tf(1.0, 2.0).validate());
  CHECK_THROWS(varying_tf(1.0, 0.0).validate());
  CHECK_THROWS(transfer(1.0, static_tf(), 0, 0));
  CHECK(transfer_tau(varying_tf(), 0, 10) == 4.0);
  CHECK(transfer_tau(varying_tf(), 10, 10) == 1.0);
}

TEST_CASE("binary optimizer solves OneMax and replays") {
  DaConfig cfg;
  cfg.pop = 30;
  cfg.iters = 200;
  int solved = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    cfg.seed = seed;
    const auto rec = optimize_binary(onemax_zeros, 20, cfg, static_tf());
    solved += rec.best_value == 0.0 ? 1 : 0;
    CHECK(dfa::test::non_increasing(rec.curve));
    CHECK(rec.curve.size() == 200);
    for (double b : rec.best_position) CHECK((b == 0.0 || b == 1.0));
  }
  CHECK(solved >= 8);

  cfg.seed = 5;
  cfg.iters = 50;
  const auto a = optimize_binary(onemax_zeros, 16, cfg, varying_tf());
  const auto b = optimize_binary(onemax_zeros, 16, cfg, varying_tf());
  CHECK(a.curve == b.curve);
  CHECK(a.best_position == b.best_position);
  CHECK_THROWS(optimize_binary(onemax_zeros, 0, cfg, static_tf()));
}

}  // TEST_SUITE
