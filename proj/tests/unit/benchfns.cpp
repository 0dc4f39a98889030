#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dragonfly/functions.hpp"
#include "dragonfly/rng.hpp"

using namespace dfa;

namespace {

Vec random_point(const SearchSpace& space, RngStream& rng) {
  Vec x(space.dim());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = rng.uniform(space.lower(j), space.upper(j));
  return x;
}

// Test-only analytic gradients.
Vec sphere_gradient(const Vec& x) {
  Vec g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = 2.0 * x[i];
  return g;
}

Vec rosenbrock_gradient(const Vec& x) {
  Vec g(x.size(), 0.0);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double r = x[i + 1] - x[i] * x[i];
    g[i] += -400.0 * x[i] * r - 2.0 * (1.0 - x[i]);
    g[i + 1] += 200.0 * r;
  }
  return g;
}

double max_relative_gradient_error(const BenchmarkFn& fn, Vec (*gradient)(const Vec&), RngStream& rng) {
  double worst = 0.0;
  for (int p = 0; p < 100; ++p) {
    // Keep the stencil inside the box.
    Vec x = random_point(fn.space, rng);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] *= 0.99;
    const Vec g = gradient(x);
    double norm = 0.0;
    for (double v : g) norm = std::max(norm, std::abs(v));
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double h = 1e-5 * std::max(1.0, std::abs(x[j]));
      Vec up = x, down = x;
      up[j] += h;
      down[j] -= h;
      const double fd = (fn.evaluate(up) - fn.evaluate(down)) / (2.0 * h);
      worst = std::max(worst, std::abs(fd - g[j]) / std::max(norm, 1.0));
    }
  }
  return worst;
}

}  // namespace

TEST_SUITE("benchfns") {

TEST_CASE("sphere at the origin") {
  CHECK(classical_function("TF1", 30).evaluate(Vec(30, 0.0)) == 0.0);
}

TEST_CASE("fixed-dimension minima") {
  const auto tf16 = classical_function("TF16");
  CHECK(tf16.evaluate(*tf16.optimum) == doctest::Approx(-1.0316285).epsilon(1e-7));
  CHECK(std::abs(tf16.evaluate(*tf16.optimum) - -1.03162845346044) <= 1e-9);
  const auto tf17 = classical_function("TF17");
  CHECK(std::abs(tf17.evaluate(*tf17.optimum) - 0.397887357729738) <= 1e-12);
  const auto tf18 = classical_function("TF18");
  CHECK(tf18.evaluate(*tf18.optimum) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("stored optima reproduce the known minimum") {
  for (std::size_t dim : {2u, 10u, 30u}) {
    for (const auto& name : {"classical", "cec2019"}) {
      for (const auto& fn : suite(name, dim)) {
        if (!fn.optimum) continue;
        REQUIRE(fn.known_min);
        CAPTURE(fn.id);
        const double value = fn.evaluate(*fn.optimum);
        const double target = *fn.known_min;
        if (target == 0.0)
          CHECK(std::abs(value) <= 1e-9);
        else
          CHECK(std::abs(value - target) <= 1e-9 * std::abs(target));
      }
    }
  }
}

TEST_CASE("CEC functions have minimum 1") {
  for (const auto& fn : suite("cec2019")) {
    CAPTURE(fn.id);
    REQUIRE(fn.known_min);
    CHECK(*fn.known_min == 1.0);
    if (fn.optimum) CHECK(fn.evaluate(*fn.optimum) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("suite shapes") {
  const auto classical = suite("classical");
  REQUIRE(classical.size() == 23);
  int counts[3] = {0, 0, 0};
  for (const auto& fn : classical) ++counts[static_cast<int>(fn.group)];
  CHECK(counts[0] == 7);
  CHECK(counts[1] == 6);
  CHECK(counts[2] == 10);

  const auto cec = suite("cec2019");
  REQUIRE(cec.size() == 10);
  CHECK(cec[0].id == "CEC01");
  CHECK(cec[0].dim() == 9);
  CHECK(cec[0].space.lower(0) == -8192);
  CHECK(cec[0].space.upper(8) == 8192);
  CHECK(cec[1].dim() == 16);
  CHECK(cec[2].id == "CEC03");
  CHECK(cec[2].dim() == 18);
  CHECK(cec[2].space.lower(0) == -4);
  CHECK(cec[2].space.upper(17) == 4);
  for (std::size_t i = 3; i < 10; ++i) {
    CHECK(cec[i].dim() == 10);
    CHECK(cec[i].space.upper(0) == 100);
  }
  for (const auto& fn : cec) CHECK(fn.group == FnGroup::cec2019);

  CHECK_THROWS(suite("nope"));
  CHECK_THROWS(find_function("TF24"));
  CHECK(find_function("CEC07").id == "CEC07");
  CHECK(classical_function("TF9", 7).dim() == 7);
  CHECK(classical_function("TF19", 7).dim() == 3);
}

TEST_CASE("unimodal functions never go below their minimum") {
  RngStream rng(2024);
  for (const auto& fn : suite("classical", 10)) {
    if (fn.group != FnGroup::unimodal) continue;
    CAPTURE(fn.id);
    const double floor = *fn.known_min;
    int below = 0;
    for (int i = 0; i < 1000000; ++i) below += fn.evaluate(random_point(fn.space, rng)) < floor ? 1 : 0;
    CHECK(below == 0);
  }
}

TEST_CASE("evaluation is pure") {
  RngStream rng(3);
  for (const auto& name : {"classical", "cec2019"}) {
    for (const auto& fn : suite(name, 10)) {
      CAPTURE(fn.id);
      for (int i = 0; i < 100; ++i) {
        const auto x = random_point(fn.space, rng);
        const double a = fn.evaluate(x);
        CHECK(std::isfinite(a));
        CHECK(std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(fn.evaluate(x)));
      }
    }
  }
}

TEST_CASE("analytic gradients match central differences") {
  RngStream rng(99);
  CHECK(max_relative_gradient_error(classical_function("TF1", 10), sphere_gradient, rng) <= 1e-4);
  CHECK(max_relative_gradient_error(classical_function("TF5", 10), rosenbrock_gradient, rng) <= 1e-4);
}

TEST_CASE("evaluate rejects malformed input") {
  const auto fn = classical_function("TF1", 3);
  CHECK_THROWS(fn.evaluate(Vec{0, 0}));
  CHECK_THROWS(fn.evaluate(Vec{0, 0, 101}));
  CHECK_THROWS(fn.evaluate(Vec{0, NAN, 0}));
  CHECK_NOTHROW(fn.evaluate(Vec{100, -100, 0}));
}

TEST_CASE("CEC transform files") {
  std::istringstream text("2,1\n1,2\n0,1\n1,0\n");
  const auto t = read_cec_transform(text);
  CHECK(t.shift == Vec{1, 2});
  REQUIRE(t.rotation.size() == 2);
  CHECK(t.rotation[1] == Vec{1, 0});

  std::istringstream short_text("3,1\n1,2,3\n1,0,0\n");
  CHECK_THROWS(read_cec_transform(short_text));
  CHECK_THROWS(read_cec_transform_file("/nonexistent/CEC04.csv"));

  const auto base = cec2019_function("CEC04");
  CecTransform shift{Vec(10, 5.0), {}};
  for (std::size_t i = 0; i < 10; ++i) {
    shift.rotation.emplace_back(10, 0.0);
    shift.rotation[i][i] = 1.0;
  }
  const auto moved = with_transform(base, shift);
  REQUIRE(moved.optimum);
  CHECK(*moved.optimum == Vec(10, 5.0));
  CHECK(moved.evaluate(Vec(10, 5.0)) == doctest::Approx(1.0));
  CHECK(moved.evaluate(Vec(10, 0.0)) == base.evaluate(Vec(10, -5.0)));

  CecTransform wrong{Vec(3, 0.0), std::vector<Vec>(3, Vec(3, 0.0))};
  CHECK_THROWS(with_transform(base, wrong));
}

TEST_CASE("noisy quartic is deterministic and non-negative") {
  const auto fn = classical_function("TF7", 10);
  RngStream rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_point(fn.space, rng);
    const double v = fn.evaluate(x);
    CHECK(v >= 0.0);
    CHECK(v == fn.evaluate(x));
  }
}

}  // TEST_SUITE
