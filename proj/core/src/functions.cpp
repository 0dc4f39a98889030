#include "dragonfly/functions.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dragonfly/rng.hpp"

namespace dfa {

namespace {

using std::numbers::pi;
using Span = std::span<const double>;

double sq(double v) { return v * v; }

// Penalty term shared by the two penalized functions.
double penalty(double x, double a, double k, double m) {
  if (x > a) return k * std::pow(x - a, m);
  if (x < -a) return k * std::pow(-x - a, m);
  return 0.0;
}

// Deterministic stand-in for the uniform noise term: a hash of the point's bits
// mapped to [0, 1), so repeated evaluations agree exactly.
double point_noise(Span x) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (double v : x) h = derive_seed(h, std::bit_cast<std::uint64_t>(v));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double sphere(Span x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double schwefel_2_22(Span x) {
  double s = 0.0, p = 1.0;
  for (double v : x) {
    s += std::abs(v);
    p *= std::abs(v);
  }
  return s + p;
}

double schwefel_1_2(Span x) {
  double s = 0.0, prefix = 0.0;
  for (double v : x) {
    prefix += v;
    s += prefix * prefix;
  }
  return s;
}

double schwefel_2_21(Span x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double rosenbrock(Span x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) s += 100.0 * sq(x[i + 1] - x[i] * x[i]) + sq(x[i] - 1.0);
  return s;
}

double step(Span x) {
  double s = 0.0;
  for (double v : x) s += sq(std::floor(v + 0.5));
  return s;
}

double quartic_noise(Span x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * std::pow(x[i], 4);
  return s + point_noise(x);
}

double schwefel_2_26(Span x) {
  double s = 0.0;
  for (double v : x) s -= v * std::sin(std::sqrt(std::abs(v)));
  return s;
}

double rastrigin(Span x) {
  double s = 0.0;
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
  return s;
}

double ackley(Span x) {
  const auto n = static_cast<double>(x.size());
  double s2 = 0.0, sc = 0.0;
  for (double v : x) {
    s2 += v * v;
    sc += std::cos(2.0 * pi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(s2 / n)) - std::exp(sc / n) + 20.0 + std::numbers::e;
}

double griewank(Span x) {
  double s = 0.0, p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i];
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return s / 4000.0 - p + 1.0;
}

double penalized_1(Span x) {
  const std::size_t n = x.size();
  auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
  double s = 10.0 * sq(std::sin(pi * y(0)));
  for (std::size_t i = 0; i + 1 < n; ++i) s += sq(y(i) - 1.0) * (1.0 + 10.0 * sq(std::sin(pi * y(i + 1))));
  s += sq(y(n - 1) - 1.0);
  double pen = 0.0;
  for (double v : x) pen += penalty(v, 10.0, 100.0, 4.0);
  return pi / static_cast<double>(n) * s + pen;
}

double penalized_2(Span x) {
  const std::size_t n = x.size();
  double s = sq(std::sin(3.0 * pi * x[0]));
  for (std::size_t i = 0; i + 1 < n; ++i) s += sq(x[i] - 1.0) * (1.0 + sq(std::sin(3.0 * pi * x[i + 1])));
  s += sq(x[n - 1] - 1.0) * (1.0 + sq(std::sin(2.0 * pi * x[n - 1])));
  double pen = 0.0;
  for (double v : x) pen += penalty(v, 5.0, 100.0, 4.0);
  return 0.1 * s + pen;
}

double foxholes(Span x) {
  constexpr std::array<double, 5> v{-32.0, -16.0, 0.0, 16.0, 32.0};
  double s = 1.0 / 500.0;
  for (int j = 0; j < 25; ++j) {
    const double a0 = v[static_cast<std::size_t>(j % 5)];
    const double a1 = v[static_cast<std::size_t>(j / 5)];
    s += 1.0 / (j + 1 + std::pow(x[0] - a0, 6) + std::pow(x[1] - a1, 6));
  }
  return 1.0 / s;
}

// Kowalik data: a_i and the reciprocals of b_i.
constexpr std::array<double, 11> kowalik_a{0.1957, 0.1947, 0.1735, 0.16,   0.0844, 0.0627,
                                           0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
constexpr std::array<double, 11> kowalik_inv_b{0.25, 0.5, 1, 2, 4, 6, 8, 10, 12, 14, 16};

double kowalik(Span x) {
  double s = 0.0;
  for (std::size_t i = 0; i < 11; ++i) {
    const double b = 1.0 / kowalik_inv_b[i];
    s += sq(kowalik_a[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]));
  }
  return s;
}

double six_hump_camel(Span x) {
  const double a = x[0], b = x[1];
  return 4 * a * a - 2.1 * std::pow(a, 4) + std::pow(a, 6) / 3 + a * b - 4 * b * b + 4 * std::pow(b, 4);
}

double branin(Span x) {
  const double b = 5.1 / (4 * pi * pi), c = 5 / pi, t = 1 / (8 * pi);
  return sq(x[1] - b * x[0] * x[0] + c * x[0] - 6) + 10 * (1 - t) * std::cos(x[0]) + 10;
}

double goldstein_price(Span x) {
  const double a = x[0], b = x[1];
  const double p = 1 + sq(a + b + 1) * (19 - 14 * a + 3 * a * a - 14 * b + 6 * a * b + 3 * b * b);
  const double q = 30 + sq(2 * a - 3 * b) * (18 - 32 * a + 12 * a * a + 48 * b - 36 * a * b + 27 * b * b);
  return p * q;
}

constexpr std::array<double, 4> hartmann_c{1.0, 1.2, 3.0, 3.2};
constexpr std::array<std::array<double, 3>, 4> hartmann3_a{
    {{3, 10, 30}, {0.1, 10, 35}, {3, 10, 30}, {0.1, 10, 35}}};
constexpr std::array<std::array<double, 3>, 4> hartmann3_p{{{0.3689, 0.117, 0.2673},
                                                            {0.4699, 0.4387, 0.747},
                                                            {0.1091, 0.8732, 0.5547},
                                                            {0.03815, 0.5743, 0.8828}}};
constexpr std::array<std::array<double, 6>, 4> hartmann6_a{{{10, 3, 17, 3.5, 1.7, 8},
                                                            {0.05, 10, 17, 0.1, 8, 14},
                                                            {3, 3.5, 1.7, 10, 17, 8},
                                                            {17, 8, 0.05, 10, 0.1, 14}}};
constexpr std::array<std::array<double, 6>, 4> hartmann6_p{
    {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
     {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
     {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
     {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}}};

template <std::size_t D>
double hartmann(Span x, const std::array<std::array<double, D>, 4>& a,
                const std::array<std::array<double, D>, 4>& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (std::size_t j = 0; j < D; ++j) inner += a[i][j] * sq(x[j] - p[i][j]);
    s -= hartmann_c[i] * std::exp(-inner);
  }
  return s;
}

constexpr std::array<std::array<double, 4>, 10> shekel_a{{{4, 4, 4, 4},
                                                          {1, 1, 1, 1},
                                                          {8, 8, 8, 8},
                                                          {6, 6, 6, 6},
                                                          {3, 7, 3, 7},
                                                          {2, 9, 2, 9},
                                                          {5, 5, 3, 3},
                                                          {8, 1, 8, 1},
                                                          {6, 2, 6, 2},
                                                          {7, 3.6, 7, 3.6}}};
constexpr std::array<double, 10> shekel_c{0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};

double shekel(Span x, std::size_t m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double d = shekel_c[i];
    for (std::size_t j = 0; j < 4; ++j) d += sq(x[j] - shekel_a[i][j]);
    s -= 1.0 / d;
  }
  return s;
}

BenchmarkFn make(std::string id, std::string name, FnGroup group, SearchSpace space,
                 std::optional<double> known_min, std::optional<Vec> optimum,
                 double (*f)(Span)) {
  return BenchmarkFn{std::move(id), std::move(name), group,  std::move(space),
                     known_min,     std::move(optimum), f};
}

}  // namespace

const char* to_string(FnGroup group) {
  switch (group) {
    case FnGroup::unimodal: return "unimodal";
    case FnGroup::multimodal: return "multimodal";
    case FnGroup::fixed_dimension: return "fixed_dimension";
    case FnGroup::cec2019: return "cec2019";
  }
  return "unknown";
}

double BenchmarkFn::evaluate(std::span<const double> x) const {
  if (x.size() != dim())
    throw std::invalid_argument(id + ": expected " + std::to_string(dim()) + " components, got " +
                                std::to_string(x.size()));
  if (!space.contains(x)) throw std::invalid_argument(id + ": point outside the search space");
  return formula(x);
}

BenchmarkFn classical_function(const std::string& id, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("classical_function: dim must be positive");
  const auto box = [&](double lo, double hi) { return SearchSpace::box(dim, lo, hi); };
  const auto at = [&](double v) { return Vec(dim, v); };
  const auto U = FnGroup::unimodal;
  const auto M = FnGroup::multimodal;
  const auto F = FnGroup::fixed_dimension;

  if (id == "TF1") return make(id, "Sphere", U, box(-100, 100), 0.0, at(0), sphere);
  if (id == "TF2") return make(id, "Schwefel 2.22", U, box(-10, 10), 0.0, at(0), schwefel_2_22);
  if (id == "TF3") return make(id, "Schwefel 1.2", U, box(-100, 100), 0.0, at(0), schwefel_1_2);
  if (id == "TF4") return make(id, "Schwefel 2.21", U, box(-100, 100), 0.0, at(0), schwefel_2_21);
  if (id == "TF5") return make(id, "Rosenbrock", U, box(-30, 30), 0.0, at(1), rosenbrock);
  if (id == "TF6") return make(id, "Step", U, box(-100, 100), 0.0, at(0), step);
  if (id == "TF7")
    return make(id, "Quartic with noise", U, box(-1.28, 1.28), 0.0, std::nullopt, quartic_noise);
  if (id == "TF8")
    return make(id, "Schwefel 2.26", M, box(-500, 500), -418.98288727243369 * static_cast<double>(dim),
                at(420.9687487856824), schwefel_2_26);
  if (id == "TF9") return make(id, "Rastrigin", M, box(-5.12, 5.12), 0.0, at(0), rastrigin);
  if (id == "TF10") return make(id, "Ackley", M, box(-32, 32), 0.0, at(0), ackley);
  if (id == "TF11") return make(id, "Griewank", M, box(-600, 600), 0.0, at(0), griewank);
  if (id == "TF12") return make(id, "Penalized 1", M, box(-50, 50), 0.0, at(-1), penalized_1);
  if (id == "TF13") return make(id, "Penalized 2", M, box(-50, 50), 0.0, at(1), penalized_2);

  const auto fixed = [](std::size_t n, double lo, double hi) { return SearchSpace::box(n, lo, hi); };
  if (id == "TF14")
    return make(id, "Shekel's Foxholes", F, fixed(2, -65.536, 65.536), 0.99800383779445,
                Vec{-31.97833495762107, -31.978328496668112}, foxholes);
  if (id == "TF15")
    return make(id, "Kowalik", F, fixed(4, -5, 5), 3.0748598780560557e-4,
                Vec{0.19283345308129274, 0.1908362399907949, 0.1231172992771683, 0.13576599026903194},
                kowalik);
  if (id == "TF16")
    return make(id, "Six-Hump Camel", F, fixed(2, -5, 5), -1.0316284534898776,
                Vec{0.08984201652927098, -0.7126564013807202}, six_hump_camel);
  if (id == "TF17")
    return make(id, "Branin", F, SearchSpace(Vec{-5, 0}, Vec{10, 15}), 0.39788735772973816,
                Vec{pi, 2.275}, branin);
  if (id == "TF18")
    return make(id, "Goldstein-Price", F, fixed(2, -2, 2), 3.0, Vec{0, -1}, goldstein_price);
  if (id == "TF19")
    return make(id, "Hartmann 3", F, fixed(3, 0, 1), -3.8627821478207554,
                Vec{0.11461434203082951, 0.5556488507905384, 0.8525469538460251},
                [](Span x) { return hartmann(x, hartmann3_a, hartmann3_p); });
  if (id == "TF20")
    return make(id, "Hartmann 6", F, fixed(6, 0, 1), -3.322368011415515,
                Vec{0.20168951037794658, 0.15001069146456325, 0.4768739733706766,
                    0.2753324288543796, 0.3116516165632252, 0.6573005308464771},
                [](Span x) { return hartmann(x, hartmann6_a, hartmann6_p); });
  if (id == "TF21")
    return make(id, "Shekel 5", F, fixed(4, 0, 10), -10.153199679058229,
                Vec{4.000037152376549, 4.000133278657566, 4.000037151057555, 4.000133277090425},
                [](Span x) { return shekel(x, 5); });
  if (id == "TF22")
    return make(id, "Shekel 7", F, fixed(4, 0, 10), -10.402940566818662,
                Vec{4.000572914277084, 4.000689366040889, 3.9994897107938447, 3.9996061600067923},
                [](Span x) { return shekel(x, 7); });
  if (id == "TF23")
    return make(id, "Shekel 10", F, fixed(4, 0, 10), -10.536409816692046,
                Vec{4.000746533201553, 4.000592934538832, 3.9996633972202558, 3.9995098012852255},
                [](Span x) { return shekel(x, 10); });
  throw std::invalid_argument("unknown classical function: " + id);
}

std::vector<BenchmarkFn> suite(const std::string& name, std::size_t dim) {
  std::vector<BenchmarkFn> fns;
  if (name == "classical") {
    for (int i = 1; i <= 23; ++i) fns.push_back(classical_function("TF" + std::to_string(i), dim));
  } else if (name == "cec2019") {
    for (int i = 1; i <= 10; ++i)
      fns.push_back(cec2019_function((i < 10 ? "CEC0" : "CEC") + std::to_string(i)));
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return fns;
}

BenchmarkFn find_function(const std::string& id, std::size_t dim) {
  if (id.starts_with("TF")) return classical_function(id, dim);
  if (id.starts_with("CEC")) return cec2019_function(id);
  throw std::invalid_argument("unknown function: " + id);
}

}  // namespace dfa
