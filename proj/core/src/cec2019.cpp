#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dragonfly/functions.hpp"

namespace dfa {

namespace {

using std::numbers::pi;
using Span = std::span<const double>;

double sq(double v) { return v * v; }

// Storn's Chebyshev fitting problem for D = 9 (degree-8 target T8).
double chebyshev(Span x) {
  constexpr double d = 72.661;
  const std::size_t n = x.size();
  const std::size_t m = 32 * n;
  auto poly = [&](double t) {
    double p = 0.0;
    for (std::size_t j = 0; j < n; ++j) p = p * t + x[j];
    return p;
  };
  double s = 0.0;
  for (double t : {1.2, -1.2}) {
    const double p = poly(t);
    if (p < d) s += sq(p - d);
  }
  for (std::size_t i = 0; i <= m; ++i) {
    const double p = poly(2.0 * static_cast<double>(i) / static_cast<double>(m) - 1.0);
    if (p > 1.0) s += sq(p - 1.0);
    else if (p < -1.0) s += sq(p + 1.0);
  }
  return s + 1.0;
}

// Storn's inverse Hilbert matrix problem, n = 4: sum |H Z - I|.
double inverse_hilbert(Span x) {
  constexpr std::size_t n = 4;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      double w = i == k ? -1.0 : 0.0;
      for (std::size_t j = 0; j < n; ++j) w += x[j * n + k] / static_cast<double>(i + j + 1);
      s += std::abs(w);
    }
  }
  return s + 1.0;
}

// Lennard-Jones cluster of six atoms; the offset is the negated minimum energy.
double lennard_jones(Span x) {
  const std::size_t atoms = x.size() / 3;
  double e = 12.7120622568;
  for (std::size_t i = 0; i + 1 < atoms; ++i) {
    for (std::size_t j = i + 1; j < atoms; ++j) {
      double r2 = 0.0;
      for (std::size_t k = 0; k < 3; ++k) r2 += sq(x[3 * i + k] - x[3 * j + k]);
      r2 = std::max(r2, 1e-10);
      const double r6 = r2 * r2 * r2;
      e += 1.0 / (r6 * r6) - 2.0 / r6;
    }
  }
  return e + 1.0;
}

double rastrigin(Span x) {
  double s = 0.0;
  for (double v : x) {
    const double z = v * 5.12 / 100.0;
    s += z * z - 10.0 * std::cos(2.0 * pi * z) + 10.0;
  }
  return s + 1.0;
}

double griewank(Span x) {
  double s = 0.0, p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double z = x[i] * 600.0 / 100.0;
    s += z * z;
    p *= std::cos(z / std::sqrt(static_cast<double>(i + 1)));
  }
  return s / 4000.0 - p + 1.0 + 1.0;
}

double weierstrass(Span x) {
  constexpr double a = 0.5, b = 3.0;
  constexpr int kmax = 20;
  double s = 0.0, base = 0.0;
  for (int k = 0; k <= kmax; ++k) base += std::pow(a, k) * std::cos(pi * std::pow(b, k));
  for (double v : x) {
    const double z = v * 0.5 / 100.0;
    for (int k = 0; k <= kmax; ++k) s += std::pow(a, k) * std::cos(2.0 * pi * std::pow(b, k) * (z + 0.5));
  }
  return s - static_cast<double>(x.size()) * base + 1.0;
}

double modified_schwefel(Span x) {
  const auto n = static_cast<double>(x.size());
  double s = 4.189828872724338e+002 * n;
  for (double v : x) {
    const double z = v * 1000.0 / 100.0 + 4.209687462275036e+002;
    if (z > 500.0) {
      const double r = 500.0 - std::fmod(z, 500.0);
      s -= r * std::sin(std::sqrt(std::abs(r))) - sq(z - 500.0) / (10000.0 * n);
    } else if (z < -500.0) {
      const double r = std::fmod(std::abs(z), 500.0) - 500.0;
      s -= r * std::sin(std::sqrt(std::abs(r))) - sq(z + 500.0) / (10000.0 * n);
    } else {
      s -= z * std::sin(std::sqrt(std::abs(z)));
    }
  }
  return s + 1.0;
}

double expanded_schaffer_f6(Span x) {
  const std::size_t n = x.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r2 = sq(x[i]) + sq(x[(i + 1) % n]);
    s += 0.5 + (sq(std::sin(std::sqrt(r2))) - 0.5) / sq(1.0 + 0.001 * r2);
  }
  return s + 1.0;
}

double happy_cat(Span x) {
  const auto n = static_cast<double>(x.size());
  double r2 = 0.0, sum = 0.0;
  for (double v : x) {
    const double z = v * 5.0 / 100.0 - 1.0;
    r2 += z * z;
    sum += z;
  }
  return std::pow(std::abs(r2 - n), 0.25) + (0.5 * r2 + sum) / n + 0.5 + 1.0;
}

double ackley(Span x) {
  const auto n = static_cast<double>(x.size());
  double s2 = 0.0, sc = 0.0;
  for (double v : x) {
    s2 += v * v;
    sc += std::cos(2.0 * pi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(s2 / n)) - std::exp(sc / n) + 20.0 + std::numbers::e + 1.0;
}

Vec hilbert_inverse_4() {
  return {16,   -120, 240,   -140,  -120, 1200, -2700, 1680,
          240, -2700, 6480, -4200, -140, 1680, -4200, 2800};
}

// Regular octahedron with the nearest-neighbour spacing that minimizes its energy.
Vec lj_octahedron() {
  const double y = 24.75 / (2.0 * (12.0 + 3.0 / 64.0));
  const double a = std::pow(y, -1.0 / 6.0) / std::sqrt(2.0);
  Vec x(18, 0.0);
  for (std::size_t k = 0; k < 3; ++k) {
    x[6 * k + k] = a;
    x[6 * k + 3 + k] = -a;
  }
  return x;
}

}  // namespace

BenchmarkFn cec2019_function(const std::string& id) {
  const auto G = FnGroup::cec2019;
  const auto box = [](std::size_t n, double r) { return SearchSpace::box(n, -r, r); };
  if (id == "CEC01") return {id, "Storn's Chebyshev Polynomial Fitting", G, box(9, 8192), 1.0, std::nullopt, chebyshev};
  if (id == "CEC02") return {id, "Inverse Hilbert Matrix", G, box(16, 16384), 1.0, hilbert_inverse_4(), inverse_hilbert};
  if (id == "CEC03") return {id, "Lennard-Jones Minimum Energy Cluster", G, box(18, 4), 1.0, lj_octahedron(), lennard_jones};
  if (id == "CEC04") return {id, "Rastrigin", G, box(10, 100), 1.0, Vec(10, 0.0), rastrigin};
  if (id == "CEC05") return {id, "Griewank", G, box(10, 100), 1.0, Vec(10, 0.0), griewank};
  if (id == "CEC06") return {id, "Weierstrass", G, box(10, 100), 1.0, Vec(10, 0.0), weierstrass};
  if (id == "CEC07") return {id, "Modified Schwefel", G, box(10, 100), 1.0, Vec(10, 0.0), modified_schwefel};
  if (id == "CEC08") return {id, "Expanded Schaffer F6", G, box(10, 100), 1.0, Vec(10, 0.0), expanded_schaffer_f6};
  if (id == "CEC09") return {id, "Happy Cat", G, box(10, 100), 1.0, Vec(10, 0.0), happy_cat};
  if (id == "CEC10") return {id, "Ackley", G, box(10, 100), 1.0, Vec(10, 0.0), ackley};
  throw std::invalid_argument("unknown CEC-2019 function: " + id);
}

namespace {

Vec parse_row(const std::string& line, std::size_t expected, const char* what) {
  Vec row;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      throw std::runtime_error(std::string("cec transform: bad number in ") + what);
    }
    if (cell.find_first_not_of(" \t\r", used) != std::string::npos)
      throw std::runtime_error(std::string("cec transform: bad number in ") + what);
    row.push_back(v);
  }
  if (row.size() != expected)
    throw std::runtime_error(std::string("cec transform: wrong length for ") + what);
  return row;
}

}  // namespace

CecTransform read_cec_transform(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("cec transform: missing header");
  const Vec header = parse_row(line, 2, "header");
  if (header[0] < 1 || header[0] != std::floor(header[0]))
    throw std::runtime_error("cec transform: dim must be a positive integer");
  const auto dim = static_cast<std::size_t>(header[0]);
  CecTransform t;
  if (!std::getline(in, line)) throw std::runtime_error("cec transform: missing shift row");
  t.shift = parse_row(line, dim, "shift row");
  for (std::size_t i = 0; i < dim; ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("cec transform: missing rotation row");
    t.rotation.push_back(parse_row(line, dim, "rotation row"));
  }
  return t;
}

CecTransform read_cec_transform_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cec transform: cannot open " + path);
  return read_cec_transform(in);
}

BenchmarkFn with_transform(BenchmarkFn fn, const CecTransform& transform) {
  const std::size_t d = fn.dim();
  if (transform.shift.size() != d || transform.rotation.size() != d)
    throw std::invalid_argument(fn.id + ": transform dimension mismatch");
  for (const auto& row : transform.rotation)
    if (row.size() != d) throw std::invalid_argument(fn.id + ": rotation row length mismatch");

  const bool optimum_at_origin =
      fn.optimum && std::all_of(fn.optimum->begin(), fn.optimum->end(), [](double v) { return v == 0.0; });
  fn.optimum.reset();
  if (optimum_at_origin && fn.space.contains(transform.shift)) fn.optimum = transform.shift;

  fn.formula = [inner = std::move(fn.formula), t = transform](Span x) {
    const std::size_t n = x.size();
    Vec z(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) z[i] += t.rotation[i][j] * (x[j] - t.shift[j]);
    return inner(z);
  };
  return fn;
}

}  // namespace dfa
