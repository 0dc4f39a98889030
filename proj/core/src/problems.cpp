#include "dragonfly/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace dfa {

double onemax_zeros(std::span<const std::uint8_t> bits) {
  double zeros = 0.0;
  for (auto b : bits) zeros += b == 0 ? 1.0 : 0.0;
  return zeros;
}

MultiProblem schaffer_problem() {
  return {"schaffer", SearchSpace::box(1, -1000.0, 1000.0), [](std::span<const double> x) {
            return ObjectiveVector{x[0] * x[0], (x[0] - 2.0) * (x[0] - 2.0)};
          }};
}

MultiProblem zdt1_problem(std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("zdt1: dim must be at least 2");
  return {"zdt1", SearchSpace::box(dim, 0.0, 1.0), [](std::span<const double> x) {
            double tail = 0.0;
            for (std::size_t i = 1; i < x.size(); ++i) tail += x[i];
            const double g = 1.0 + 9.0 * tail / static_cast<double>(x.size() - 1);
            return ObjectiveVector{x[0], g * (1.0 - std::sqrt(x[0] / g))};
          }};
}

MultiProblem find_multi_problem(const std::string& id, std::size_t dim) {
  if (id == "schaffer") return schaffer_problem();
  if (id == "zdt1") return zdt1_problem(dim);
  throw std::invalid_argument("unknown multi-objective problem: " + id);
}

std::vector<std::string> binary_problem_ids() { return {"onemax"}; }

std::vector<std::string> multi_problem_ids() { return {"schaffer", "zdt1"}; }

}  // namespace dfa
