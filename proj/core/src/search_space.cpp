#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "dragonfly/types.hpp"

namespace dfa {

SearchSpace::SearchSpace(Vec lower, Vec upper)
    : SearchSpace(std::move(lower), std::move(upper), SpaceMode::continuous) {}

SearchSpace::SearchSpace(Vec lower, Vec upper, SpaceMode mode)
    : lower_(std::move(lower)), upper_(std::move(upper)), mode_(mode) {
  if (lower_.empty()) throw std::invalid_argument("SearchSpace: dimension must be positive");
  if (lower_.size() != upper_.size())
    throw std::invalid_argument("SearchSpace: lower/upper length mismatch");
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (!std::isfinite(lower_[j]) || !std::isfinite(upper_[j]) || !(lower_[j] < upper_[j]))
      throw std::invalid_argument(
          fmt::format("SearchSpace: need finite lower < upper in dimension {}", j));
  }
}

SearchSpace SearchSpace::box(std::size_t dim, double lower, double upper) {
  return SearchSpace(Vec(dim, lower), Vec(dim, upper));
}

SearchSpace SearchSpace::binary(std::size_t dim) {
  return SearchSpace(Vec(dim, 0.0), Vec(dim, 1.0), SpaceMode::binary);
}

bool SearchSpace::contains(std::span<const double> x) const noexcept {
  if (x.size() != dim()) return false;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!(x[j] >= lower_[j] && x[j] <= upper_[j])) return false;
  return true;
}

void SearchSpace::clamp(std::span<double> x) const noexcept {
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = std::clamp(x[j], lower_[j], upper_[j]);
}

void SearchSpace::clamp_step(std::span<double> step) const noexcept {
  for (std::size_t j = 0; j < step.size(); ++j) {
    const double limit = width(j);
    step[j] = std::clamp(step[j], -limit, limit);
  }
}

double evaluate_checked(const Objective& objective, std::span<const double> x) {
  const double value = objective(x);
  if (!std::isfinite(value))
    throw NonFiniteObjective(fmt::format("objective returned non-finite value {}", value),
                             Vec(x.begin(), x.end()));
  return value;
}

}  // namespace dfa
