#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfa {

using Vec = std::vector<double>;

/// Scalar objective to be minimized.
using Objective = std::function<double(std::span<const double>)>;

enum class SpaceMode { continuous, binary };

/// Box-bounded search space.
class SearchSpace {
 public:
  SearchSpace(Vec lower, Vec upper);

  static SearchSpace box(std::size_t dim, double lower, double upper);
  /// {0,1}^dim; bounds are forced to [0, 1].
  static SearchSpace binary(std::size_t dim);

  std::size_t dim() const noexcept { return lower_.size(); }
  SpaceMode mode() const noexcept { return mode_; }
  std::span<const double> lower() const noexcept { return lower_; }
  std::span<const double> upper() const noexcept { return upper_; }
  double lower(std::size_t j) const { return lower_[j]; }
  double upper(std::size_t j) const { return upper_[j]; }
  double width(std::size_t j) const { return upper_[j] - lower_[j]; }

  bool contains(std::span<const double> x) const noexcept;
  void clamp(std::span<double> x) const noexcept;
  /// Clamp |step[j]| to the range width of dimension j.
  void clamp_step(std::span<double> step) const noexcept;

 private:
  SearchSpace(Vec lower, Vec upper, SpaceMode mode);

  Vec lower_;
  Vec upper_;
  SpaceMode mode_ = SpaceMode::continuous;
};

/// One search agent: position X and step vector dX.
struct Dragonfly {
  Vec position;
  Vec step;
};

/// Population plus food (best so far) and enemy (worst of the current population).
struct SwarmState {
  std::vector<Dragonfly> agents;
  Vec food;
  double food_value = std::numeric_limits<double>::infinity();
  Vec enemy;
  double enemy_value = -std::numeric_limits<double>::infinity();
  int t = 0;
  int T = 0;
};

/// Outcome of a single optimization run.
struct RunRecord {
  double best_value = 0.0;
  Vec best_position;
  /// Best-so-far value after each iteration; non-increasing.
  Vec curve;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
};

/// Raised when an objective returns NaN or infinity at an in-bounds point.
class NonFiniteObjective : public std::runtime_error {
 public:
  NonFiniteObjective(const std::string& what, Vec at)
      : std::runtime_error(what), point(std::move(at)) {}
  Vec point;
};

/// Evaluate and reject non-finite results.
double evaluate_checked(const Objective& objective, std::span<const double> x);

}  // namespace dfa
