#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dragonfly/types.hpp"

namespace dfa {

/// Agents within a Euclidean radius of a focal agent (the focal agent is excluded).
class NeighborSet {
 public:
  NeighborSet() = default;
  NeighborSet(std::span<const Dragonfly> swarm, std::vector<std::size_t> indices)
      : swarm_(swarm), indices_(std::move(indices)) {}

  std::size_t count() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

  std::span<const double> position(std::size_t k) const { return swarm_[indices_[k]].position; }
  std::span<const double> step(std::size_t k) const { return swarm_[indices_[k]].step; }

 private:
  std::span<const Dragonfly> swarm_;
  std::vector<std::size_t> indices_;
};

double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// All j != focal with ||X_focal - X_j|| <= radius.
NeighborSet neighborhood(std::span<const Dragonfly> swarm, std::size_t focal, double radius);

}  // namespace dfa
