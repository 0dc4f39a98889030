#include "dragonfly/neighborhood.hpp"

#include <cmath>
#include <stdexcept>

namespace dfa {

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    sum += d * d;
  }
  return std::sqrt(sum);
}

NeighborSet neighborhood(std::span<const Dragonfly> swarm, std::size_t focal, double radius) {
  if (focal >= swarm.size()) throw std::out_of_range("neighborhood: focal index out of range");
  if (!(radius >= 0.0)) throw std::invalid_argument("neighborhood: radius must be >= 0");
  std::vector<std::size_t> members;
  const auto& x = swarm[focal].position;
  for (std::size_t j = 0; j < swarm.size(); ++j) {
    if (j == focal) continue;
    if (euclidean_distance(x, swarm[j].position) <= radius) members.push_back(j);
  }
  return NeighborSet(swarm, std::move(members));
}

}  // namespace dfa
