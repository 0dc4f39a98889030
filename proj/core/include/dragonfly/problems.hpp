#pragma once

#include <string>
#include <vector>

#include "dragonfly/binary.hpp"
#include "dragonfly/multiobjective.hpp"

namespace dfa {

/// Number of zero bits; minimum 0 at the all-ones string.
double onemax_zeros(std::span<const std::uint8_t> bits);

struct MultiProblem {
  std::string id;
  SearchSpace space;
  MultiObjective objectives;
};

/// f1 = x^2, f2 = (x - 2)^2 on [-1000, 1000]. Pareto set x in [0, 2].
MultiProblem schaffer_problem();
/// ZDT1 on [0, 1]^dim. Pareto front f2 = 1 - sqrt(f1).
MultiProblem zdt1_problem(std::size_t dim = 30);

/// "schaffer" or "zdt1".
MultiProblem find_multi_problem(const std::string& id, std::size_t dim = 30);

/// Ids of the binary and multi-objective problems known to the harness.
std::vector<std::string> binary_problem_ids();
std::vector<std::string> multi_problem_ids();

}  // namespace dfa
