#pragma once

#include <cstdint>

#include "dragonfly/types.hpp"

namespace dfa {

/// Grey Wolf Optimizer. The control scalar a falls linearly from 2 to 0; each
/// wolf moves to the mean of the alpha, beta and delta guided points.
RunRecord gwo_optimize(const Objective& objective, const SearchSpace& space, int pop, int iters,
                       std::uint64_t seed);

}  // namespace dfa
