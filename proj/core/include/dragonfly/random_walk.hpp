#pragma once

#include <cstddef>

#include "dragonfly/rng.hpp"
#include "dragonfly/types.hpp"

namespace dfa {

struct LevyParams {
  double beta = 1.5;   // stability exponent, 1 < beta <= 2
  double scale = 0.01;

  void validate() const;
};

/// Mantegna's sigma_u for exponent beta.
double mantegna_sigma(double beta);

/// Heavy-tailed step: scale * u / |v|^(1/beta), u ~ N(0, sigma_u^2), v ~ N(0, 1),
/// drawn independently per dimension.
Vec levy_step(std::size_t dim, const LevyParams& params, RngStream& rng);

/// I.i.d. N(0, sigma^2) components. Throws on sigma <= 0.
Vec brownian_step(std::size_t dim, double sigma, RngStream& rng);

}  // namespace dfa
