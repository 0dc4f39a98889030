#include "dragonfly/random_walk.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dfa {

void LevyParams::validate() const {
  if (!(beta > 1.0 && beta <= 2.0)) throw std::invalid_argument("LevyParams: need 1 < beta <= 2");
  if (!(scale > 0.0)) throw std::invalid_argument("LevyParams: scale must be positive");
}

double mantegna_sigma(double beta) {
  const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
  const double den = std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
  return std::pow(num / den, 1.0 / beta);
}

Vec levy_step(std::size_t dim, const LevyParams& params, RngStream& rng) {
  params.validate();
  const double sigma = mantegna_sigma(params.beta);
  Vec out(dim);
  for (auto& v : out) {
    const double u = rng.normal() * sigma;
    double w = std::abs(rng.normal());
    // v == 0 happens with probability ~0 but would yield inf
    if (w < 1e-300) w = 1e-300;
    v = params.scale * u / std::pow(w, 1.0 / params.beta);
  }
  return out;
}

Vec brownian_step(std::size_t dim, double sigma, RngStream& rng) {
  if (!(sigma > 0.0)) throw std::invalid_argument("brownian_step: sigma must be positive");
  Vec out(dim);
  for (auto& v : out) v = sigma * rng.normal();
  return out;
}

}  // namespace dfa
