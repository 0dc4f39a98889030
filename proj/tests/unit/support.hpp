#pragma once

#include <vector>

#include "dragonfly/types.hpp"

namespace dfa::test {

inline std::vector<Dragonfly> agents_at(std::vector<Vec> positions) {
  std::vector<Dragonfly> out;
  for (auto& p : positions) out.push_back({p, Vec(p.size(), 0.0)});
  return out;
}

inline double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

inline bool non_increasing(const Vec& curve) {
  for (std::size_t i = 1; i < curve.size(); ++i)
    if (curve[i] > curve[i - 1]) return false;
  return true;
}

}  // namespace dfa::test
