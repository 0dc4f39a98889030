#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dragonfly/types.hpp"

namespace dfa {

enum class FnGroup { unimodal, multimodal, fixed_dimension, cec2019 };

const char* to_string(FnGroup group);

struct BenchmarkFn {
  std::string id;
  std::string name;
  FnGroup group = FnGroup::unimodal;
  SearchSpace space;
  std::optional<double> known_min;
  /// A global minimizer, when one is known in closed form or to full precision.
  std::optional<Vec> optimum;
  /// Raw formula; no argument checks.
  std::function<double(std::span<const double>)> formula;

  std::size_t dim() const noexcept { return space.dim(); }
  /// Rejects a wrong length or an out-of-bounds point.
  double evaluate(std::span<const double> x) const;
  /// Unchecked evaluation as an Objective (optimizers keep points in bounds).
  Objective objective() const { return formula; }
};

/// TF1..TF23. dim applies to TF1..TF13 only; the rest have fixed dimension.
BenchmarkFn classical_function(const std::string& id, std::size_t dim = 30);

/// CEC01..CEC10 in their unshifted, unrotated form, offset so the minimum is 1.
BenchmarkFn cec2019_function(const std::string& id);

/// "classical" (23 functions) or "cec2019" (10 functions).
std::vector<BenchmarkFn> suite(const std::string& name, std::size_t dim = 30);

/// Any id from either suite.
BenchmarkFn find_function(const std::string& id, std::size_t dim = 30);

/// Shift o and rotation M applied as z = M (x - o) before the function body.
struct CecTransform {
  Vec shift;
  std::vector<Vec> rotation;
};

/// Text format: a "dim,k" line, one shift row of dim values, then dim rotation
/// rows of dim values, comma separated. k is carried but unused.
CecTransform read_cec_transform(std::istream& in);
CecTransform read_cec_transform_file(const std::string& path);

/// The function composed with a loaded transform. The optimum moves to o
/// (dropped if it no longer lies in bounds) and the minimum value is kept.
BenchmarkFn with_transform(BenchmarkFn fn, const CecTransform& transform);

}  // namespace dfa
