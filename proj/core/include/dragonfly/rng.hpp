#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace dfa {

/// Deterministic random stream owned by a single optimization run.
///
/// Uniform draws are built directly from the 53 high bits of a 64-bit
/// Mersenne Twister so the [0,1) range is exact. Identical seeds replay
/// identical sequences for a given build.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform draw in [0, 1).
  double uniform() noexcept;
  /// Uniform draw in [lo, hi).
  double uniform(double lo, double hi) noexcept;
  /// Standard normal draw.
  double normal();
  /// Uniform integer in [0, n); n must be positive.
  std::size_t below(std::size_t n);

  /// Derived stream for independent sub-tasks (e.g. one per run).
  static RngStream for_run(std::uint64_t base_seed, std::uint64_t run_index) {
    return RngStream(base_seed + run_index);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// SplitMix64-based derivation of independent seeds from (seed, a, b).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) noexcept;

}  // namespace dfa
