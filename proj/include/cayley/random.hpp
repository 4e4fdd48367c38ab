#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace cayley {

/// Deterministic generator keyed by (seed, stream, index). Every sample of a
/// sweep gets its own key, so results do not depend on evaluation order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t index = 0);

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int sign() { return uniform() < 0.5 ? -1 : 1; }

  Eigen::VectorXd normal_vector(int n);
  /// Uniform direction on the unit sphere S^{n-1}.
  Eigen::VectorXd unit_vector(int n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

}  // namespace cayley
