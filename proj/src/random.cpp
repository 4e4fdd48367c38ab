#include "cayley/random.hpp"

namespace cayley {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
    : engine_(mix64(mix64(mix64(seed) ^ stream) ^ index)) {}

Eigen::VectorXd Rng::normal_vector(int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = normal();
  return v;
}

Eigen::VectorXd Rng::unit_vector(int n) {
  Eigen::VectorXd v = normal_vector(n);
  while (v.norm() < 1e-12) v = normal_vector(n);
  return v.normalized();
}

}  // namespace cayley
