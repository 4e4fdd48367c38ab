#pragma once

// Points of the projective planes P_n as rank-one trace-one idempotents in H_n,
// Hopf maps, polar duality and the rotated copies CP^2(e) inside P_n.

#include <array>
#include <complex>
#include <cstdint>

#include "cayley/hermitian.hpp"
#include "cayley/random.hpp"

namespace cayley {

/// Squared radius of the sphere through P_n around I/3 inside tr = 1.
inline constexpr double kRadiusSquared = 2.0 / 3.0;
inline const double kRadius = std::sqrt(kRadiusSquared);

inline Hermitian center(int level) { return Hermitian::Identity(level) / 3.0; }

struct PlanePoint {
  Hermitian matrix;

  int level() const { return matrix.level(); }
};

/// Residuals of the defining identities of a plane point.
struct PlaneResiduals {
  double trace = 0.0;
  double norm2 = 0.0;
  double det = 0.0;
  double idempotent = 0.0;
  double sharp = 0.0;
  double spectrum = 0.0;
  double radius = 0.0;

  double max() const;
};

PlaneResiduals plane_residuals(const Hermitian& x);

/// X = (x_i conj(x_j)) after normalizing sum |x_i|^2 = 1. At level 3 the
/// representative is first rotated so the chart coordinate (x3, then x1, then
/// x2) is real and nonnegative.
PlanePoint plane_point(const Element& x1, const Element& x2, const Element& x3);

/// A random automorphism applied to Diag(1,0,0).
PlanePoint random_plane_point(int n, Rng& rng);
PlanePoint random_plane_point(int n, std::uint64_t seed);

/// Point of S^{2^n} inside R x A_n.
struct HopfPoint {
  double height = 0.0;
  Element point;

  int level() const { return point.level(); }
  double norm() const { return std::sqrt(height * height + squared_norm(point)); }
};

/// (|a|^2 - |b|^2, 2 b conj(a)) after normalizing |a|^2 + |b|^2 = 1.
HopfPoint hopf(const Element& a, const Element& b);

/// (I - X) / 2, a point of the dual plane with spectrum (0, 1/2, 1/2).
Hermitian polar_dual(const PlanePoint& x);

/// Plane point with coordinates Re z_k + e Im z_k for a unit imaginary e.
PlanePoint subplane_point(const Element& e, const std::array<std::complex<double>, 3>& z);

}  // namespace cayley
