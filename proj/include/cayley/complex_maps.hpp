#pragma once

// Complexified planes P_n(C) inside H_n(C): sampling, the maps sigma_n and
// phi_n onto Sigma_n and the sphere S^{d(n)}, the projection of the section at
// infinity onto the dual plane, differential rank, and the secant identity.

#include <cstdint>

#include "cayley/hermitian.hpp"
#include "cayley/planes.hpp"
#include "cayley/random.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

/// Rank-one element of H_n(C), scaled to <Z, Z> = 1; a projective class.
struct ComplexPlanePoint {
  ComplexHermitian matrix;

  int level() const { return matrix.level(); }
};

/// Rescales z to unit Hermitian norm. Throws UsageError for z = 0.
ComplexPlanePoint normalize_point(const ComplexHermitian& z);

enum class Reach { Affine, NearInfinity };

/// Bound on the imaginary part of complexified derivation flows.
inline constexpr double kImaginaryFlowBound = 1.5;
/// Bound on |W| for the structure flows exp(L_W) used to approach infinity.
inline constexpr double kStructureFlowBound = 2.0;

/// Affine: a complexified automorphism applied to Diag(1,0,0). NearInfinity:
/// additionally a structure flow exp(L_W), tr W = 0, |W| <= 2.
ComplexPlanePoint random_complex_point(int n, Rng& rng, Reach reach = Reach::Affine);

/// Veronese image of (1, i, 0)/sqrt(2): Diag(1/2, -1/2, 0) with i/2 in the
/// (1,2) slot. Trace zero, rank one.
ComplexPlanePoint infinity_base_point(int n);

/// A complexified automorphism applied to the base null point.
ComplexPlanePoint infinity_point(int n, Rng& rng);

/// S(Z) = Z o tau(Z); tau-fixed up to rounding.
ComplexHermitian conjugate_square(const ComplexHermitian& z);

/// S(Z)/tr S(Z) - I/3, real part. Throws NumericalError on a non-positive
/// trace or when the result is below the nonvanishing guard.
Hermitian sigma_map(const ComplexPlanePoint& z);

/// I/3 + rho sigma/|sigma|.
Hermitian phi_map(const ComplexPlanePoint& z);

/// S(Z)/tr S(Z) for a point at infinity (|tr Z| < trace_tol).
Hermitian twistor_project(const ComplexPlanePoint& z, double trace_tol = 1e-8);

/// Projective distance between Z and tau(Z); zero exactly on real points.
double realness_distance(const ComplexPlanePoint& z);

/// |tr Z| for the unit-normalized representative.
double infinity_distance(const ComplexPlanePoint& z);

struct FiberRankInfo {
  int frame_dim = 0;
  std::vector<double> singular_values;
};

/// Finite-difference step and relative rank threshold for the phi Jacobian.
inline constexpr double kJacobianStep = 1e-5;
inline constexpr double kJacobianThreshold = 1e-6;

/// Rank of d(phi_n) at z along the tangent frame {D Z, i D Z}.
int fiber_rank(const ComplexPlanePoint& z, FiberRankInfo* info = nullptr);

/// max |det(alpha Z1 + beta Z2)| over `samples` probes on the circle pair.
double chordal_residual(const ComplexPlanePoint& z1, const ComplexPlanePoint& z2, int samples);

/// Same probes against the rank-three control alpha Z1 + beta I.
double chordal_control(const ComplexPlanePoint& z1, int samples);

}  // namespace cayley
