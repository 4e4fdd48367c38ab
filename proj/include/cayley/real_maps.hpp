#pragma once

// Projections H_n -> H_{n-1}, the sphere maps f_n built from them, the
// eigenvalue-sign classification of the trace-one slice and the geometry of
// the positive region and its boundary Sigma_n.

#include <optional>
#include <string>

#include "cayley/planes.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

/// Default half-width of the "eigenvalue is zero" band.
inline constexpr double kEigenBand = 1e-8;

/// Guard for the normalization in f_n; the projected point is never at I/3.
inline constexpr double kLemmaTolerance = 1e-6;

/// Entrywise orthogonal projection A_n -> A_{n-1}; requires n >= 1.
Hermitian project_pi(const Hermitian& x);

/// pi_n(X) - I/3, the shifted projection.
Hermitian shifted_projection(const Hermitian& x);

/// I/3 + rho * pi~/|pi~| on the sphere S^{d(n-1)}.
Hermitian f_map(const Hermitian& x);
inline Hermitian f_map(const PlanePoint& x) { return f_map(x.matrix); }

enum class Region { PosDefInterior, IndefiniteOpen, SigmaSmooth, ZOuter, PlaneP };

const char* region_name(Region r);

struct RegionLabel {
  Region region = Region::PosDefInterior;
  Spectrum spectrum;
  /// Some eigenvalue sits within a factor 10 of the band edge.
  bool ambiguous = false;
};

/// Classify a trace-one matrix by eigenvalue signs. Throws UsageError if the
/// trace is off by more than trace_tol.
RegionLabel region_classify(const Hermitian& x, double band = kEigenBand, double trace_tol = 1e-8);

struct SigmaMembership {
  bool on_sigma = false;
  /// I/3 + rho (X - I/3) / |X - I/3|.
  Hermitian radial_point;
};

SigmaMembership sigma_membership(const Hermitian& x, double band = kEigenBand, double trace_tol = 1e-8);

/// max(|det pi_n(X)|, -lambda_min(pi_n(X))); zero iff pi_n(X) lies on Sigma_{n-1}.
double projection_sigma_residual(const Hermitian& x);

/// Distance from y to the Gamma_{n-1}-orbit of x (both plane points at level n):
/// sign flip for n = 1, angle grid plus refinement for n = 2, centralizer grid
/// plus local descent for n = 3.
double gamma_orbit_distance(const Hermitian& x, const Hermitian& y);

/// Starting from `start`, move along G_n flows until f(Y) = target. Returns the
/// solution when |f(Y) - target| < tol.
std::optional<Hermitian> solve_f_preimage(const Hermitian& target, const Hermitian& start, double tol = 1e-10,
                                          int max_iterations = 60);

}  // namespace cayley
