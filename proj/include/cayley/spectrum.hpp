#pragma once

#include <array>

#include "cayley/hermitian.hpp"

namespace cayley {

/// Eigenvalues of a real Hermitian matrix, ascending, plus the largest
/// |characteristic cubic| over the returned roots.
struct Spectrum {
  std::array<double, 3> eigenvalues{};
  double residual = 0.0;

  double operator[](int i) const { return eigenvalues[static_cast<std::size_t>(i)]; }
};

/// Discriminants below this are treated as rounding noise and clamped to zero.
inline constexpr double kDiscriminantClamp = -1e-10;

/// Real roots of t^3 - a t^2 + b t - c by the trigonometric method, ascending.
std::array<double, 3> solve_characteristic_cubic(double a, double b, double c);

/// -(4p^3 + 27q^2) for the depressed characteristic cubic of X.
double characteristic_discriminant(const Hermitian& x);

Spectrum eigenvalues(const Hermitian& x);

/// max_i |lambda_i - expected_i| with both sorted ascending.
double spectrum_distance(const Spectrum& s, std::array<double, 3> expected);

}  // namespace cayley
