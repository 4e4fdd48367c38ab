#include "cayley/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace cayley {

namespace {

struct Depressed {
  double shift;
  double p;
  double q;
};

Depressed depress(double a, double b, double c) {
  const double m = a / 3.0;
  return {m, b - a * a / 3.0, -2.0 * a * a * a / 27.0 + a * b / 3.0 - c};
}

double cubic_value(double t, double a, double b, double c) { return ((t - a) * t + b) * t - c; }

// Roots closer than this (relative to the spectral scale) are recomputed from
// the Peirce operator L_X, where they are well conditioned.
constexpr double kDegenerateGap = 1e-4;

std::array<double, 3> peirce_extremes(const Hermitian& x) {
  const Eigen::VectorXd w = trace_form_weights(x.level()).cwiseSqrt();
  const Eigen::MatrixXd l = left_mult_matrix(x);
  Eigen::MatrixXd sym = w.asDiagonal() * l * w.cwiseInverse().asDiagonal();
  sym = 0.5 * (sym + sym.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  return {lo, trace(x) - lo - hi, hi};
}

}  // namespace

std::array<double, 3> solve_characteristic_cubic(double a, double b, double c) {
  const auto [m, p, q] = depress(a, b, c);
  std::array<double, 3> r{};
  if (p >= 0.0) {
    // Only reachable through rounding for real spectra: a triple root.
    const double mu = std::cbrt(-q);
    r = {m + mu, m + mu, m + mu};
  } else {
    const double amp = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * amp), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) r[k] = m + amp * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
  }
  std::sort(r.begin(), r.end());
  return r;
}

double characteristic_discriminant(const Hermitian& x) {
  const auto inv = invariants(x);
  const auto d = depress(inv.tr, inv.s, inv.det);
  return -(4.0 * d.p * d.p * d.p + 27.0 * d.q * d.q);
}

Spectrum eigenvalues(const Hermitian& x) {
  const auto inv = invariants(x);
  Spectrum out;
  out.eigenvalues = solve_characteristic_cubic(inv.tr, inv.s, inv.det);
  const auto& e = out.eigenvalues;
  const double scale = std::max({1.0, std::abs(e[0]), std::abs(e[2])});
  if (std::min(e[1] - e[0], e[2] - e[1]) < kDegenerateGap * scale) {
    out.eigenvalues = peirce_extremes(x);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  }
  for (double t : out.eigenvalues) {
    out.residual = std::max(out.residual, std::abs(cubic_value(t, inv.tr, inv.s, inv.det)));
  }
  return out;
}

double spectrum_distance(const Spectrum& s, std::array<double, 3> expected) {
  std::sort(expected.begin(), expected.end());
  double d = 0.0;
  for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(s[i] - expected[static_cast<std::size_t>(i)]));
  return d;
}

}  // namespace cayley
