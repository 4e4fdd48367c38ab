#include "cayley/planes.hpp"

#include <algorithm>

#include "cayley/operators.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

namespace {

// Minimum coordinate norm (after normalization) for an octonionic chart.
constexpr double kChartTolerance = 1e-8;

}  // namespace

double PlaneResiduals::max() const { return std::max({trace, norm2, det, idempotent, sharp, spectrum, radius}); }

PlaneResiduals plane_residuals(const Hermitian& x) {
  PlaneResiduals r;
  const auto inv = invariants(x);
  r.trace = std::abs(inv.tr - 1.0);
  r.norm2 = std::abs(inv.norm2 - 1.0);
  r.det = std::abs(inv.det);
  r.idempotent = norm(jordan_mul(x, x) - x);
  r.sharp = norm(sharp(x));
  r.spectrum = spectrum_distance(eigenvalues(x), {0.0, 0.0, 1.0});
  r.radius = std::abs(trace_form(x - center(x.level()), x - center(x.level())) - kRadiusSquared);
  return r;
}

PlanePoint plane_point(const Element& x1, const Element& x2, const Element& x3) {
  x1.check_same(x2);
  x1.check_same(x3);
  const int level = x1.level();
  const double total = std::sqrt(squared_norm(x1) + squared_norm(x2) + squared_norm(x3));
  if (!(total > 0.0)) throw UsageError("plane_point needs a nonzero coordinate vector");
  std::array<Element, 3> x = {x1 * (1.0 / total), x2 * (1.0 / total), x3 * (1.0 / total)};
  if (level == 3) {
    int chart = -1;
    for (int c : {2, 0, 1}) {
      if (norm(x[c]) > kChartTolerance) {
        chart = c;
        break;
      }
    }
    if (chart < 0) throw NumericalError("no octonionic chart coordinate is invertible");
    const Element mu = conj(x[chart]) * (1.0 / norm(x[chart]));
    for (auto& xi : x) xi = mul(xi, mu);
    x[chart] = Element::real(level, norm(x[chart]));
  }
  Hermitian out(level);
  for (int i = 0; i < 3; ++i) out.diag(i) = squared_norm(x[i]);
  out.set_off(0, mul(x[1], conj(x[2])));
  out.set_off(1, mul(x[2], conj(x[0])));
  out.set_off(2, mul(x[0], conj(x[1])));
  return {out};
}

PlanePoint random_plane_point(int n, Rng& rng) {
  return {random_group_element(n, rng)(Hermitian::Diagonal(n, 1.0, 0.0, 0.0))};
}

PlanePoint random_plane_point(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_plane_point(n, rng);
}

HopfPoint hopf(const Element& a, const Element& b) {
  a.check_same(b);
  const double total = squared_norm(a) + squared_norm(b);
  if (!(total > 0.0)) throw UsageError("hopf needs a nonzero input");
  const double s = 1.0 / std::sqrt(total);
  const Element an = a * s;
  const Element bn = b * s;
  return {squared_norm(an) - squared_norm(bn), 2.0 * mul(bn, conj(an))};
}

Hermitian polar_dual(const PlanePoint& x) { return (Hermitian::Identity(x.level()) - x.matrix) * 0.5; }

PlanePoint subplane_point(const Element& e, const std::array<std::complex<double>, 3>& z) {
  if (std::abs(e.real_part()) > 1e-12) throw UsageError("subplane unit must be imaginary");
  if (std::abs(norm(e) - 1.0) > 1e-12) throw UsageError("subplane unit must have norm one");
  std::array<Element, 3> x;
  for (int k = 0; k < 3; ++k) x[k] = Element::real(e.level(), z[k].real()) + e * z[k].imag();
  return plane_point(x[0], x[1], x[2]);
}

}  // namespace cayley
