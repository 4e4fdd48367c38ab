#include <array>
#include <complex>
#include <numbers>

#include "cayley/planes.hpp"
#include "cayley/real_maps.hpp"
#include "cayley/spectrum.hpp"
#include "doctest.h"

using namespace cayley;
using cd = std::complex<double>;

TEST_CASE("plane points from coordinates") {
  const PlanePoint e = plane_point(Element::real(2, 1), Element(2), Element(2));
  CHECK(e.matrix.coeffs() == Hermitian::Diagonal(2, 1, 0, 0).coeffs());

  const double r = 1.0 / std::sqrt(2.0);
  const PlanePoint h = plane_point(Element::real(0, r), Element::real(0, r), Element(0));
  Hermitian expected = Hermitian::Diagonal(0, 0.5, 0.5, 0.0);
  expected.set_off(2, Element::real(0, 0.5));
  CHECK(norm(h.matrix - expected) < 1e-15);

  Rng rng(41);
  for (int s = 0; s < 500; ++s) {
    const int n = s % 4;
    const int d = algebra_dim(n);
    const PlanePoint x = plane_point(Element(n, rng.normal_vector(d)), Element(n, rng.normal_vector(d)),
                                     Element(n, rng.normal_vector(d)));
    const PlaneResiduals res = plane_residuals(x.matrix);
    CHECK(res.idempotent < 1e-12);
    CHECK(res.max() < 1e-12);
  }
}

TEST_CASE("octonionic chart falls back to x1 when x3 vanishes") {
  Rng rng(42);
  const PlanePoint x = plane_point(Element(3, rng.normal_vector(8)), Element(3, rng.normal_vector(8)), Element(3));
  CHECK(plane_residuals(x.matrix).max() < 1e-12);
  CHECK(x.matrix.diag(2) == 0.0);
}

TEST_CASE("sampled plane points") {
  Rng rng(43);
  for (int s = 0; s < 2000; ++s) {
    const int n = s % 4;
    const PlanePoint x = random_plane_point(n, rng);
    const PlaneResiduals r = plane_residuals(x.matrix);
    CHECK(r.max() < 1e-9);
    CHECK(std::abs(norm(x.matrix - center(n)) - kRadius) < 1e-12);
  }
  CHECK(random_plane_point(3, 9).matrix.coeffs() == random_plane_point(3, 9).matrix.coeffs());
  CHECK(norm(random_plane_point(3, 9).matrix - random_plane_point(3, 10).matrix) > 1e-3);
}

TEST_CASE("Hopf map") {
  for (int n = 0; n <= 3; ++n) {
    const HopfPoint pole = hopf(Element::real(n, 1), Element(n));
    CHECK(pole.height == 1.0);
    CHECK(norm(pole.point) == 0.0);
  }
  Rng rng(44);
  for (int s = 0; s < 1000; ++s) {
    const int n = s % 4;
    const int d = algebra_dim(n);
    const HopfPoint h = hopf(Element(n, rng.normal_vector(d)), Element(n, rng.normal_vector(d)));
    CHECK(std::abs(h.norm() - 1.0) < 1e-12);
    const Element m(n, rng.normal_vector(d));
    const Element x1(n, rng.unit_vector(d)), x2(n, rng.unit_vector(d));
    const HopfPoint a = hopf(x1, mul(m, x1)), b = hopf(x2, mul(m, x2));
    CHECK(std::abs(a.height - b.height) < 1e-12);
    CHECK(norm(a.point - b.point) < 1e-12);
  }
  CHECK_THROWS_AS(hopf(Element(2), Element(2)), UsageError);
}

TEST_CASE("polar duality") {
  const PlanePoint e{Hermitian::Diagonal(1, 1, 0, 0)};
  CHECK(polar_dual(e).coeffs() == Hermitian::Diagonal(1, 0, 0.5, 0.5).coeffs());
  Rng rng(45);
  for (int s = 0; s < 500; ++s) {
    const Hermitian d = polar_dual(random_plane_point(s % 4, rng));
    CHECK(spectrum_distance(eigenvalues(d), {0.0, 0.5, 0.5}) < 1e-9);
    CHECK(std::abs(det(d)) < 1e-12);
    CHECK(sigma_membership(d).on_sigma);
  }
}

TEST_CASE("rotated complex subplanes") {
  Rng rng(46);
  const std::array<cd, 3> real_coords = {cd(1, 0), cd(2, 0), cd(-1, 0)};
  for (int n = 1; n <= 3; ++n) {
    const Element e = Element::unit(n, n == 3 ? 4 : n);
    const PlanePoint a = subplane_point(e, real_coords);
    const PlanePoint b = plane_point(Element::real(n, 1), Element::real(n, 2), Element::real(n, -1));
    CHECK(norm(a.matrix - b.matrix) < 1e-15);
  }
  // Entries of a CP^2(e) point lie in span{1, e}, which meets C only in R.
  for (int s = 0; s < 300; ++s) {
    const std::array<cd, 3> z = {cd(rng.normal(), rng.normal()), cd(rng.normal(), rng.normal()),
                                 cd(rng.normal(), rng.normal())};
    for (int n = 2; n <= 3; ++n) {
      const PlanePoint xe = subplane_point(Element::unit(n, n == 3 ? 4 : 2), z);
      const PlanePoint xi = subplane_point(Element::unit(n, 1), z);
      CHECK(plane_residuals(xe.matrix).max() < 1e-12);
      const double off_real = norm(xe.matrix - change_level(change_level(xe.matrix, 0), n));
      const double off_c = norm(xe.matrix - change_level(change_level(xe.matrix, 1), n));
      const double standard = norm(xi.matrix - change_level(change_level(xi.matrix, 0), n));
      CHECK(std::abs(off_real - off_c) < 1e-12);
      CHECK(std::abs(off_real - standard) < 1e-12);
      CHECK(off_real > 0.0);
    }
  }
  Element not_imaginary = Element::unit(2, 2);
  not_imaginary[0] = 0.5;
  CHECK_THROWS_AS(subplane_point(not_imaginary, real_coords), UsageError);
  CHECK_THROWS_AS(subplane_point(Element::unit(2, 2) * 2.0, real_coords), UsageError);
  CHECK_THROWS_AS(plane_point(Element(1), Element(1), Element(1)), UsageError);
}
