#include <cmath>
#include <complex>
#include <numbers>

#include "cayley/complex_maps.hpp"
#include "cayley/real_maps.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cayley;
using cd = std::complex<double>;

namespace {

ComplexPlanePoint veronese0(const Eigen::Vector3cd& v) {
  ComplexHermitian z(0);
  z.coeffs() << v[0] * v[0], v[1] * v[1], v[2] * v[2], v[1] * v[2], v[2] * v[0], v[0] * v[1];
  return normalize_point(z);
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("sampled complex points are rank one and unit") {
  Rng rng(61);
  for (int s = 0; s < 400; ++s) {
    const int n = s % 4;
    const Reach reach = s % 2 ? Reach::NearInfinity : Reach::Affine;
    const ComplexPlanePoint z = random_complex_point(n, rng, reach);
    CHECK(std::abs(herm_norm(z.matrix) - 1.0) < 1e-12);
    CHECK(herm_norm(sharp(z.matrix)) < 1e-9);
  }
  CHECK_THROWS_AS(normalize_point(ComplexHermitian(2)), UsageError);
}

TEST_CASE("sigma and phi against the complex symmetric model") {
  Rng rng(62);
  for (int s = 0; s < 200; ++s) {
    Eigen::Vector3cd v;
    for (int i = 0; i < 3; ++i) v[i] = cd(rng.normal(), rng.normal());
    const ComplexPlanePoint z = veronese0(v);
    const Eigen::Matrix3cd m = oracle::symmetric_matrix(z.matrix);
    const Eigen::Matrix3cd sq = (m * m.conjugate() + m.conjugate() * m) / 2.0;
    const Eigen::Matrix3d expected = sq.real() / sq.trace().real() - Eigen::Matrix3d::Identity() / 3.0;
    const Hermitian sigma = sigma_map(z);
    Eigen::Matrix3d got;
    got << sigma.diag(0), sigma.off(2)[0], sigma.off(1)[0], sigma.off(2)[0], sigma.diag(1), sigma.off(0)[0],
        sigma.off(1)[0], sigma.off(0)[0], sigma.diag(2);
    CHECK(max_abs(got - expected) < 1e-12);
    CHECK(std::abs(norm(phi_map(z) - center(0)) - kRadius) < 1e-12);
  }

  const ComplexPlanePoint null = veronese0(Eigen::Vector3cd(1, cd(0, 1), 0));
  CHECK(norm(sigma_map(null) - Hermitian::Diagonal(0, 1.0 / 6, 1.0 / 6, -1.0 / 3)) < 1e-15);
  CHECK(norm(phi_map(null) - Hermitian::Diagonal(0, 2.0 / 3, 2.0 / 3, -1.0 / 3)) < 1e-15);
  CHECK(norm(sigma_map(infinity_base_point(0)) - sigma_map(null)) < 1e-15);
}

TEST_CASE("sigma restricted to real points") {
  Rng rng(63);
  for (int s = 0; s < 400; ++s) {
    const int n = s % 4;
    const Hermitian x = random_plane_point(n, rng).matrix;
    const ComplexPlanePoint z{complexify(x)};
    CHECK(norm(sigma_map(z) - (x - center(n))) < 1e-12);
    CHECK(norm(phi_map(z) - x) < 1e-12);
    CHECK(realness_distance(z) < 1e-7);
  }
}

TEST_CASE("sigma lands on Sigma and ignores the phase") {
  Rng rng(64);
  for (int s = 0; s < 400; ++s) {
    const int n = s % 4;
    const ComplexPlanePoint z = random_complex_point(n, rng, s % 2 ? Reach::NearInfinity : Reach::Affine);
    const Hermitian p = center(n) + sigma_map(z);
    const Spectrum sp = eigenvalues(p);
    CHECK(std::abs(sp[0]) < 1e-8);
    CHECK(sp[1] >= -1e-8);
    CHECK(std::abs(conjugate_square(z.matrix).coeffs().imag().cwiseAbs().maxCoeff()) < 1e-12);
    const ComplexPlanePoint rotated{z.matrix * std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi))};
    CHECK(norm(sigma_map(rotated) - sigma_map(z)) < 1e-12);
    CHECK(realness_distance(z) >= 0.0);
  }
}

TEST_CASE("the section at infinity maps onto the dual plane") {
  for (int n = 0; n <= 3; ++n) {
    const ComplexPlanePoint base = infinity_base_point(n);
    CHECK(infinity_distance(base) < 1e-15);
    CHECK(norm(twistor_project(base) - Hermitian::Diagonal(n, 0.5, 0.5, 0.0)) < 1e-15);
  }
  Rng rng(65);
  for (int s = 0; s < 200; ++s) {
    const int n = s % 4;
    const ComplexPlanePoint z = infinity_point(n, rng);
    CHECK(infinity_distance(z) < 1e-12);
    CHECK(herm_norm(sharp(z.matrix)) < 1e-9);
    const Hermitian t = twistor_project(z);
    CHECK(spectrum_distance(eigenvalues(t), {0.0, 0.5, 0.5}) < 1e-8);
    // No real point is null, so points at infinity stay away from the reals.
    CHECK(realness_distance(z) > 0.1);
  }
  CHECK_THROWS_AS(twistor_project(ComplexPlanePoint{complexify(Hermitian::Diagonal(1, 1, 0, 0))}), UsageError);
}

TEST_CASE("phi has full rank at generic points") {
  Rng rng(66);
  for (int n = 0; n <= 3; ++n) {
    for (int s = 0; s < 3; ++s) {
      const ComplexPlanePoint z = random_complex_point(n, rng);
      FiberRankInfo info;
      CHECK(fiber_rank(z, &info) == 3 * algebra_dim(n) + 1);
      CHECK(static_cast<int>(info.singular_values.size()) <= info.frame_dim);
      CHECK(info.frame_dim >= 3 * algebra_dim(n) + 1);
    }
  }
}

TEST_CASE("secant identity") {
  const ComplexPlanePoint a{complexify(Hermitian::Diagonal(2, 1, 0, 0))};
  const ComplexPlanePoint b{complexify(Hermitian::Diagonal(2, 0, 1, 0))};
  CHECK(chordal_residual(a, b, 32) < 1e-15);
  Rng rng(67);
  for (int s = 0; s < 40; ++s) {
    const int n = s % 4;
    const ComplexPlanePoint z1 = random_complex_point(n, rng);
    const ComplexPlanePoint z2 = random_complex_point(n, rng);
    CHECK(chordal_residual(z1, z2, 16) < 1e-9);
    CHECK(chordal_control(z1, 16) > 0.01);
  }
  CHECK_THROWS_AS(chordal_residual(a, b, 0), UsageError);
}
