#include <cmath>

#include "cayley/operators.hpp"
#include "cayley/real_maps.hpp"
#include "doctest.h"

using namespace cayley;

namespace {

RealOperator embedded_flow(int n, Rng& rng) {
  const auto& basis = embedded_derivation_basis(n);
  Eigen::VectorXd c = rng.normal_vector(basis.dim());
  return exp_op(basis.combine<double>(c / c.norm()));
}

}  // namespace

TEST_CASE("projection drops the top imaginary half") {
  Rng rng(51);
  for (int n = 1; n <= 3; ++n) {
    const Hermitian x(n, rng.normal_vector(hermitian_dim(n)));
    const Hermitian p = project_pi(x);
    CHECK(p.level() == n - 1);
    CHECK(p.coeffs().head(3) == x.coeffs().head(3));
    const int h = algebra_dim(n - 1);
    for (int k = 0; k < 3; ++k) CHECK(p.off(k).coeffs() == x.off(k).coeffs().head(h));
    CHECK(project_pi(change_level(p, n)).coeffs() == p.coeffs());
    CHECK(std::abs(trace(project_pi(random_plane_point(n, rng).matrix)) - 1.0) < 1e-14);
  }
  CHECK_THROWS_AS(project_pi(Hermitian::Identity(0)), UsageError);
}

TEST_CASE("f lands on the sphere and fixes the lower plane") {
  Rng rng(52);
  for (int s = 0; s < 600; ++s) {
    const int n = 1 + s % 3;
    const Hermitian fx = f_map(random_plane_point(n, rng));
    CHECK(std::abs(norm(fx - center(n - 1)) - kRadius) < 1e-12);
    CHECK(std::abs(trace(fx) - 1.0) < 1e-12);
    const Hermitian y = random_plane_point(n - 1, rng).matrix;
    CHECK(norm(f_map(change_level(y, n)) - y) < 1e-12);
  }
}

TEST_CASE("f is invariant under the centralizer and equivariant for the embedded group") {
  Rng rng(53);
  for (int s = 0; s < 150; ++s) {
    const int n = 1 + s % 3;
    const Hermitian x = random_plane_point(n, rng).matrix;
    const Hermitian fx = f_map(x);
    const RealOperator gamma = gamma_element(n, random_gamma_params(n, rng));
    CHECK(norm(f_map(gamma(x)) - fx) < 1e-10);
    const RealOperator g = embedded_flow(n, rng);
    CHECK(norm(f_map(g(x)) - project_pi(g(change_level(fx, n)))) < 1e-10);
  }
  // At n = 1 conjugation is the only symmetry hidden by f.
  const Hermitian x = random_plane_point(1, 54).matrix;
  Hermitian xbar = x;
  for (int k = 0; k < 3; ++k) xbar.set_off(k, conj(x.off(k)));
  CHECK(norm(f_map(x) - f_map(xbar)) < 1e-14);
}

TEST_CASE("f at I/3 and at level 0") {
  CHECK_THROWS_AS(f_map(center(2)), NumericalError);
  CHECK_THROWS_AS(f_map(Hermitian::Diagonal(0, 1, 0, 0)), UsageError);
}

TEST_CASE("region labels for representatives") {
  CHECK(region_classify(Hermitian::Diagonal(2, 1, 0, 0)).region == Region::PlaneP);
  CHECK(region_classify(Hermitian::Diagonal(2, 0, 0.5, 0.5)).region == Region::SigmaSmooth);
  CHECK(region_classify(Hermitian::Diagonal(2, -1, 0, 2)).region == Region::ZOuter);
  CHECK(region_classify(Hermitian::Diagonal(2, 0.2, 0.3, 0.5)).region == Region::PosDefInterior);
  CHECK(region_classify(Hermitian::Diagonal(2, -0.5, 0.5, 1)).region == Region::IndefiniteOpen);
  CHECK(region_classify(Hermitian::Diagonal(2, -0.5, -0.5, 2)).region == Region::IndefiniteOpen);
  CHECK(std::string(region_name(Region::ZOuter)) == "ZOuter");

  Rng rng(55);
  for (int s = 0; s < 200; ++s) {
    const int n = s % 4;
    const RealOperator g = random_group_element(n, rng);
    CHECK(region_classify(g(Hermitian::Diagonal(n, 0, 0.25, 0.75))).region == Region::SigmaSmooth);
    CHECK(region_classify(g(Hermitian::Diagonal(n, -1, 0, 2))).region == Region::ZOuter);
    CHECK(region_classify(g(Hermitian::Diagonal(n, 1, 0, 0))).region == Region::PlaneP);
  }

  const RegionLabel edge = region_classify(Hermitian::Diagonal(1, 5e-8, 0.5, 0.5 - 5e-8));
  CHECK(edge.ambiguous);
  CHECK_FALSE(region_classify(Hermitian::Diagonal(1, 0.2, 0.3, 0.5)).ambiguous);
  CHECK_THROWS_AS(region_classify(Hermitian::Diagonal(1, 1, 1, 0)), UsageError);
}

TEST_CASE("Sigma membership and radial points") {
  const SigmaMembership on = sigma_membership(Hermitian::Diagonal(1, 0, 0.25, 0.75));
  CHECK(on.on_sigma);
  CHECK(std::abs(norm(on.radial_point - center(1)) - kRadius) < 1e-14);
  CHECK_FALSE(sigma_membership(Hermitian::Diagonal(1, 0.2, 0.3, 0.5)).on_sigma);
  CHECK_FALSE(sigma_membership(Hermitian::Diagonal(1, -1, 0, 2)).on_sigma);
  CHECK(sigma_membership(Hermitian::Diagonal(1, 1, 0, 0)).on_sigma);
  // A plane point is its own radial point.
  CHECK(norm(sigma_membership(Hermitian::Diagonal(1, 1, 0, 0)).radial_point - Hermitian::Diagonal(1, 1, 0, 0)) <
        1e-15);
  CHECK_THROWS_AS(sigma_membership(center(1)), UsageError);
  CHECK_THROWS_AS(sigma_membership(Hermitian::Diagonal(1, 2, 0, 0)), UsageError);
}

TEST_CASE("projected plane points lie on the lower Sigma") {
  Rng rng(56);
  for (int s = 0; s < 600; ++s) {
    const int n = 1 + s % 3;
    CHECK(projection_sigma_residual(random_plane_point(n, rng).matrix) < 1e-12);
  }
  CHECK(projection_sigma_residual(Hermitian::Diagonal(1, 0.2, 0.3, 0.5)) > 1e-3);
}

TEST_CASE("Gamma orbit distance") {
  Rng rng(57);
  for (int n = 1; n <= 3; ++n) {
    for (int s = 0; s < 5; ++s) {
      const Hermitian x = random_plane_point(n, rng).matrix;
      const Hermitian y = gamma_element(n, random_gamma_params(n, rng))(x);
      CHECK(gamma_orbit_distance(x, y) < 1e-7);
      CHECK(gamma_orbit_distance(x, x) < 1e-12);
    }
    const Hermitian a = random_plane_point(n, rng).matrix;
    const Hermitian b = random_plane_point(n, rng).matrix;
    CHECK(gamma_orbit_distance(a, b) <= norm(a - b) + 1e-12);
  }
  CHECK_THROWS_AS(gamma_orbit_distance(Hermitian::Diagonal(0, 1, 0, 0), Hermitian::Diagonal(0, 1, 0, 0)),
                  UsageError);
}

TEST_CASE("preimages of f") {
  Rng rng(58);
  for (int n = 1; n <= 3; ++n) {
    for (int s = 0; s < 3; ++s) {
      const Hermitian x = random_plane_point(n, rng).matrix;
      const Hermitian start = random_plane_point(n, rng).matrix;
      const auto y = solve_f_preimage(f_map(x), start);
      REQUIRE(y.has_value());
      CHECK(norm(f_map(*y) - f_map(x)) < 1e-9);
      CHECK(plane_residuals(*y).max() < 1e-9);
      CHECK(gamma_orbit_distance(x, *y) < 1e-6);
    }
  }
  CHECK_THROWS_AS(solve_f_preimage(Hermitian::Identity(2), Hermitian::Identity(2)), UsageError);
}
