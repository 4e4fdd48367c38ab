#include "cayley/complex_maps.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/SVD>

#include "cayley/operators.hpp"

namespace cayley {

namespace {

using cd = std::complex<double>;

ComplexHermitian traceless_random(int n, Rng& rng) {
  const int d = hermitian_dim(n);
  ComplexHermitian w(n);
  for (int k = 0; k < d; ++k) w.coeffs()[k] = cd(rng.normal(), rng.normal());
  const cd t = trace(w) / 3.0;
  for (int i = 0; i < 3; ++i) w.diag(i) -= t;
  return w;
}

Hermitian normalized_conjugate_square(const ComplexHermitian& z) {
  const ComplexHermitian s = conjugate_square(z);
  const double t = trace(s).real();
  if (!(t > 0.0)) throw NumericalError("tr Z o tau(Z) is not positive");
  return real_part(s) / t;
}

Hermitian phi_unnormalized(const ComplexHermitian& z) { return phi_map(normalize_point(z)); }

}  // namespace

ComplexPlanePoint normalize_point(const ComplexHermitian& z) {
  const double len = herm_norm(z);
  if (!(len > 0.0)) throw UsageError("cannot normalize the zero matrix");
  return {z / cd(len, 0.0)};
}

ComplexPlanePoint random_complex_point(int n, Rng& rng, Reach reach) {
  const ComplexOperator g = random_complex_group_element(n, rng, kImaginaryFlowBound);
  ComplexHermitian z = g(ComplexHermitian::Diagonal(n, 1.0, 0.0, 0.0));
  if (reach == Reach::NearInfinity) {
    ComplexHermitian w = traceless_random(n, rng);
    w *= cd(rng.uniform() * kStructureFlowBound / herm_norm(w), 0.0);
    z = exp_op(left_mult(w))(z);
  }
  return normalize_point(z);
}

ComplexPlanePoint infinity_base_point(int n) {
  ComplexHermitian z = ComplexHermitian::Diagonal(n, 0.5, -0.5, 0.0);
  z.set_off(2, ComplexElement::real(n, cd(0.0, 0.5)));
  return normalize_point(z);
}

ComplexPlanePoint infinity_point(int n, Rng& rng) {
  const ComplexOperator g = random_complex_group_element(n, rng, kImaginaryFlowBound);
  return normalize_point(g(infinity_base_point(n).matrix));
}

ComplexHermitian conjugate_square(const ComplexHermitian& z) { return jordan_mul(z, tau(z)); }

Hermitian sigma_map(const ComplexPlanePoint& z) {
  const Hermitian sigma = normalized_conjugate_square(z.matrix) - center(z.level());
  if (norm(sigma) < 1e-6) throw NumericalError("sigma image reached the origin");
  return sigma;
}

Hermitian phi_map(const ComplexPlanePoint& z) {
  const Hermitian sigma = sigma_map(z);
  return center(z.level()) + (kRadius / norm(sigma)) * sigma;
}

Hermitian twistor_project(const ComplexPlanePoint& z, double trace_tol) {
  if (std::abs(trace(z.matrix)) > trace_tol) throw UsageError("twistor projection needs a point at infinity");
  return normalized_conjugate_square(z.matrix);
}

double realness_distance(const ComplexPlanePoint& z) {
  const double overlap = std::abs(herm_inner(z.matrix, tau(z.matrix)));
  return std::sqrt(std::max(0.0, 1.0 - overlap * overlap));
}

double infinity_distance(const ComplexPlanePoint& z) { return std::abs(trace(z.matrix)); }

int fiber_rank(const ComplexPlanePoint& z, FiberRankInfo* info) {
  const int n = z.level();
  const int d = hermitian_dim(n);
  const auto& der = derivation_basis(n);
  Eigen::MatrixXd frame(2 * d, 2 * der.dim());
  for (int k = 0; k < der.dim(); ++k) {
    const ComplexHermitian v = complexify(der.ops[static_cast<std::size_t>(k)])(z.matrix);
    frame.col(2 * k) << v.coeffs().real(), v.coeffs().imag();
    frame.col(2 * k + 1) << -v.coeffs().imag(), v.coeffs().real();
  }
  const Eigen::MatrixXd tangent = orthonormal_span(frame, kRankThreshold);

  const Eigen::VectorXd w = trace_form_weights(n).cwiseSqrt();
  Eigen::MatrixXd jac(d, tangent.cols());
  for (int c = 0; c < tangent.cols(); ++c) {
    ComplexHermitian u(n);
    u.coeffs().real() = tangent.col(c).head(d);
    u.coeffs().imag() = tangent.col(c).tail(d);
    const ComplexHermitian step = u * cd(kJacobianStep, 0.0);
    jac.col(c) = (phi_unnormalized(z.matrix + step) - phi_unnormalized(z.matrix - step)).coeffs().cwiseProduct(w) /
                 (2.0 * kJacobianStep);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const Eigen::VectorXd& s = svd.singularValues();
  const double thr = kJacobianThreshold * s[0];
  int rank = 0;
  for (int k = 0; k < s.size(); ++k) {
    if (s[k] > thr / 10.0 && s[k] < thr * 10.0) throw RankAmbiguityError("phi Jacobian rank is ambiguous");
    if (s[k] > thr) ++rank;
  }
  if (info) {
    info->frame_dim = static_cast<int>(tangent.cols());
    info->singular_values.assign(s.data(), s.data() + s.size());
  }
  return rank;
}

namespace {

template <typename Combine>
double max_det_over_probes(int samples, Combine&& combine) {
  if (samples < 1) throw UsageError("chordal probes must be >= 1");
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    const double psi = 2.0 * std::numbers::pi * std::fmod(k * golden, 1.0);
    const cd alpha = std::polar(1.0, theta);
    const cd beta = std::polar(1.0, psi);
    worst = std::max(worst, std::abs(det(combine(alpha, beta))));
  }
  return worst;
}

}  // namespace

double chordal_residual(const ComplexPlanePoint& z1, const ComplexPlanePoint& z2, int samples) {
  z1.matrix.check_same(z2.matrix);
  return max_det_over_probes(samples, [&](cd a, cd b) { return a * z1.matrix + b * z2.matrix; });
}

double chordal_control(const ComplexPlanePoint& z1, int samples) {
  const ComplexHermitian id = ComplexHermitian::Identity(z1.level());
  return max_det_over_probes(samples, [&](cd a, cd b) { return a * z1.matrix + b * id; });
}

}  // namespace cayley
