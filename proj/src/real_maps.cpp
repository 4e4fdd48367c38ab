#include "cayley/real_maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/SVD>

#include "cayley/operators.hpp"

namespace cayley {

Hermitian project_pi(const Hermitian& x) {
  if (x.level() < 1) throw UsageError("project_pi needs level >= 1");
  return change_level(x, x.level() - 1);
}

Hermitian shifted_projection(const Hermitian& x) {
  const Hermitian p = project_pi(x);
  return p - center(p.level());
}

Hermitian f_map(const Hermitian& x) {
  if (x.level() < 1) throw UsageError("f_map needs level 1..3");
  const Hermitian shifted = shifted_projection(x);
  const double len = norm(shifted);
  if (len < kLemmaTolerance) throw NumericalError("projection of a plane point reached I/3");
  return center(shifted.level()) + (kRadius / len) * shifted;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::PosDefInterior: return "PosDefInterior";
    case Region::IndefiniteOpen: return "IndefiniteOpen";
    case Region::SigmaSmooth: return "SigmaSmooth";
    case Region::ZOuter: return "ZOuter";
    case Region::PlaneP: return "PlaneP";
  }
  return "unknown";
}

namespace {

void check_trace_one(const Hermitian& x, double trace_tol) {
  if (std::abs(trace(x) - 1.0) > trace_tol) throw UsageError("matrix is not in the trace-one slice");
}

}  // namespace

RegionLabel region_classify(const Hermitian& x, double band, double trace_tol) {
  check_trace_one(x, trace_tol);
  RegionLabel label;
  label.spectrum = eigenvalues(x);
  const double l1 = label.spectrum[0];
  const double l2 = label.spectrum[1];
  auto zero = [band](double v) { return std::abs(v) <= band; };
  for (double v : label.spectrum.eigenvalues) {
    const double a = std::abs(v);
    if (a >= band / 10.0 && a <= band * 10.0) label.ambiguous = true;
  }
  if (zero(l1) && zero(l2)) {
    label.region = Region::PlaneP;
  } else if (zero(l1)) {
    label.region = Region::SigmaSmooth;
  } else if (l1 > band) {
    label.region = Region::PosDefInterior;
  } else if (zero(l2)) {
    label.region = Region::ZOuter;
  } else {
    // lambda1 < 0 and lambda2 != 0; two negative eigenvalues are the same
    // projective orbit as X -> -X.
    label.region = Region::IndefiniteOpen;
  }
  return label;
}

SigmaMembership sigma_membership(const Hermitian& x, double band, double trace_tol) {
  check_trace_one(x, trace_tol);
  const Hermitian c = center(x.level());
  const double len = norm(x - c);
  if (len < 1e-12) throw UsageError("radial projection is undefined at I/3");
  const Spectrum s = eigenvalues(x);
  SigmaMembership m;
  m.on_sigma = std::abs(s[0]) <= band && s[1] >= -band;
  m.radial_point = c + (kRadius / len) * (x - c);
  return m;
}

double projection_sigma_residual(const Hermitian& x) {
  const Hermitian p = project_pi(x);
  const double d = std::abs(det(p));
  const double neg = std::max(0.0, -eigenvalues(p)[0]);
  return std::max(d, neg);
}

namespace {

double golden_minimize(auto&& f, double lo, double hi, int iterations) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return std::min(fc, fd);
}

double orbit_distance_n3(const Hermitian& x, const Hermitian& y) {
  auto residual = [&](const Eigen::Vector3d& v) { return (gamma_from_vector(v)(x) - y).coeffs(); };
  const Eigen::VectorXd w = trace_form_weights(3).cwiseSqrt();
  auto dist = [&](const Eigen::Vector3d& v) { return residual(v).cwiseProduct(w).norm(); };

  constexpr int kCells = 12;
  const double step = 2.0 * std::numbers::pi / kCells;
  Eigen::Vector3d best = Eigen::Vector3d::Zero();
  double best_d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kCells; ++i) {
    for (int j = 0; j < kCells; ++j) {
      for (int k = 0; k < kCells; ++k) {
        const Eigen::Vector3d v(-std::numbers::pi + (i + 0.5) * step, -std::numbers::pi + (j + 0.5) * step,
                                -std::numbers::pi + (k + 0.5) * step);
        const double d = dist(v);
        if (d < best_d) {
          best_d = d;
          best = v;
        }
      }
    }
  }

  // Levenberg-Marquardt descent from the best cell.
  double lambda = 1e-3;
  for (int iter = 0; iter < 100 && best_d > 1e-14; ++iter) {
    const Eigen::VectorXd r = residual(best).cwiseProduct(w);
    Eigen::MatrixXd jac(r.size(), 3);
    constexpr double h = 1e-6;
    for (int c = 0; c < 3; ++c) {
      Eigen::Vector3d dv = Eigen::Vector3d::Zero();
      dv[c] = h;
      jac.col(c) = (residual(best + dv) - residual(best - dv)).cwiseProduct(w) / (2.0 * h);
    }
    Eigen::Matrix3d normal = jac.transpose() * jac;
    normal.diagonal() *= 1.0 + lambda;
    const Eigen::Vector3d delta = normal.ldlt().solve(-jac.transpose() * r);
    const double trial = dist(best + delta);
    if (trial < best_d) {
      best += delta;
      best_d = trial;
      lambda = std::max(lambda / 10.0, 1e-12);
    } else {
      lambda *= 10.0;
      if (lambda > 1e8) break;
    }
  }
  return best_d;
}

}  // namespace

double gamma_orbit_distance(const Hermitian& x, const Hermitian& y) {
  x.check_same(y);
  const int n = x.level();
  if (n < 1) throw UsageError("gamma orbits exist for levels 1..3");
  if (n == 1) {
    GammaParams flip;
    flip.sign = -1;
    return std::min(norm(y - x), norm(y - gamma_element(1, flip)(x)));
  }
  if (n == 2) {
    auto dist = [&](double angle) {
      GammaParams p;
      p.angle = angle;
      return norm(gamma_element(2, p)(x) - y);
    };
    // Period pi in the angle.
    constexpr int kGrid = 64;
    const double step = std::numbers::pi / kGrid;
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i) {
      const double d = dist(i * step);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    return std::min(best_d, golden_minimize(dist, (best - 1) * step, (best + 1) * step, 80));
  }
  return orbit_distance_n3(x, y);
}

std::optional<Hermitian> solve_f_preimage(const Hermitian& target, const Hermitian& start, double tol,
                                          int max_iterations) {
  const int n = start.level();
  if (target.level() != n - 1) throw UsageError("preimage target must live one level down");
  const auto& der = derivation_basis(n);
  const Eigen::VectorXd w = trace_form_weights(n - 1).cwiseSqrt();
  Hermitian y = start;
  for (int iter = 0; iter < max_iterations; ++iter) {
    const Eigen::VectorXd r = (f_map(y) - target).coeffs().cwiseProduct(w);
    if (r.norm() < tol) return y;
    Eigen::MatrixXd jac(r.size(), der.dim());
    constexpr double h = 1e-6;
    for (int k = 0; k < der.dim(); ++k) {
      const Hermitian t = der.ops[static_cast<std::size_t>(k)](y);
      jac.col(k) = (f_map(y + h * t) - f_map(y - h * t)).coeffs().cwiseProduct(w) / (2.0 * h);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-6);
    Eigen::VectorXd c = svd.solve(-r);
    if (c.norm() > 1.0) c /= c.norm();
    y = exp_op(der.combine<double>(c))(y);
  }
  if ((f_map(y) - target).coeffs().cwiseProduct(w).norm() < tol) return y;
  return std::nullopt;
}

}  // namespace cayley
