#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// library arithmetic; inputs are read straight from the serialized layout.

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "cayley/hermitian.hpp"

namespace oracle {

using cd = std::complex<double>;
using Quat = std::array<double, 4>;

/// Hamilton product with i^2 = j^2 = k^2 = ijk = -1.
inline Quat hamilton(const Quat& p, const Quat& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

inline Quat qconj(const Quat& q) { return {q[0], -q[1], -q[2], -q[3]}; }

/// Octonions as quaternion pairs, (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
inline std::array<double, 8> octonion(const std::array<double, 8>& x, const std::array<double, 8>& y) {
  const Quat a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
  const Quat c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  const Quat ac = hamilton(a, c), db = hamilton(qconj(d), b);
  const Quat da = hamilton(d, a), bc = hamilton(b, qconj(c));
  return {ac[0] - db[0], ac[1] - db[1], ac[2] - db[2], ac[3] - db[3],
          da[0] + bc[0], da[1] + bc[1], da[2] + bc[2], da[3] + bc[3]};
}

/// Complex symmetric 3x3 matrix of a level-0 complexified coefficient vector.
inline Eigen::Matrix3cd symmetric_matrix(const cayley::ComplexHermitian& z) {
  const auto& v = z.coeffs();
  Eigen::Matrix3cd m;
  m << v[0], v[5], v[4], v[5], v[1], v[3], v[4], v[3], v[2];
  return m;
}

/// 3x3 complex matrix of a level-1 Hermitian coefficient vector.
inline Eigen::Matrix3cd complex_matrix(const cayley::Hermitian& x) {
  const auto& v = x.coeffs();
  const cd x1(v[3], v[4]), x2(v[5], v[6]), x3(v[7], v[8]);
  Eigen::Matrix3cd m;
  m << v[0], x3, std::conj(x2),
       std::conj(x3), v[1], x1,
       x2, std::conj(x1), v[2];
  return m;
}

/// q = a + bi + cj + dk as [[a+bi, c+di], [-c+di, a-bi]].
inline Eigen::Matrix2cd quat_block(double a, double b, double c, double d) {
  Eigen::Matrix2cd m;
  m << cd(a, b), cd(c, d), cd(-c, d), cd(a, -b);
  return m;
}

/// 6x6 complex embedding of a level-2 Hermitian coefficient vector.
inline Eigen::MatrixXcd quaternion_embedding(const cayley::Hermitian& x) {
  const auto& v = x.coeffs();
  auto entry = [&](int k, bool conjugate) {
    const int o = 3 + 4 * k;
    const double s = conjugate ? -1.0 : 1.0;
    return quat_block(v[o], s * v[o + 1], s * v[o + 2], s * v[o + 3]);
  };
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(6, 6);
  for (int i = 0; i < 3; ++i) m.block<2, 2>(2 * i, 2 * i) = quat_block(v[i], 0, 0, 0);
  m.block<2, 2>(0, 2) = entry(2, false);
  m.block<2, 2>(2, 0) = entry(2, true);
  m.block<2, 2>(2, 4) = entry(0, false);
  m.block<2, 2>(4, 2) = entry(0, true);
  m.block<2, 2>(4, 0) = entry(1, false);
  m.block<2, 2>(0, 4) = entry(1, true);
  return m;
}

/// Taylor series of exp, adequate for |A| <= 2.
inline Eigen::MatrixXd exp_series(const Eigen::MatrixXd& a) {
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  Eigen::MatrixXd sum = term;
  for (int k = 1; k < 60; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

}  // namespace oracle
