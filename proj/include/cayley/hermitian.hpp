#pragma once

// 3x3 Hermitian matrices over A_n and their complexification, with the Jordan
// product, the trace form, the Freudenthal adjoint and the cubic invariants.
//
// Layout (fixed, also the serialization order):
//   X = [[xi1, x3, conj(x2)], [conj(x3), xi2, x1], [x2, conj(x1), xi3]]
//   coeffs = [xi1, xi2, xi3, x1..., x2..., x3...], length 3 * 2^n + 3.
// A complex Hermitian matrix Z = re + i im stores complex coefficients, so the
// real structure tau is coefficient-wise complex conjugation.

#include <array>
#include <complex>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "cayley/division_algebra.hpp"

namespace cayley {

constexpr int hermitian_dim(int level) { return 3 * algebra_dim(level) + 3; }

inline constexpr int kMaxHermitianDim = hermitian_dim(kMaxLevel);

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

template <typename Scalar>
class HermitianMatrix {
 public:
  using Elem = AlgebraElement<Scalar>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, 0, kMaxHermitianDim, 1>;

  explicit HermitianMatrix(int level = 0)
      : level_(check_level(level)), coeffs_(Vector::Zero(hermitian_dim(level))) {}

  template <typename Derived>
  HermitianMatrix(int level, const Eigen::MatrixBase<Derived>& coeffs) : HermitianMatrix(level) {
    if (coeffs.size() != hermitian_dim(level)) throw UsageError("coefficient count must be 3*2^level+3");
    coeffs_ = coeffs;
  }

  static HermitianMatrix Identity(int level) { return Diagonal(level, Scalar(1), Scalar(1), Scalar(1)); }

  static HermitianMatrix Diagonal(int level, Scalar a, Scalar b, Scalar c) {
    HermitianMatrix m(level);
    m.coeffs_[0] = a;
    m.coeffs_[1] = b;
    m.coeffs_[2] = c;
    return m;
  }

  /// Matrix with coefficient vector e_k in the serialized basis.
  static HermitianMatrix BasisUnit(int level, int k) {
    HermitianMatrix m(level);
    m.coeffs_[k] = Scalar(1);
    return m;
  }

  int level() const { return level_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  int unit_dim() const { return algebra_dim(level_); }

  const Vector& coeffs() const { return coeffs_; }
  Vector& coeffs() { return coeffs_; }

  Scalar diag(int i) const { return coeffs_[i]; }
  Scalar& diag(int i) { return coeffs_[i]; }

  /// Off-diagonal entry x_{k+1} (k = 0, 1, 2).
  Elem off(int k) const { return Elem(level_, coeffs_.segment(3 + k * unit_dim(), unit_dim())); }
  void set_off(int k, const Elem& x) {
    if (x.level() != level_) throw UsageError("off-diagonal level mismatch");
    coeffs_.segment(3 + k * unit_dim(), unit_dim()) = x.coeffs();
  }

  /// Full matrix entry (i, j), zero-based.
  Elem entry(int i, int j) const {
    if (i == j) return Elem::real(level_, coeffs_[i]);
    switch (3 * i + j) {
      case 1: return off(2);
      case 3: return conj(off(2));
      case 5: return off(0);
      case 7: return conj(off(0));
      case 6: return off(1);
      case 2: return conj(off(1));
    }
    throw UsageError("matrix index out of range");
  }

  HermitianMatrix& operator+=(const HermitianMatrix& o) {
    check_same(o);
    coeffs_ += o.coeffs_;
    return *this;
  }
  HermitianMatrix& operator-=(const HermitianMatrix& o) {
    check_same(o);
    coeffs_ -= o.coeffs_;
    return *this;
  }
  HermitianMatrix& operator*=(Scalar s) {
    coeffs_ *= s;
    return *this;
  }
  HermitianMatrix& operator/=(Scalar s) {
    coeffs_ /= s;
    return *this;
  }

  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator-(HermitianMatrix a) {
    a.coeffs_ = -a.coeffs_;
    return a;
  }
  friend HermitianMatrix operator*(HermitianMatrix a, Scalar s) { return a *= s; }
  friend HermitianMatrix operator*(Scalar s, HermitianMatrix a) { return a *= s; }
  friend HermitianMatrix operator/(HermitianMatrix a, Scalar s) { return a /= s; }

  void check_same(const HermitianMatrix& o) const {
    if (o.level_ != level_) throw UsageError("hermitian level mismatch");
  }

 private:
  // Runs before coeffs_ is sized, so the fixed-capacity buffer never overflows.
  static int check_level(int level) {
    if (level < 0 || level > kMaxLevel) throw UsageError("hermitian level must be in 0..3");
    return level;
  }

  int level_;
  Vector coeffs_;
};

using Hermitian = HermitianMatrix<double>;
using ComplexHermitian = HermitianMatrix<std::complex<double>>;

/// X o Y = (XY + YX) / 2 with full matrix products over A_n.
template <typename Scalar>
HermitianMatrix<Scalar> jordan_mul(const HermitianMatrix<Scalar>& x, const HermitianMatrix<Scalar>& y) {
  x.check_same(y);
  using Elem = AlgebraElement<Scalar>;
  const int level = x.level();
  std::array<Elem, 9> a, b;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      a[3 * i + j] = x.entry(i, j);
      b[3 * i + j] = y.entry(i, j);
    }
  }
  auto sym = [&](int i, int j) {
    Elem acc(level);
    for (int k = 0; k < 3; ++k) {
      acc += mul(a[3 * i + k], b[3 * k + j]);
      acc += mul(b[3 * i + k], a[3 * k + j]);
    }
    return acc * Scalar(0.5);
  };
  HermitianMatrix<Scalar> r(level);
  for (int i = 0; i < 3; ++i) r.diag(i) = sym(i, i).real_part();
  r.set_off(0, sym(1, 2));
  r.set_off(1, sym(2, 0));
  r.set_off(2, sym(0, 1));
  return r;
}

template <typename Scalar>
Scalar trace(const HermitianMatrix<Scalar>& x) {
  return x.diag(0) + x.diag(1) + x.diag(2);
}

/// Trace-form weights in the serialized coordinates: tr(X o Y) = sum w_k x_k y_k.
inline Eigen::VectorXd trace_form_weights(int level) {
  Eigen::VectorXd w = Eigen::VectorXd::Constant(hermitian_dim(level), 2.0);
  w.head(3).setOnes();
  return w;
}

/// tr(X o Y), bilinear over the coefficient scalar.
template <typename Scalar>
Scalar trace_form(const HermitianMatrix<Scalar>& x, const HermitianMatrix<Scalar>& y) {
  x.check_same(y);
  const auto& a = x.coeffs();
  const auto& b = y.coeffs();
  return (a.head(3).array() * b.head(3).array()).sum() +
         Scalar(2) * (a.tail(a.size() - 3).array() * b.tail(b.size() - 3).array()).sum();
}

/// Trace-form norm of a real matrix.
inline double norm(const Hermitian& x) { return std::sqrt(trace_form(x, x)); }

template <typename Scalar>
struct Invariants {
  Scalar tr;
  Scalar s;
  Scalar det;
  Scalar norm2;
};

/// Freudenthal adjoint X# = X o X - tr(X) X + s(X) I.
template <typename Scalar>
HermitianMatrix<Scalar> sharp(const HermitianMatrix<Scalar>& x) {
  const Scalar t = trace(x);
  const Scalar n2 = trace_form(x, x);
  const Scalar s = (t * t - n2) / Scalar(2);
  HermitianMatrix<Scalar> r = jordan_mul(x, x) - t * x;
  for (int i = 0; i < 3; ++i) r.diag(i) += s;
  return r;
}

/// Cubic norm, defined as tr(X# o X) / 3.
template <typename Scalar>
Scalar det(const HermitianMatrix<Scalar>& x) {
  return trace_form(sharp(x), x) / Scalar(3);
}

template <typename Scalar>
Invariants<Scalar> invariants(const HermitianMatrix<Scalar>& x) {
  Invariants<Scalar> inv;
  inv.tr = trace(x);
  inv.norm2 = trace_form(x, x);
  inv.s = (inv.tr * inv.tr - inv.norm2) / Scalar(2);
  inv.det = det(x);
  return inv;
}

/// Column k is X o E_k for the serialized basis unit E_k.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> left_mult_matrix(const HermitianMatrix<Scalar>& x) {
  const int d = x.dim();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(d, d);
  for (int k = 0; k < d; ++k) m.col(k) = jordan_mul(x, HermitianMatrix<Scalar>::BasisUnit(x.level(), k)).coeffs();
  return m;
}

/// Entrywise projection / inclusion between levels (H_n -> H_m).
template <typename Scalar>
HermitianMatrix<Scalar> change_level(const HermitianMatrix<Scalar>& x, int m) {
  HermitianMatrix<Scalar> r(m);
  r.coeffs().head(3) = x.coeffs().head(3);
  for (int k = 0; k < 3; ++k) r.set_off(k, project_level(x.off(k), m));
  return r;
}

// Complexification -----------------------------------------------------------

inline ComplexHermitian complexify(const Hermitian& x) {
  return ComplexHermitian(x.level(), x.coeffs().cast<std::complex<double>>());
}

inline ComplexHermitian complexify(const Hermitian& re, const Hermitian& im) {
  re.check_same(im);
  ComplexHermitian z(re.level());
  z.coeffs().real() = re.coeffs();
  z.coeffs().imag() = im.coeffs();
  return z;
}

/// Real structure: re + i im -> re - i im.
inline ComplexHermitian tau(ComplexHermitian z) {
  z.coeffs() = z.coeffs().conjugate();
  return z;
}

inline Hermitian real_part(const ComplexHermitian& z) { return Hermitian(z.level(), z.coeffs().real()); }
inline Hermitian imag_part(const ComplexHermitian& z) { return Hermitian(z.level(), z.coeffs().imag()); }

/// Hermitian extension of the trace form: linear in z, conjugate-linear in w.
inline std::complex<double> herm_inner(const ComplexHermitian& z, const ComplexHermitian& w) {
  return trace_form(z, tau(w));
}

/// sqrt(<Z, Z>).
inline double herm_norm(const ComplexHermitian& z) { return std::sqrt(herm_inner(z, z).real()); }

// Serialization ----------------------------------------------------------------

inline std::vector<double> serialize(const Hermitian& x) {
  return std::vector<double>(x.coeffs().data(), x.coeffs().data() + x.dim());
}

/// Complex variant: real parts then imaginary parts.
inline std::vector<double> serialize(const ComplexHermitian& z) {
  std::vector<double> out;
  out.reserve(2 * z.dim());
  for (int k = 0; k < z.dim(); ++k) out.push_back(z.coeffs()[k].real());
  for (int k = 0; k < z.dim(); ++k) out.push_back(z.coeffs()[k].imag());
  return out;
}

}  // namespace cayley
