#pragma once

// Cayley-Dickson tower R < C < H < O with coefficients stored in doubling
// order (real part first). Elements are templated on the coefficient scalar so
// the same code serves the complexified algebras A_n (x) C.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "cayley/errors.hpp"

namespace cayley {

inline constexpr int kMaxLevel = 3;

/// Number of real units of A_n.
constexpr int algebra_dim(int level) { return 1 << level; }

namespace detail {

/// Signed-permutation product table for one level: e_i e_j = sign[i][j] e_index[i][j].
struct ProductTable {
  int dim = 1;
  std::array<std::array<int, 8>, 8> index{};
  std::array<std::array<double, 8>, 8> sign{};
};

// Reference doubling recursion (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)),
// evaluated on dense coefficient vectors. Only used to build the tables.
inline std::vector<double> doubling_conj(std::vector<double> x) {
  for (std::size_t i = 1; i < x.size(); ++i) x[i] = -x[i];
  return x;
}

inline std::vector<double> doubling_product(const std::vector<double>& x,
                                            const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  std::vector<double> a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  std::vector<double> c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  auto ac = doubling_product(a, c);
  auto db = doubling_product(doubling_conj(d), b);
  auto da = doubling_product(d, a);
  auto bc = doubling_product(b, doubling_conj(c));
  std::vector<double> out(n);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = ac[i] - db[i];
    out[h + i] = da[i] + bc[i];
  }
  return out;
}

inline ProductTable build_table(int level) {
  ProductTable t;
  t.dim = algebra_dim(level);
  for (int i = 0; i < t.dim; ++i) {
    for (int j = 0; j < t.dim; ++j) {
      std::vector<double> ei(t.dim, 0.0), ej(t.dim, 0.0);
      ei[i] = 1.0;
      ej[j] = 1.0;
      const auto p = doubling_product(ei, ej);
      int hits = 0;
      for (int k = 0; k < t.dim; ++k) {
        if (p[k] != 0.0) {
          t.index[i][j] = k;
          t.sign[i][j] = p[k];
          ++hits;
        }
      }
      if (hits != 1) throw NumericalError("Cayley-Dickson table is not a signed permutation");
    }
  }
  return t;
}

inline const ProductTable& product_table(int level) {
  static const std::array<ProductTable, 4> tables = {build_table(0), build_table(1),
                                                     build_table(2), build_table(3)};
  return tables.at(static_cast<std::size_t>(level));
}

}  // namespace detail

/// Element of A_n (or its complexification when Scalar is complex).
template <typename Scalar>
class AlgebraElement {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, 0, 8, 1>;

  AlgebraElement() : level_(0), coeffs_(Coeffs::Zero(1)) {}
  explicit AlgebraElement(int level) : level_(check_level(level)), coeffs_(Coeffs::Zero(algebra_dim(level))) {}

  template <typename Derived>
  AlgebraElement(int level, const Eigen::MatrixBase<Derived>& coeffs) : level_(check_level(level)), coeffs_(coeffs) {
    if (coeffs_.size() != algebra_dim(level)) throw UsageError("coefficient count must be 2^level");
  }

  static AlgebraElement real(int level, Scalar value) {
    AlgebraElement e(level);
    e.coeffs_[0] = value;
    return e;
  }

  static AlgebraElement unit(int level, int k) {
    AlgebraElement e(level);
    e.coeffs_[k] = Scalar(1);
    return e;
  }

  int level() const { return level_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }

  const Coeffs& coeffs() const { return coeffs_; }
  Coeffs& coeffs() { return coeffs_; }
  Scalar operator[](int k) const { return coeffs_[k]; }
  Scalar& operator[](int k) { return coeffs_[k]; }

  Scalar real_part() const { return coeffs_[0]; }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_same(o);
    coeffs_ += o.coeffs_;
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_same(o);
    coeffs_ -= o.coeffs_;
    return *this;
  }
  AlgebraElement& operator*=(Scalar s) {
    coeffs_ *= s;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) {
    a.coeffs_ = -a.coeffs_;
    return a;
  }
  friend AlgebraElement operator*(AlgebraElement a, Scalar s) { return a *= s; }
  friend AlgebraElement operator*(Scalar s, AlgebraElement a) { return a *= s; }

  void check_same(const AlgebraElement& o) const {
    if (o.level_ != level_) throw UsageError("algebra level mismatch");
  }

 private:
  static int check_level(int level) {
    if (level < 0 || level > kMaxLevel) throw UsageError("algebra level must be in 0..3");
    return level;
  }

  int level_;
  Coeffs coeffs_;
};

using Element = AlgebraElement<double>;
using ComplexElement = AlgebraElement<std::complex<double>>;

/// Cayley-Dickson product; bilinear over the coefficient scalar.
template <typename Scalar>
AlgebraElement<Scalar> mul(const AlgebraElement<Scalar>& a, const AlgebraElement<Scalar>& b) {
  a.check_same(b);
  const auto& t = detail::product_table(a.level());
  AlgebraElement<Scalar> out(a.level());
  for (int i = 0; i < t.dim; ++i) {
    const Scalar ai = a[i];
    if (ai == Scalar(0)) continue;
    for (int j = 0; j < t.dim; ++j) out[t.index[i][j]] += t.sign[i][j] * ai * b[j];
  }
  return out;
}

/// Algebra conjugation (negates the imaginary units). Does not conjugate complex scalars.
template <typename Scalar>
AlgebraElement<Scalar> conj(AlgebraElement<Scalar> a) {
  a.coeffs().tail(a.dim() - 1) *= Scalar(-1);
  return a;
}

/// Coefficient-wise bilinear pairing; for real scalars this is Re(a conj(b)).
template <typename Scalar>
Scalar inner(const AlgebraElement<Scalar>& a, const AlgebraElement<Scalar>& b) {
  a.check_same(b);
  return (a.coeffs().array() * b.coeffs().array()).sum();
}

inline double squared_norm(const Element& a) { return a.coeffs().squaredNorm(); }
inline double norm(const Element& a) { return a.coeffs().norm(); }

template <typename Scalar>
AlgebraElement<Scalar> associator(const AlgebraElement<Scalar>& a, const AlgebraElement<Scalar>& b,
                                  const AlgebraElement<Scalar>& c) {
  return mul(mul(a, b), c) - mul(a, mul(b, c));
}

/// Orthogonal projection A_n -> A_m for m <= n, zero-padding inclusion for m >= n.
template <typename Scalar>
AlgebraElement<Scalar> project_level(const AlgebraElement<Scalar>& a, int m) {
  AlgebraElement<Scalar> out(m);
  const int k = std::min(a.dim(), out.dim());
  out.coeffs().head(k) = a.coeffs().head(k);
  return out;
}

template <typename Scalar>
AlgebraElement<Scalar> include_level(const AlgebraElement<Scalar>& a, int m) {
  if (m < a.level()) throw UsageError("include_level target below source level");
  return project_level(a, m);
}

inline ComplexElement complexify(const Element& a) {
  return ComplexElement(a.level(), a.coeffs().template cast<std::complex<double>>());
}

}  // namespace cayley
