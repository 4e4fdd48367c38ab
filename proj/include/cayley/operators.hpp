#pragma once

// Symmetry algebras of J_n realized as spans of operators on the serialized
// coordinates of H_n: Der(J_n) = span [L_X, L_Y], the reduced structure algebra
// Der(J_n) + L(traceless), group elements by exponentiation, and the
// centralizer of the embedded Der(J_{n-1}).

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Core>
#include <unsupported/Eigen/MatrixFunctions>

#include "cayley/hermitian.hpp"
#include "cayley/random.hpp"

namespace cayley {

enum class Field { Real, Complex };

template <typename Scalar>
struct LinearOperator {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  int level = 0;
  Matrix matrix;

  LinearOperator() = default;
  LinearOperator(int lvl, Matrix m) : level(lvl), matrix(std::move(m)) {
    if (matrix.rows() != hermitian_dim(level) || matrix.cols() != hermitian_dim(level)) {
      throw UsageError("operator shape does not match level");
    }
  }

  static LinearOperator Identity(int lvl) {
    return LinearOperator(lvl, Matrix::Identity(hermitian_dim(lvl), hermitian_dim(lvl)));
  }
  static LinearOperator Zero(int lvl) { return LinearOperator(lvl, Matrix::Zero(hermitian_dim(lvl), hermitian_dim(lvl))); }

  HermitianMatrix<Scalar> operator()(const HermitianMatrix<Scalar>& x) const {
    if (x.level() != level) throw UsageError("operator applied at the wrong level");
    return HermitianMatrix<Scalar>(level, matrix * x.coeffs());
  }

  friend LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
    if (a.level != b.level) throw UsageError("operator level mismatch");
    return LinearOperator(a.level, a.matrix * b.matrix);
  }
};

using RealOperator = LinearOperator<double>;
using ComplexOperator = LinearOperator<std::complex<double>>;

inline ComplexOperator complexify(const RealOperator& a) {
  return ComplexOperator(a.level, a.matrix.cast<std::complex<double>>());
}

template <typename Scalar>
LinearOperator<Scalar> left_mult(const HermitianMatrix<Scalar>& x) {
  return LinearOperator<Scalar>(x.level(), left_mult_matrix(x));
}

template <typename Scalar>
LinearOperator<Scalar> commutator(const LinearOperator<Scalar>& a, const LinearOperator<Scalar>& b) {
  return LinearOperator<Scalar>(a.level, a.matrix * b.matrix - b.matrix * a.matrix);
}

/// exp(tA) by scaling and squaring with a fixed Pade order.
template <typename Scalar>
LinearOperator<Scalar> exp_op(const LinearOperator<Scalar>& a, double t = 1.0) {
  using Matrix = typename LinearOperator<Scalar>::Matrix;
  const Matrix scaled = a.matrix * Scalar(t);
  return LinearOperator<Scalar>(a.level, scaled.exp());
}

/// Spectral norm in trace-form orthonormal coordinates.
double operator_norm(const RealOperator& a);

enum class BasisKind { Derivation, Structure, Centralizer, EmbeddedDerivation };

/// Frobenius-orthonormal basis of an operator span. For Field::Complex the
/// same real operators span a complex algebra of doubled real dimension.
struct OperatorBasis {
  int level = 0;
  BasisKind kind = BasisKind::Derivation;
  Field field = Field::Real;
  std::vector<RealOperator> ops;
  /// Singular values of the generator matrix, descending (diagnostics).
  std::vector<double> singular_values;

  int dim() const { return static_cast<int>(ops.size()); }
  int real_dim() const { return field == Field::Complex ? 2 * dim() : dim(); }

  /// sum_k c_k ops[k].
  template <typename Scalar, typename Derived>
  LinearOperator<Scalar> combine(const Eigen::MatrixBase<Derived>& c) const {
    using Matrix = typename LinearOperator<Scalar>::Matrix;
    const int d = hermitian_dim(level);
    Matrix m = Matrix::Zero(d, d);
    for (int k = 0; k < dim(); ++k) m += Scalar(c[k]) * ops[static_cast<std::size_t>(k)].matrix.template cast<Scalar>();
    return LinearOperator<Scalar>(level, m);
  }
};

/// Relative singular-value threshold for all numeric ranks of operator spans.
inline constexpr double kRankThreshold = 1e-8;

/// Der(J_n) = span{[L_X, L_Y]}; dimensions 3, 8, 21, 52. Cached per level.
const OperatorBasis& derivation_basis(int n);

/// span{[L_X, L_Y] : X, Y in H_{n-1} included in H_n}, acting on H_n (n >= 1).
const OperatorBasis& embedded_derivation_basis(int n);

/// Der(J_n) + {L_X : tr X = 0}; real dimensions 8, 16, 35, 78.
OperatorBasis structure_basis(int n, Field field = Field::Real);

/// Elements of Der(J_n) commuting with the embedded Der(J_{n-1}); dims 0, 1, 3.
const OperatorBasis& centralizer_basis(int n);

/// Distance from `a` to the span of an orthonormal basis (Frobenius).
double span_residual(const RealOperator& a, const OperatorBasis& basis);

/// Orthonormal basis of the column span of `generators` (each column a
/// flattened operator). Throws RankAmbiguityError when a singular value falls
/// within a factor 10 of the threshold.
Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& generators, double rel_threshold,
                                 std::vector<double>* singular_values = nullptr);

/// exp of a random derivation combination (normal coefficients, operator norm
/// capped at pi). Deterministic per generator state.
RealOperator random_group_element(int n, Rng& rng);
RealOperator random_group_element(int n, std::uint64_t seed);

/// exp(A + iB) with A, B random derivation combinations; |A| <= pi, |B| <= imag_bound.
ComplexOperator random_complex_group_element(int n, Rng& rng, double imag_bound);

/// Parameters of a Gamma_{n-1} element: sign (n=1), angle (n=2), axis + angle (n=3).
struct GammaParams {
  int sign = 1;
  double angle = 0.0;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitX();
};

/// Operator on H_n implementing the Gamma_{n-1} action.
RealOperator gamma_element(int n, const GammaParams& params);

/// Random parameters covering Gamma_{n-1}.
GammaParams random_gamma_params(int n, Rng& rng);

/// Centralizer generators rescaled so exp(t C(u)) has period 2 pi for unit u (n = 3).
const std::vector<RealOperator>& normalized_centralizer(int n);

/// exp(sum v_k C_k) with the normalized centralizer generators; |v| <= pi covers Gamma_2.
RealOperator gamma_from_vector(const Eigen::Vector3d& v);

}  // namespace cayley
