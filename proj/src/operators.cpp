#include "cayley/operators.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace cayley {

namespace {

void check_level(int n, int lo = 0) {
  if (n < lo || n > kMaxLevel) throw UsageError("level out of range for this operation");
}

Eigen::VectorXd flatten(const Eigen::MatrixXd& m) { return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size()); }

Eigen::MatrixXd unflatten(const Eigen::VectorXd& v, int d) { return Eigen::Map<const Eigen::MatrixXd>(v.data(), d, d); }

std::vector<RealOperator> left_mults(int level, int source_level) {
  std::vector<RealOperator> out;
  for (int k = 0; k < hermitian_dim(source_level); ++k) {
    const Hermitian e = change_level(Hermitian::BasisUnit(source_level, k), level);
    out.push_back(left_mult(e));
  }
  return out;
}

OperatorBasis span_basis(int level, BasisKind kind, const Eigen::MatrixXd& generators) {
  OperatorBasis b;
  b.level = level;
  b.kind = kind;
  const Eigen::MatrixXd u = orthonormal_span(generators, kRankThreshold, &b.singular_values);
  for (int k = 0; k < u.cols(); ++k) b.ops.emplace_back(level, unflatten(u.col(k), hermitian_dim(level)));
  return b;
}

// Generators [L_X, L_Y] with X, Y running over a basis of H_{source} inside H_level.
Eigen::MatrixXd commutator_generators(int level, int source) {
  const auto ls = left_mults(level, source);
  const int m = static_cast<int>(ls.size());
  const int d = hermitian_dim(level);
  Eigen::MatrixXd g(d * d, m * (m - 1) / 2);
  int col = 0;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) g.col(col++) = flatten(commutator(ls[a], ls[b]).matrix);
  }
  return g;
}

template <typename Build>
const OperatorBasis& cached(std::array<std::once_flag, 4>& flags, std::array<OperatorBasis, 4>& store, int n,
                            Build build) {
  std::call_once(flags[static_cast<std::size_t>(n)], [&] { store[static_cast<std::size_t>(n)] = build(n); });
  return store[static_cast<std::size_t>(n)];
}

}  // namespace

double operator_norm(const RealOperator& a) {
  const Eigen::VectorXd w = trace_form_weights(a.level).cwiseSqrt();
  const Eigen::MatrixXd s = w.asDiagonal() * a.matrix * w.cwiseInverse().asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.transpose() * s, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& generators, double rel_threshold,
                                 std::vector<double>* singular_values) {
  if (generators.cols() == 0) return Eigen::MatrixXd(generators.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(generators, Eigen::ComputeThinU);
  const Eigen::VectorXd& s = svd.singularValues();
  const double thr = rel_threshold * s[0];
  int rank = 0;
  for (int k = 0; k < s.size(); ++k) {
    if (s[k] > thr / 10.0 && s[k] < thr * 10.0) {
      throw RankAmbiguityError("singular value " + std::to_string(s[k]) + " within 10x of rank threshold");
    }
    if (s[k] > thr) ++rank;
  }
  if (singular_values) singular_values->assign(s.data(), s.data() + s.size());
  return svd.matrixU().leftCols(rank);
}

const OperatorBasis& derivation_basis(int n) {
  check_level(n);
  static std::array<std::once_flag, 4> flags;
  static std::array<OperatorBasis, 4> store;
  return cached(flags, store, n, [](int level) {
    return span_basis(level, BasisKind::Derivation, commutator_generators(level, level));
  });
}

const OperatorBasis& embedded_derivation_basis(int n) {
  check_level(n, 1);
  static std::array<std::once_flag, 4> flags;
  static std::array<OperatorBasis, 4> store;
  return cached(flags, store, n, [](int level) {
    return span_basis(level, BasisKind::EmbeddedDerivation, commutator_generators(level, level - 1));
  });
}

OperatorBasis structure_basis(int n, Field field) {
  check_level(n);
  static std::array<std::once_flag, 4> flags;
  static std::array<OperatorBasis, 4> store;
  OperatorBasis b = cached(flags, store, n, [](int level) {
    const auto& der = derivation_basis(level);
    const int d = hermitian_dim(level);
    std::vector<Hermitian> traceless = {Hermitian::Diagonal(level, 1, -1, 0), Hermitian::Diagonal(level, 0, 1, -1)};
    for (int k = 3; k < d; ++k) traceless.push_back(Hermitian::BasisUnit(level, k));
    Eigen::MatrixXd g(d * d, der.dim() + static_cast<int>(traceless.size()));
    int col = 0;
    for (const auto& op : der.ops) g.col(col++) = flatten(op.matrix);
    for (const auto& x : traceless) g.col(col++) = flatten(left_mult(x).matrix);
    return span_basis(level, BasisKind::Structure, g);
  });
  b.field = field;
  return b;
}

const OperatorBasis& centralizer_basis(int n) {
  check_level(n, 1);
  static std::array<std::once_flag, 4> flags;
  static std::array<OperatorBasis, 4> store;
  return cached(flags, store, n, [](int level) {
    const auto& der = derivation_basis(level);
    const auto& sub = embedded_derivation_basis(level);
    const int d = hermitian_dim(level);
    const int m = der.dim();
    const int block = d * d;
    // Column i: the commutators [B_i, E_j] for all embedded E_j, stacked.
    Eigen::MatrixXd sys(block * sub.dim(), m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < sub.dim(); ++j) {
        sys.col(i).segment(block * j, block) = flatten(commutator(der.ops[i], sub.ops[j]).matrix);
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeThinV);
    const Eigen::VectorXd& s = svd.singularValues();
    const double thr = kRankThreshold * s[0];
    OperatorBasis b;
    b.level = level;
    b.kind = BasisKind::Centralizer;
    b.singular_values.assign(s.data(), s.data() + s.size());
    for (int k = 0; k < s.size(); ++k) {
      if (s[k] > thr / 10.0 && s[k] < thr * 10.0) {
        throw RankAmbiguityError("centralizer nullspace is numerically ambiguous");
      }
      if (s[k] <= thr) b.ops.push_back(der.combine<double>(svd.matrixV().col(k)));
    }
    return b;
  });
}

double span_residual(const RealOperator& a, const OperatorBasis& basis) {
  Eigen::MatrixXd r = a.matrix;
  for (const auto& op : basis.ops) r -= (op.matrix.cwiseProduct(a.matrix).sum()) * op.matrix;
  return r.norm();
}

RealOperator random_group_element(int n, Rng& rng) {
  const auto& der = derivation_basis(n);
  RealOperator a = der.combine<double>(rng.normal_vector(der.dim()));
  const double nrm = operator_norm(a);
  if (nrm > std::numbers::pi) a.matrix *= std::numbers::pi / nrm;
  return exp_op(a);
}

RealOperator random_group_element(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_group_element(n, rng);
}

ComplexOperator random_complex_group_element(int n, Rng& rng, double imag_bound) {
  const auto& der = derivation_basis(n);
  RealOperator re = der.combine<double>(rng.normal_vector(der.dim()));
  RealOperator im = der.combine<double>(rng.normal_vector(der.dim()));
  const double nre = operator_norm(re);
  if (nre > std::numbers::pi) re.matrix *= std::numbers::pi / nre;
  const double nim = operator_norm(im);
  if (nim > 0.0) im.matrix *= rng.uniform() * imag_bound / nim;
  ComplexOperator a(n, re.matrix.cast<std::complex<double>>());
  a.matrix += std::complex<double>(0.0, 1.0) * im.matrix.cast<std::complex<double>>();
  return exp_op(a);
}

const std::vector<RealOperator>& normalized_centralizer(int n) {
  check_level(n, 2);
  static std::array<std::once_flag, 4> flags;
  static std::array<std::vector<RealOperator>, 4> store;
  std::call_once(flags[static_cast<std::size_t>(n)], [n] {
    const auto& c = centralizer_basis(n);
    const double kappa = operator_norm(c.ops.front());
    for (const auto& op : c.ops) store[static_cast<std::size_t>(n)].emplace_back(n, op.matrix / kappa);
  });
  return store[static_cast<std::size_t>(n)];
}

RealOperator gamma_from_vector(const Eigen::Vector3d& v) {
  const auto& gens = normalized_centralizer(3);
  RealOperator a = RealOperator::Zero(3);
  for (int k = 0; k < 3; ++k) a.matrix += v[k] * gens[static_cast<std::size_t>(k)].matrix;
  return exp_op(a);
}

RealOperator gamma_element(int n, const GammaParams& params) {
  check_level(n, 1);
  if (!std::isfinite(params.angle)) throw UsageError("gamma angle must be finite");
  const int d = hermitian_dim(n);
  if (n == 1) {
    if (params.sign != 1 && params.sign != -1) throw UsageError("gamma sign must be +1 or -1");
    Eigen::VectorXd diag = Eigen::VectorXd::Ones(d);
    if (params.sign == -1) {
      for (int k = 0; k < 3; ++k) diag[3 + 2 * k + 1] = -1.0;
    }
    return RealOperator(n, diag.asDiagonal().toDenseMatrix());
  }
  if (n == 2) {
    Element lambda(2);
    lambda[0] = std::cos(params.angle);
    lambda[1] = std::sin(params.angle);
    const Element lambda_bar = conj(lambda);
    Eigen::MatrixXd m(d, d);
    for (int c = 0; c < d; ++c) {
      Hermitian e = Hermitian::BasisUnit(n, c);
      for (int k = 0; k < 3; ++k) e.set_off(k, mul(mul(lambda, e.off(k)), lambda_bar));
      m.col(c) = e.coeffs();
    }
    return RealOperator(n, m);
  }
  const double an = params.axis.norm();
  if (!(an > 1e-12) || !params.axis.allFinite()) throw UsageError("gamma axis must be a nonzero finite vector");
  return gamma_from_vector(params.angle * params.axis / an);
}

GammaParams random_gamma_params(int n, Rng& rng) {
  GammaParams p;
  if (n == 1) {
    p.sign = rng.sign();
  } else {
    p.angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    if (n == 3) p.axis = rng.unit_vector(3);
  }
  return p;
}

}  // namespace cayley
