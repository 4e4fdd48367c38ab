#include "cayley/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "cayley/complex_maps.hpp"
#include "cayley/errors.hpp"
#include "cayley/operators.hpp"
#include "cayley/planes.hpp"
#include "cayley/real_maps.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

namespace {

using cd = std::complex<double>;

constexpr std::array<int, 4> kDerivationDims = {3, 8, 21, 52};
constexpr std::array<int, 4> kStructureDims = {8, 16, 35, 78};
constexpr std::array<int, 4> kCentralizerDims = {0, 0, 1, 3};
constexpr std::array<int, 4> kFiberDims = {0, 1, 3, 7};

// Probes per chordal pair, pairs for the preimage search and points for the
// Jacobian rank, independent of --samples beyond an upper cap.
constexpr int kChordalProbes = 32;
constexpr int kSeparationPairs = 20;
constexpr int kFiberPoints = 100;
constexpr double kLowerBoundWitness = 1e-3;
constexpr double kGenericDistance = 0.05;

class Context {
 public:
  Context(const SuiteConfig& cfg, int suite_id, VerificationReport& report, std::string name)
      : cfg_(cfg), suite_id_(suite_id), report_(report), name_(std::move(name)) {}

  const SuiteConfig& cfg() const { return cfg_; }
  int samples() const { return cfg_.samples; }
  double tol_alg() const { return cfg_.tol.alg; }
  double tol_geo() const { return cfg_.tol.geo; }

  std::vector<int> levels(int min_level) const {
    if (cfg_.n) return {*cfg_.n};
    std::vector<int> out;
    for (int n = min_level; n <= kMaxLevel; ++n) out.push_back(n);
    return out;
  }

  Rng rng(int level, int tag, std::uint64_t index) const {
    const std::uint64_t stream = (static_cast<std::uint64_t>(suite_id_) << 16) |
                                 (static_cast<std::uint64_t>(level) << 8) | static_cast<std::uint64_t>(tag);
    return Rng(cfg_.seed, stream, index);
  }

  std::string key(int level, const std::string& name) const {
    return name_ + ".n" + std::to_string(level) + "." + name;
  }

  void check(int level, const std::string& name, double value, Relation rel, double threshold) {
    report_.checks.push_back(make_check(key(level, name), value, rel, threshold));
  }

  void info(int level, const std::string& name, double value) { report_.info[key(level, name)] = value; }
  void info(int level, const std::string& name, std::string value) { report_.info[key(level, name)] = std::move(value); }

  /// f(i) for i in [0, count); results are kept in index order so any
  /// reduction is independent of scheduling.
  template <typename F>
  auto sweep(int count, F&& f) const -> std::vector<decltype(f(0))> {
    using T = decltype(f(0));
    std::vector<T> out(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
    auto work = [&](int begin, int stride) {
      for (int i = begin; i < count; i += stride) {
        try {
          out[static_cast<std::size_t>(i)] = f(i);
        } catch (...) {
          errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
    };
    if (cfg_.parallel && count > 1) {
      const int workers = static_cast<int>(std::max(2u, std::thread::hardware_concurrency()));
      std::vector<std::thread> pool;
      for (int t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
      for (auto& th : pool) th.join();
    } else {
      work(0, 1);
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    return out;
  }

 private:
  const SuiteConfig& cfg_;
  int suite_id_;
  VerificationReport& report_;
  std::string name_;
};

template <typename T, typename F>
double max_of(const std::vector<T>& v, F&& f) {
  double m = 0.0;
  for (const auto& x : v) {
    const double y = f(x);
    m = std::isnan(y) ? y : std::max(m, y);
    if (std::isnan(m)) return m;
  }
  return m;
}

template <typename T, typename F>
double min_of(const std::vector<T>& v, F&& f) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& x : v) {
    const double y = f(x);
    if (std::isnan(y)) return y;
    m = std::min(m, y);
  }
  return m;
}

template <typename T, typename F>
double count_of(const std::vector<T>& v, F&& f) {
  double c = 0.0;
  for (const auto& x : v) c += f(x) ? 1.0 : 0.0;
  return c;
}

// ---- shared sampling helpers ----

Element random_unit_element(int n, Rng& rng) { return Element(n, rng.unit_vector(algebra_dim(n))); }

Hermitian random_unit_hermitian(int n, Rng& rng) {
  Hermitian x(n, rng.normal_vector(hermitian_dim(n)));
  return x / norm(x);
}

ComplexHermitian random_unit_complex(int n, Rng& rng) {
  const ComplexHermitian z = complexify(Hermitian(n, rng.normal_vector(hermitian_dim(n))),
                                        Hermitian(n, rng.normal_vector(hermitian_dim(n))));
  return z / cd(herm_norm(z), 0.0);
}

double dist(const Hermitian& a, const Hermitian& b) { return norm(a - b); }

RealOperator capped_group_element(const OperatorBasis& basis, Rng& rng) {
  RealOperator a = basis.combine<double>(rng.normal_vector(basis.dim()));
  const double nrm = operator_norm(a);
  if (nrm > std::numbers::pi) a.matrix *= std::numbers::pi / nrm;
  return exp_op(a);
}

/// The action of an operator preserving H_{n-1} inside H_n, read on H_{n-1}.
RealOperator restrict_to_lower(const RealOperator& g) {
  const int m = g.level - 1;
  const int d = hermitian_dim(m);
  Eigen::MatrixXd r(d, d);
  for (int c = 0; c < d; ++c) r.col(c) = change_level(g(change_level(Hermitian::BasisUnit(m, c), g.level)), m).coeffs();
  return RealOperator(m, r);
}

/// Point of Sigma_n: g Diag(0, t, 1 - t).
Hermitian random_sigma_point(int n, Rng& rng, double t_lo, double t_hi) {
  const double t = rng.uniform(t_lo, t_hi);
  return random_group_element(n, rng)(Hermitian::Diagonal(n, 0.0, t, 1.0 - t));
}

ComplexPlanePoint random_generic_point(int n, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    ComplexPlanePoint z = random_complex_point(n, rng, attempt % 2 ? Reach::NearInfinity : Reach::Affine);
    if (realness_distance(z) > kGenericDistance && infinity_distance(z) > kGenericDistance) return z;
  }
  throw NumericalError("no generic point found within the attempt budget");
}

// ---- suites ----

void suite_algebra(Context& ctx) {
  for (int n : ctx.levels(0)) {
    struct R {
      double unit = 0, anti = 0, normmul = 0, conjnorm = 0, assoc = 0, alt_left = 0, alt_right = 0, moufang = 0,
             orth = 0;
    };
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      const Element a = random_unit_element(n, rng);
      const Element b = random_unit_element(n, rng);
      const Element c = random_unit_element(n, rng);
      const Element one = Element::real(n, 1.0);
      R r;
      r.unit = std::max(norm(mul(one, a) - a), norm(mul(a, one) - a));
      r.anti = norm(conj(mul(a, b)) - mul(conj(b), conj(a)));
      r.normmul = std::abs(norm(mul(a, b)) - norm(a) * norm(b));
      r.conjnorm = norm(mul(a, conj(a)) - Element::real(n, squared_norm(a)));
      r.assoc = norm(associator(a, b, c));
      r.alt_left = norm(mul(mul(a, a), b) - mul(a, mul(a, b)));
      r.alt_right = norm(mul(mul(a, b), b) - mul(a, mul(b, b)));
      r.moufang = norm(mul(mul(c, a), mul(b, c)) - mul(mul(c, mul(a, b)), c));
      if (n >= 1) {
        const Element lower = random_unit_element(n - 1, rng);
        const Element rest = a - include_level(project_level(a, n - 1), n);
        r.orth = std::abs(inner(rest, include_level(lower, n)));
      }
      return r;
    });
    ctx.check(n, "unit_identity", max_of(rs, [](const R& r) { return r.unit; }), Relation::Less, ctx.tol_alg());
    ctx.check(n, "conj_anti_involution", max_of(rs, [](const R& r) { return r.anti; }), Relation::Less, ctx.tol_alg());
    ctx.check(n, "norm_multiplicative", max_of(rs, [](const R& r) { return r.normmul; }), Relation::Less,
              ctx.tol_alg());
    ctx.check(n, "conj_product_norm", max_of(rs, [](const R& r) { return r.conjnorm; }), Relation::Less,
              ctx.tol_alg());
    ctx.check(n, "alternative_left", max_of(rs, [](const R& r) { return r.alt_left; }), Relation::Less, ctx.tol_alg());
    ctx.check(n, "alternative_right", max_of(rs, [](const R& r) { return r.alt_right; }), Relation::Less,
              ctx.tol_alg());
    ctx.check(n, "moufang", max_of(rs, [](const R& r) { return r.moufang; }), Relation::Less, ctx.tol_alg());
    if (n >= 1) {
      ctx.check(n, "projection_orthogonal", max_of(rs, [](const R& r) { return r.orth; }), Relation::Less,
                ctx.tol_alg());
    }

    double basis_assoc = 0.0;
    const int dim = algebra_dim(n);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        for (int k = 0; k < dim; ++k) {
          const double v = norm(associator(Element::unit(n, i), Element::unit(n, j), Element::unit(n, k)));
          basis_assoc = std::max(basis_assoc, v);
        }
      }
    }
    if (n <= 2) {
      ctx.check(n, "associative", max_of(rs, [](const R& r) { return r.assoc; }), Relation::Less, ctx.tol_alg());
      ctx.check(n, "basis_associator_max", basis_assoc, Relation::Equal, 0.0);
    } else {
      ctx.info(n, "associator_max", max_of(rs, [](const R& r) { return r.assoc; }));
      ctx.check(n, "basis_associator_max", basis_assoc, Relation::Greater, 0.0);
    }
  }
}

void suite_jordan(Context& ctx) {
  for (int n : ctx.levels(0)) {
    struct R {
      double comm = 0, ident = 0, power = 0, trsharp = 0, sharpsharp = 0, detflow = 0, disc = 0, sumlam = 0,
             sumsq = 0, cubic = 0, diag = 0, hpos = 0, himag = 0, hinv = 0;
    };
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      const Hermitian x = random_unit_hermitian(n, rng);
      const Hermitian y = random_unit_hermitian(n, rng);
      R r;
      r.comm = dist(jordan_mul(x, y), jordan_mul(y, x));
      r.ident = dist(jordan_mul(x, Hermitian::Identity(n)), x);
      const Hermitian x2 = jordan_mul(x, x);
      r.power = dist(jordan_mul(x, jordan_mul(x, x2)), jordan_mul(x2, x2));
      const auto inv = invariants(x);
      const Hermitian xs = sharp(x);
      r.trsharp = std::abs(trace(xs) - inv.s);
      r.sharpsharp = dist(sharp(xs), inv.det * x);
      const RealOperator g = random_group_element(n, rng);
      r.detflow = std::abs(det(g(x)) - inv.det);
      r.disc = characteristic_discriminant(x);
      const Spectrum sp = eigenvalues(x);
      r.sumlam = std::abs(sp[0] + sp[1] + sp[2] - inv.tr);
      r.sumsq = std::abs(sp[0] * sp[0] + sp[1] * sp[1] + sp[2] * sp[2] - inv.norm2);
      r.cubic = sp.residual;
      std::array<double, 3> lam = {rng.normal(), rng.normal(), rng.normal()};
      const Spectrum ds = eigenvalues(Hermitian::Diagonal(n, lam[0], lam[1], lam[2]));
      std::sort(lam.begin(), lam.end());
      r.diag = spectrum_distance(ds, lam);
      const ComplexHermitian z = complexify(Hermitian(n, rng.normal_vector(hermitian_dim(n))),
                                            Hermitian(n, rng.normal_vector(hermitian_dim(n))));
      const cd zz = herm_inner(z, z);
      r.hpos = zz.real();
      r.himag = std::abs(zz.imag()) / zz.real();
      const ComplexHermitian zu = random_unit_complex(n, rng);
      const ComplexHermitian wu = random_unit_complex(n, rng);
      const ComplexOperator gc = complexify(g);
      r.hinv = std::abs(herm_inner(gc(zu), gc(wu)) - herm_inner(zu, wu));
      return r;
    });
    ctx.check(n, "commutative", max_of(rs, [](const R& r) { return r.comm; }), Relation::Less, ctx.tol_alg());
    ctx.check(n, "identity", max_of(rs, [](const R& r) { return r.ident; }), Relation::Less, ctx.tol_alg());
    ctx.check(n, "power_associative", max_of(rs, [](const R& r) { return r.power; }), Relation::Less, ctx.tol_alg());
    ctx.check(n, "trace_of_sharp", max_of(rs, [](const R& r) { return r.trsharp; }), Relation::Less, ctx.tol_alg());
    ctx.check(n, "sharp_of_sharp", max_of(rs, [](const R& r) { return r.sharpsharp; }), Relation::Less,
              ctx.tol_alg());
    ctx.check(n, "det_flow_invariant", max_of(rs, [](const R& r) { return r.detflow; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "discriminant_min", min_of(rs, [](const R& r) { return r.disc; }), Relation::GreaterEqual,
              kDiscriminantClamp);
    ctx.check(n, "eigenvalue_sum", max_of(rs, [](const R& r) { return r.sumlam; }), Relation::Less, ctx.tol_geo());
    ctx.check(n, "eigenvalue_square_sum", max_of(rs, [](const R& r) { return r.sumsq; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "cubic_residual", max_of(rs, [](const R& r) { return r.cubic; }), Relation::Less, ctx.tol_geo());
    ctx.check(n, "diagonal_spectrum", max_of(rs, [](const R& r) { return r.diag; }), Relation::Less, ctx.tol_geo());
    ctx.check(n, "hermitian_positive_min", min_of(rs, [](const R& r) { return r.hpos; }), Relation::Greater, 0.0);
    ctx.check(n, "hermitian_self_real", max_of(rs, [](const R& r) { return r.himag; }), Relation::Less,
              ctx.tol_alg());
    ctx.check(n, "hermitian_invariant", max_of(rs, [](const R& r) { return r.hinv; }), Relation::Less,
              ctx.tol_geo());
  }
}

// det(X + tY) is cubic in t; the five-point stencil is exact on cubics.
double det_directional_derivative(const Hermitian& x, const Hermitian& y) {
  constexpr double h = 1e-2;
  auto f = [&](double t) { return det(x + t * y); };
  return (8.0 * (f(h) - f(-h)) - (f(2 * h) - f(-2 * h))) / (12.0 * h);
}

void suite_dims(Context& ctx) {
  for (int n : ctx.levels(0)) {
    const auto& der = derivation_basis(n);
    const OperatorBasis str = structure_basis(n, Field::Real);
    const OperatorBasis strc = structure_basis(n, Field::Complex);
    ctx.check(n, "derivation_dim", der.dim(), Relation::Equal, kDerivationDims[static_cast<std::size_t>(n)]);
    ctx.check(n, "structure_dim", str.real_dim(), Relation::Equal, kStructureDims[static_cast<std::size_t>(n)]);
    ctx.check(n, "structure_complex_real_dim", strc.real_dim(), Relation::Equal,
              2 * kStructureDims[static_cast<std::size_t>(n)]);
    if (n >= 1) {
      ctx.check(n, "embedded_derivation_dim", embedded_derivation_basis(n).dim(), Relation::Equal,
                kDerivationDims[static_cast<std::size_t>(n - 1)]);
    }

    double closure = 0.0;
    for (int a = 0; a < der.dim(); ++a) {
      for (int b = a + 1; b < der.dim(); ++b) {
        closure = std::max(closure, span_residual(commutator(der.ops[static_cast<std::size_t>(a)],
                                                             der.ops[static_cast<std::size_t>(b)]),
                                                  der));
      }
    }
    ctx.check(n, "derivation_closure", closure, Relation::Less, ctx.tol_alg());

    struct R {
      double leibniz = 0, symmetric = 0, expinv = 0, invariants = 0, isometry = 0, orbit = 0, detderiv = 0,
             detflow = 0, normchange = 0;
    };
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      const Hermitian x = random_unit_hermitian(n, rng);
      const Hermitian y = random_unit_hermitian(n, rng);
      const Hermitian w = random_unit_hermitian(n, rng);
      R r;
      const RealOperator& d = der.ops[static_cast<std::size_t>(i % der.dim())];
      r.leibniz = dist(d(jordan_mul(x, y)), jordan_mul(d(x), y) + jordan_mul(x, d(y)));
      const RealOperator lx = left_mult(x);
      r.symmetric = std::abs(trace_form(lx(y), w) - trace_form(y, lx(w)));

      RealOperator a = der.combine<double>(rng.normal_vector(der.dim()));
      const double an = operator_norm(a);
      if (an > std::numbers::pi) a.matrix *= std::numbers::pi / an;
      const RealOperator g = exp_op(a);
      r.expinv = (g.matrix * exp_op(a, -1.0).matrix - Eigen::MatrixXd::Identity(g.matrix.rows(), g.matrix.cols()))
                     .cwiseAbs()
                     .maxCoeff();
      const auto ix = invariants(x);
      const auto igx = invariants(g(x));
      r.invariants = std::max({std::abs(igx.tr - ix.tr), std::abs(igx.norm2 - ix.norm2), std::abs(igx.det - ix.det)});
      r.isometry = std::abs(trace_form(g(x), g(y)) - trace_form(x, y));
      r.orbit = plane_residuals(g(Hermitian::Diagonal(n, 1.0, 0.0, 0.0))).max();

      const RealOperator& s = str.ops[static_cast<std::size_t>(i % str.dim())];
      r.detderiv = std::abs(det_directional_derivative(x, s(x)));
      RealOperator b = str.combine<double>(rng.normal_vector(str.dim()));
      b.matrix /= operator_norm(b);
      const Hermitian bx = exp_op(b)(x);
      r.detflow = std::abs(det(bx) - ix.det);
      r.normchange = std::abs(invariants(bx).norm2 - ix.norm2);
      return r;
    });
    ctx.check(n, "leibniz", max_of(rs, [](const R& r) { return r.leibniz; }), Relation::Less, ctx.tol_alg());
    ctx.check(n, "left_mult_symmetric", max_of(rs, [](const R& r) { return r.symmetric; }), Relation::Less,
              ctx.tol_alg());
    ctx.check(n, "exp_inverse", max_of(rs, [](const R& r) { return r.expinv; }), Relation::Less, ctx.tol_geo());
    ctx.check(n, "automorphism_invariants", max_of(rs, [](const R& r) { return r.invariants; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "automorphism_isometry", max_of(rs, [](const R& r) { return r.isometry; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "group_orbit_plane", max_of(rs, [](const R& r) { return r.orbit; }), Relation::Less, ctx.tol_geo());
    ctx.check(n, "structure_det_derivative", max_of(rs, [](const R& r) { return r.detderiv; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "structure_flow_det", max_of(rs, [](const R& r) { return r.detflow; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "structure_norm_witness", max_of(rs, [](const R& r) { return r.normchange; }), Relation::Greater,
              0.01);
  }
}

void suite_centralizers(Context& ctx) {
  for (int n : ctx.levels(1)) {
    const auto& cent = centralizer_basis(n);
    const auto& emb = embedded_derivation_basis(n);
    ctx.check(n, "centralizer_dim", cent.dim(), Relation::Equal, kCentralizerDims[static_cast<std::size_t>(n)]);
    double comm = 0.0;
    for (const auto& c : cent.ops) {
      for (const auto& e : emb.ops) comm = std::max(comm, commutator(c, e).matrix.norm());
    }
    ctx.check(n, "commutes_with_embedded", comm, Relation::Less, ctx.tol_alg());

    struct R {
      double flowfix = 0, gammafix = 0, gammaplane = 0, involution = 0, period = 0, halfmove = 0;
    };
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      const Hermitian lower = change_level(random_plane_point(n - 1, rng).matrix, n);
      const Hermitian x = random_plane_point(n, rng).matrix;
      R r;
      for (const auto& c : cent.ops) {
        const double t = rng.uniform(-std::numbers::pi, std::numbers::pi);
        r.flowfix = std::max(r.flowfix, dist(exp_op(c, t)(lower), lower));
      }
      const RealOperator g = gamma_element(n, random_gamma_params(n, rng));
      r.gammafix = dist(g(lower), lower);
      r.gammaplane = plane_residuals(g(x)).max();
      if (n == 1) {
        GammaParams flip;
        flip.sign = -1;
        const RealOperator f = gamma_element(1, flip);
        r.involution = dist(f(f(x)), x);
      } else {
        GammaParams p;
        p.axis = rng.unit_vector(3);
        p.angle = n == 2 ? std::numbers::pi : 2.0 * std::numbers::pi;
        r.period = dist(gamma_element(n, p)(x), x);
        p.angle /= 2.0;
        r.halfmove = dist(gamma_element(n, p)(x), x);
      }
      return r;
    });
    ctx.check(n, "flows_fix_lower_plane", max_of(rs, [](const R& r) { return r.flowfix; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "gamma_fixes_lower_plane", max_of(rs, [](const R& r) { return r.gammafix; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "gamma_preserves_plane", max_of(rs, [](const R& r) { return r.gammaplane; }), Relation::Less,
              ctx.tol_geo());
    if (n == 1) {
      ctx.check(n, "gamma_involution", max_of(rs, [](const R& r) { return r.involution; }), Relation::Less,
                ctx.tol_alg());
    } else {
      ctx.check(n, "gamma_period", max_of(rs, [](const R& r) { return r.period; }), Relation::Less, ctx.tol_geo());
      ctx.check(n, "gamma_half_period_move", max_of(rs, [](const R& r) { return r.halfmove; }), Relation::Greater,
                0.1);
    }
  }
}

void suite_hopf(Context& ctx) {
  for (int n : ctx.levels(0)) {
    const int dim = algebra_dim(n);
    struct R {
      double unit = 0, fiber = 0;
      Eigen::VectorXd point;
    };
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      R r;
      const Element a(n, rng.normal_vector(dim));
      const Element b(n, rng.normal_vector(dim));
      const HopfPoint h = hopf(a, b);
      r.unit = std::abs(h.norm() - 1.0);
      r.point.resize(dim + 1);
      r.point << h.height, h.point.coeffs();
      const Element m(n, rng.normal_vector(dim));
      const Element x1 = random_unit_element(n, rng);
      const Element x2 = random_unit_element(n, rng);
      const HopfPoint h1 = hopf(x1, mul(m, x1));
      const HopfPoint h2 = hopf(x2, mul(m, x2));
      r.fiber = std::hypot(h1.height - h2.height, norm(h1.point - h2.point));
      return r;
    });
    const HopfPoint pole = hopf(Element::real(n, 1.0), Element(n));
    ctx.check(n, "pole", std::hypot(pole.height - 1.0, norm(pole.point)), Relation::Less, ctx.tol_alg());
    ctx.check(n, "unit_norm", max_of(rs, [](const R& r) { return r.unit; }), Relation::Less, ctx.tol_alg());
    ctx.check(n, "fiber_constant", max_of(rs, [](const R& r) { return r.fiber; }), Relation::Less, ctx.tol_alg());

    // Largest distance from a probe direction to the nearest sampled image.
    constexpr int kProbes = 256;
    double covering = 0.0;
    for (int p = 0; p < kProbes; ++p) {
      Rng rng = ctx.rng(n, 1, static_cast<std::uint64_t>(p));
      const Eigen::VectorXd probe = rng.unit_vector(dim + 1);
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& r : rs) nearest = std::min(nearest, (r.point - probe).norm());
      covering = std::max(covering, nearest);
    }
    ctx.info(n, "covering_radius", covering);
  }
}

void suite_planes(Context& ctx) {
  for (int n : ctx.levels(0)) {
    // i, j and an octonion unit orthogonal to H.
    const Element e = Element::unit(n, n == 3 ? 4 : n);
    struct R {
      double sampled = 0, coords = 0, dualspec = 0, dualdet = 0, sub = 0, inter = 0, realsub = 0, distinct = 0;
      bool dualsigma = true;
    };
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      R r;
      const PlanePoint x = random_plane_point(n, rng);
      r.sampled = plane_residuals(x.matrix).max();
      const int dim = algebra_dim(n);
      const PlanePoint c = plane_point(Element(n, rng.normal_vector(dim)), Element(n, rng.normal_vector(dim)),
                                       Element(n, rng.normal_vector(dim)));
      r.coords = plane_residuals(c.matrix).max();
      const Hermitian dual = polar_dual(x);
      r.dualspec = spectrum_distance(eigenvalues(dual), {0.0, 0.5, 0.5});
      r.dualdet = std::abs(det(dual));
      r.dualsigma = sigma_membership(dual).on_sigma;
      r.distinct = dist(x.matrix, random_plane_point(n, rng).matrix);
      if (n >= 1) {
        std::array<cd, 3> z;
        std::array<cd, 3> zr;
        for (int k = 0; k < 3; ++k) {
          z[static_cast<std::size_t>(k)] = cd(rng.normal(), rng.normal());
          zr[static_cast<std::size_t>(k)] = cd(rng.normal(), 0.0);
        }
        const PlanePoint xe = subplane_point(e, z);
        r.sub = plane_residuals(xe.matrix).max();
        const PlanePoint real_e = subplane_point(e, zr);
        r.realsub = dist(real_e.matrix, change_level(change_level(real_e.matrix, 0), n));
        if (n >= 2) {
          // Off the real points the e-part never lies in the standard C-part.
          const double off_real = dist(xe.matrix, change_level(change_level(xe.matrix, 0), n));
          const double off_complex = dist(xe.matrix, change_level(change_level(xe.matrix, 1), n));
          const PlanePoint xi = subplane_point(Element::unit(n, 1), z);
          const double standard = dist(xi.matrix, change_level(change_level(xi.matrix, 0), n));
          r.inter = std::max(std::abs(off_real - off_complex), std::abs(off_real - standard));
        }
      }
      return r;
    });
    ctx.check(n, "sampled_invariants", max_of(rs, [](const R& r) { return r.sampled; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "coordinate_invariants", max_of(rs, [](const R& r) { return r.coords; }), Relation::Less,
              ctx.tol_alg());
    ctx.check(n, "polar_dual_spectrum", max_of(rs, [](const R& r) { return r.dualspec; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "polar_dual_det", max_of(rs, [](const R& r) { return r.dualdet; }), Relation::Less, ctx.tol_alg());
    ctx.check(n, "polar_dual_off_sigma", count_of(rs, [](const R& r) { return !r.dualsigma; }), Relation::Equal, 0.0);
    ctx.check(n, "distinct_samples_min", min_of(rs, [](const R& r) { return r.distinct; }), Relation::Greater,
              kLowerBoundWitness);
    if (n >= 1) {
      ctx.check(n, "subplane_invariants", max_of(rs, [](const R& r) { return r.sub; }), Relation::Less,
                ctx.tol_alg());
      ctx.check(n, "subplane_real_coordinates", max_of(rs, [](const R& r) { return r.realsub; }), Relation::Less,
                ctx.tol_alg());
    }
    if (n >= 2) {
      ctx.check(n, "subplane_intersection", max_of(rs, [](const R& r) { return r.inter; }), Relation::Less,
                ctx.tol_alg());
    }
  }
}

void suite_lemma1(Context& ctx) {
  for (int n : ctx.levels(1)) {
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      return norm(shifted_projection(random_plane_point(n, rng).matrix));
    });
    const double m = min_of(rs, [](double v) { return v; });
    ctx.check(n, "shifted_projection_min", m, Relation::Greater, kLowerBoundWitness);
  }
}

void suite_lemma2(Context& ctx) {
  for (int n : ctx.levels(0)) {
    struct R {
      double sigma = 0, imag = 0;
    };
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      const ComplexPlanePoint z = random_complex_point(n, rng, i % 2 ? Reach::NearInfinity : Reach::Affine);
      R r;
      r.sigma = norm(sigma_map(z));
      const ComplexHermitian s = conjugate_square(z.matrix);
      r.imag = herm_norm(complexify(imag_part(s))) / std::abs(trace(s));
      return r;
    });
    ctx.check(n, "sigma_norm_min", min_of(rs, [](const R& r) { return r.sigma; }), Relation::Greater,
              kLowerBoundWitness);
    ctx.check(n, "conjugate_square_real", max_of(rs, [](const R& r) { return r.imag; }), Relation::Less,
              ctx.tol_alg());
  }
}

void suite_lemma3(Context& ctx) {
  for (int n : ctx.levels(0)) {
    const Hermitian c = center(n);
    struct R {
      double chord = 0, crossing = 0, radial = 0;
      bool single = true, on_sigma = true;
    };
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      R r;
      const Hermitian a = random_sigma_point(n, rng, 0.0, 1.0);
      const Hermitian b = random_sigma_point(n, rng, 0.0, 1.0);
      const double s = rng.uniform();
      r.chord = eigenvalues((1.0 - s) * a + s * b)[0];

      Hermitian v(n, rng.normal_vector(hermitian_dim(n)));
      const double t = trace(v) / 3.0;
      for (int k = 0; k < 3; ++k) v.diag(k) -= t;
      v = v / norm(v);
      const double mu = eigenvalues(v)[0];
      const double r_star = -1.0 / (3.0 * mu);
      // lambda_1 along the ray is 1/3 + r mu: sample it off the crossing.
      constexpr int kSteps = 16;
      int sign_changes = 0;
      double prev = eigenvalues(c)[0];
      for (int k = 0; k < kSteps; ++k) {
        const double rr = (k + 0.5) * 2.0 * r_star / kSteps;
        const double cur = eigenvalues(c + rr * v)[0];
        if (cur > prev + ctx.tol_geo()) r.single = false;
        if ((prev > 0.0) != (cur > 0.0)) ++sign_changes;
        prev = cur;
      }
      if (sign_changes != 1) r.single = false;
      const Hermitian cross = c + r_star * v;
      const auto m = sigma_membership(cross);
      r.on_sigma = m.on_sigma;
      r.crossing = std::abs(eigenvalues(cross)[0]);
      r.radial = dist(m.radial_point, c + kRadius * v);
      return r;
    });
    ctx.check(n, "chord_min_eigenvalue", min_of(rs, [](const R& r) { return r.chord; }), Relation::GreaterEqual,
              -kEigenBand);
    ctx.check(n, "ray_single_crossing_failures", count_of(rs, [](const R& r) { return !r.single; }), Relation::Equal,
              0.0);
    ctx.check(n, "ray_crossing_off_sigma", count_of(rs, [](const R& r) { return !r.on_sigma; }), Relation::Equal,
              0.0);
    ctx.check(n, "ray_crossing_eigenvalue", max_of(rs, [](const R& r) { return r.crossing; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "radial_point", max_of(rs, [](const R& r) { return r.radial; }), Relation::Less, ctx.tol_geo());
  }
}

struct Representative {
  Region region;
  std::array<double, 3> diag;
};

const std::array<Representative, 5>& representatives() {
  static const std::array<Representative, 5> reps = {{
      {Region::PosDefInterior, {0.2, 0.3, 0.5}},
      {Region::IndefiniteOpen, {-0.5, 0.5, 1.0}},
      {Region::SigmaSmooth, {0.0, 0.25, 0.75}},
      {Region::ZOuter, {-1.0, 0.0, 2.0}},
      {Region::PlaneP, {0.0, 0.0, 1.0}},
  }};
  return reps;
}

void suite_lemma4(Context& ctx) {
  for (int n : ctx.levels(0)) {
    int tag = 0;
    for (const auto& rep : representatives()) {
      const Hermitian x = Hermitian::Diagonal(n, rep.diag[0], rep.diag[1], rep.diag[2]);
      const std::string label = region_name(rep.region);
      ctx.check(n, "representative_" + label, region_classify(x).region == rep.region ? 1.0 : 0.0, Relation::Equal,
                1.0);
      struct R {
        bool same = true, ambiguous = false;
      };
      const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
        Rng rng = ctx.rng(n, tag, static_cast<std::uint64_t>(i));
        const RegionLabel l = region_classify(random_group_element(n, rng)(x));
        return R{l.region == rep.region, l.ambiguous};
      });
      ctx.check(n, "conjugation_mismatches_" + label, count_of(rs, [](const R& r) { return !r.same; }),
                Relation::Equal, 0.0);
      ctx.info(n, "ambiguous_" + label, count_of(rs, [](const R& r) { return r.ambiguous; }));
      ++tag;
    }
  }
}

void suite_theorem_a(Context& ctx) {
  for (int n : ctx.levels(1)) {
    const auto& emb = embedded_derivation_basis(n);
    const Hermitian c = center(n - 1);
    struct R {
      double fix = 0, sphere = 0, collapse = 0, equiv = 0, branch = 0, offbranch = 0;
    };
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      R r;
      const Hermitian lower = random_plane_point(n - 1, rng).matrix;
      const Hermitian flower = f_map(change_level(lower, n));
      r.fix = dist(flower, lower);
      r.branch = spectrum_distance(eigenvalues(flower), {0.0, 0.0, 1.0});
      const Hermitian x = random_plane_point(n, rng).matrix;
      const Hermitian fx = f_map(x);
      r.sphere = std::max(std::abs(norm(fx - c) - kRadius), std::abs(trace(fx) - 1.0));
      r.collapse = dist(f_map(gamma_element(n, random_gamma_params(n, rng))(x)), fx);
      const RealOperator g = capped_group_element(emb, rng);
      r.equiv = dist(f_map(g(x)), restrict_to_lower(g)(fx));
      // |f(X)^#| grows quadratically with the distance of X from P_{n-1}.
      const double off = dist(x, change_level(project_pi(x), n));
      r.offbranch = norm(sharp(fx)) / (off * off);
      return r;
    });
    ctx.check(n, "fixes_lower_plane", max_of(rs, [](const R& r) { return r.fix; }), Relation::Less, ctx.tol_geo());
    ctx.check(n, "lower_plane_spectrum", max_of(rs, [](const R& r) { return r.branch; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "image_on_sphere", max_of(rs, [](const R& r) { return r.sphere; }), Relation::Less, ctx.tol_alg());
    ctx.check(n, "gamma_fiber_collapse", max_of(rs, [](const R& r) { return r.collapse; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "equivariance", max_of(rs, [](const R& r) { return r.equiv; }), Relation::Less, ctx.tol_geo());
    ctx.check(n, "branch_sharp_ratio_min", min_of(rs, [](const R& r) { return r.offbranch; }), Relation::Greater,
              0.1);

    // Pairs with equal images: solve f(Y) = f(X) from a random start, then
    // measure the distance from Y to the Gamma-orbit of X.
    struct P {
      double image = 0, orbit = 0;
      bool solved = false;
    };
    const int pairs = std::min(ctx.samples(), kSeparationPairs);
    const auto ps = ctx.sweep(pairs, [&](int i) {
      Rng rng = ctx.rng(n, 1, static_cast<std::uint64_t>(i));
      const Hermitian x = random_plane_point(n, rng).matrix;
      const Hermitian fx = f_map(x);
      P p;
      for (int attempt = 0; attempt < 5 && !p.solved; ++attempt) {
        const auto y = solve_f_preimage(fx, random_plane_point(n, rng).matrix);
        if (!y) continue;
        p.solved = true;
        p.image = dist(f_map(*y), fx);
        p.orbit = gamma_orbit_distance(x, *y);
      }
      return p;
    });
    ctx.check(n, "separation_unsolved", count_of(ps, [](const P& p) { return !p.solved; }), Relation::Equal, 0.0);
    ctx.check(n, "separation_pair_image", max_of(ps, [](const P& p) { return p.image; }), Relation::Less, 1e-6);
    ctx.check(n, "separation_orbit_distance", max_of(ps, [](const P& p) { return p.orbit; }), Relation::Less, 1e-4);
    ctx.info(n, "separation_pairs", pairs);
  }
}

void suite_theorem_a_prime(Context& ctx) {
  for (int n : ctx.levels(1)) {
    const auto& emb = embedded_derivation_basis(n);
    struct R {
      double det = 0, mineig = 0, trace = 0, equiv = 0, interior = 0, lower = 0;
    };
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      R r;
      const Hermitian x = random_plane_point(n, rng).matrix;
      const Hermitian p = project_pi(x);
      r.det = std::abs(det(p));
      r.mineig = eigenvalues(p)[0];
      const Hermitian y = random_unit_hermitian(n, rng);
      r.trace = std::abs(trace(project_pi(y)) - trace(y));
      const RealOperator g = capped_group_element(emb, rng);
      r.equiv = dist(project_pi(g(y)), restrict_to_lower(g)(project_pi(y)));
      r.interior = eigenvalues(project_pi(random_sigma_point(n, rng, 0.05, 0.95)))[0];
      r.lower = projection_sigma_residual(change_level(random_plane_point(n - 1, rng).matrix, n));
      return r;
    });
    ctx.check(n, "det_projection_max", max_of(rs, [](const R& r) { return r.det; }), Relation::Less, ctx.tol_geo());
    ctx.check(n, "projection_min_eigenvalue", min_of(rs, [](const R& r) { return r.mineig; }),
              Relation::GreaterEqual, -kEigenBand);
    ctx.check(n, "projection_trace", max_of(rs, [](const R& r) { return r.trace; }), Relation::Less, ctx.tol_alg());
    ctx.check(n, "projection_equivariance", max_of(rs, [](const R& r) { return r.equiv; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "sigma_interior_reach", min_of(rs, [](const R& r) { return r.interior; }), Relation::GreaterEqual,
              -kEigenBand);
    ctx.check(n, "lower_plane_residual", max_of(rs, [](const R& r) { return r.lower; }), Relation::Less,
              ctx.tol_geo());
  }
}

void fiber_dim_checks(Context& ctx, int n, int tag) {
  const int points = std::min(ctx.samples(), kFiberPoints);
  const int expected = kFiberDims[static_cast<std::size_t>(n)];
  const int frame = 1 << (n + 2);
  const auto dims = ctx.sweep(points, [&](int i) {
    Rng rng = ctx.rng(n, tag, static_cast<std::uint64_t>(i));
    FiberRankInfo info;
    const int rank = fiber_rank(random_generic_point(n, rng), &info);
    return info.frame_dim == frame ? frame - rank : -1;
  });
  ctx.check(n, "fiber_dim_deviation", max_of(dims, [&](int d) { return std::abs(d - expected); }), Relation::Equal,
            0.0);
  ctx.check(n, "fiber_dim", dims.front(), Relation::Equal, expected);
  ctx.info(n, "fiber_points", points);
}

void suite_theorem_b(Context& ctx) {
  for (int n : ctx.levels(0)) {
    const Hermitian c = center(n);
    struct R {
      double restrict = 0, antipodal = 0, equiv = 0, tau = 0, sphere = 0;
    };
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      R r;
      const Hermitian x = random_plane_point(n, rng).matrix;
      r.restrict = dist(phi_map(normalize_point(complexify(x))), x);
      r.antipodal = spectrum_distance(eigenvalues(phi_map(infinity_point(n, rng))), {-1.0 / 3, 2.0 / 3, 2.0 / 3});
      const ComplexPlanePoint z = random_complex_point(n, rng, i % 2 ? Reach::NearInfinity : Reach::Affine);
      const RealOperator g = random_group_element(n, rng);
      const Hermitian pz = phi_map(z);
      r.equiv = dist(phi_map(normalize_point(complexify(g)(z.matrix))), g(pz));
      r.tau = dist(phi_map(normalize_point(tau(z.matrix))), pz);
      r.sphere = std::abs(norm(pz - c) - kRadius);
      return r;
    });
    ctx.check(n, "restriction_identity", max_of(rs, [](const R& r) { return r.restrict; }), Relation::Less,
              ctx.tol_geo());
    ctx.check(n, "infinity_antipodal_spectrum", max_of(rs, [](const R& r) { return r.antipodal; }), Relation::Less,
              kEigenBand);
    ctx.check(n, "equivariance", max_of(rs, [](const R& r) { return r.equiv; }), Relation::Less, ctx.tol_geo());
    ctx.check(n, "tau_collapse", max_of(rs, [](const R& r) { return r.tau; }), Relation::Less, ctx.tol_alg());
    ctx.check(n, "image_on_sphere", max_of(rs, [](const R& r) { return r.sphere; }), Relation::Less, ctx.tol_alg());
    fiber_dim_checks(ctx, n, 1);
  }
}

void suite_theorem_b_prime(Context& ctx) {
  for (int n : ctx.levels(0)) {
    struct R {
      double l1 = 0, l2 = 0, phase = 0;
    };
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      const ComplexPlanePoint z = random_complex_point(n, rng, i % 2 ? Reach::NearInfinity : Reach::Affine);
      const Hermitian s = sigma_map(z) + center(n);
      const Spectrum sp = eigenvalues(s);
      R r;
      r.l1 = std::abs(sp[0]);
      r.l2 = sp[1];
      const cd phase = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
      r.phase = dist(sigma_map(ComplexPlanePoint{z.matrix * phase}), sigma_map(z));
      return r;
    });
    ctx.check(n, "lambda1_abs_max", max_of(rs, [](const R& r) { return r.l1; }), Relation::Less, ctx.tol_geo());
    ctx.check(n, "lambda2_min", min_of(rs, [](const R& r) { return r.l2; }), Relation::GreaterEqual, -kEigenBand);
    ctx.check(n, "phase_invariance", max_of(rs, [](const R& r) { return r.phase; }), Relation::Less, ctx.tol_alg());
  }
}

void suite_chordal(Context& ctx) {
  for (int n : ctx.levels(0)) {
    const ComplexPlanePoint d1{ComplexHermitian::Diagonal(n, 1.0, 0.0, 0.0)};
    const ComplexPlanePoint d2{ComplexHermitian::Diagonal(n, 0.0, 1.0, 0.0)};
    ctx.check(n, "diagonal_pair", chordal_residual(d1, d2, kChordalProbes), Relation::Less, ctx.tol_alg());
    struct R {
      double chord = 0, control = 0, rank1 = 0;
    };
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      const ComplexPlanePoint z1 = random_complex_point(n, rng, i % 2 ? Reach::NearInfinity : Reach::Affine);
      const ComplexPlanePoint z2 = random_complex_point(n, rng, i % 3 ? Reach::Affine : Reach::NearInfinity);
      R r;
      r.chord = chordal_residual(z1, z2, kChordalProbes);
      r.control = chordal_control(z1, kChordalProbes);
      r.rank1 = std::max(herm_norm(sharp(z1.matrix)), herm_norm(sharp(z2.matrix)));
      return r;
    });
    ctx.check(n, "pair_residual", max_of(rs, [](const R& r) { return r.chord; }), Relation::Less, ctx.tol_geo());
    ctx.check(n, "control_witness_min", min_of(rs, [](const R& r) { return r.control; }), Relation::Greater, 0.01);
    ctx.check(n, "rank_one", max_of(rs, [](const R& r) { return r.rank1; }), Relation::Less, ctx.tol_geo());
  }
}

void suite_twistor(Context& ctx) {
  for (int n : ctx.levels(0)) {
    ctx.check(n, "base_point",
              dist(twistor_project(infinity_base_point(n)), Hermitian::Diagonal(n, 0.5, 0.5, 0.0)), Relation::Less,
              ctx.tol_alg());
    struct R {
      double dual = 0, trace = 0, rank1 = 0, real = 0, equiv = 0;
    };
    const auto rs = ctx.sweep(ctx.samples(), [&](int i) {
      Rng rng = ctx.rng(n, 0, static_cast<std::uint64_t>(i));
      const ComplexPlanePoint w = infinity_point(n, rng);
      const Hermitian t = twistor_project(w);
      R r;
      r.dual = spectrum_distance(eigenvalues(t), {0.0, 0.5, 0.5});
      r.trace = infinity_distance(w);
      r.rank1 = herm_norm(sharp(w.matrix));
      r.real = realness_distance(w);
      const RealOperator g = random_group_element(n, rng);
      r.equiv = dist(twistor_project(normalize_point(complexify(g)(w.matrix))), g(t));
      return r;
    });
    ctx.check(n, "dual_plane_spectrum", max_of(rs, [](const R& r) { return r.dual; }), Relation::Less, kEigenBand);
    ctx.check(n, "trace_zero", max_of(rs, [](const R& r) { return r.trace; }), Relation::Less, ctx.tol_geo());
    ctx.check(n, "rank_one", max_of(rs, [](const R& r) { return r.rank1; }), Relation::Less, ctx.tol_geo());
    ctx.check(n, "no_real_points_min", min_of(rs, [](const R& r) { return r.real; }), Relation::Greater, 0.1);
    ctx.check(n, "equivariance", max_of(rs, [](const R& r) { return r.equiv; }), Relation::Less, ctx.tol_geo());
  }
}

void suite_fiber_dims(Context& ctx) {
  for (int n : ctx.levels(0)) {
    fiber_dim_checks(ctx, n, 0);
    // Rank at a real point, where the fiber degenerates; informational only.
    Rng rng = ctx.rng(n, 1, 0);
    const ComplexPlanePoint real = normalize_point(complexify(random_plane_point(n, rng).matrix));
    try {
      ctx.info(n, "rank_at_real_point", fiber_rank(real));
    } catch (const RankAmbiguityError&) {
      ctx.info(n, "rank_at_real_point", std::string("ambiguous"));
    } catch (const NumericalError& e) {
      ctx.info(n, "rank_at_real_point", std::string(e.what()));
    }
  }
}

using SuiteFn = void (*)(Context&);

struct Entry {
  SuiteInfo info;
  SuiteFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {{"algebra", "division algebra laws: identity, conjugation, norm, associativity, alternativity, Moufang", 0},
       suite_algebra},
      {{"jordan", "Jordan product, invariants, sharp, determinant, eigenvalues, Hermitian form", 0}, suite_jordan},
      {{"dims", "derivation and structure algebra dimensions, Leibniz rule, closure, flows", 0}, suite_dims},
      {{"centralizers", "centralizer of the embedded derivations and the Gamma actions fixing the lower plane", 1},
       suite_centralizers},
      {{"hopf", "Hopf maps: unit image and constant fibers", 0}, suite_hopf},
      {{"planes", "plane point invariants and polar duality, including rotated complex subplanes", 0}, suite_planes},
      {{"lemma1", "the projected plane never meets the center I/3", 1}, suite_lemma1},
      {{"lemma2", "sigma never vanishes on the complexified plane", 0}, suite_lemma2},
      {{"lemma3", "convexity of the positive region and radial projection of its boundary", 0}, suite_lemma3},
      {{"lemma4", "eigenvalue-sign orbit labels and their invariance", 0}, suite_lemma4},
      {{"theorem-a", "f_n fixes the lower plane, with equivariance and Gamma fiber collapse and separation", 1},
       suite_theorem_a},
      {{"theorem-a-prime", "the projection of the plane lies on the boundary Sigma", 1}, suite_theorem_a_prime},
      {{"theorem-b", "phi_n restricts to the inclusion and sends infinity to the antipodal plane; fiber dims", 0},
       suite_theorem_b},
      {{"theorem-b-prime", "the image of sigma_n lies on the boundary Sigma", 0}, suite_theorem_b_prime},
      {{"chordal", "secant identity det(aZ1 + bZ2) = 0 with a rank-three control", 0}, suite_chordal},
      {{"twistor", "points at infinity project onto the dual plane", 0}, suite_twistor},
      {{"fiber-dims", "fiber dimensions 0, 1, 3, 7 from the rank of d(phi_n)", 0}, suite_fiber_dims},
      {{"all", "every suite above", 0}, nullptr},
  };
  return list;
}

void run_entry(const Entry& entry, int id, const SuiteConfig& cfg, VerificationReport& report) {
  Context ctx(cfg, id, report, entry.info.name);
  try {
    entry.fn(ctx);
  } catch (const RankAmbiguityError& e) {
    report.checks.push_back(make_check(entry.info.name + ".rank_ambiguity", 1.0, Relation::Equal, 0.0));
    report.info[entry.info.name + ".error"] = std::string(e.what());
  } catch (const NumericalError& e) {
    report.checks.push_back(make_check(entry.info.name + ".numerical_error", 1.0, Relation::Equal, 0.0));
    report.info[entry.info.name + ".error"] = std::string(e.what());
  }
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::string list_suites() {
  std::ostringstream os;
  for (const auto& s : suite_registry()) {
    os << s.name;
    for (std::size_t pad = s.name.size(); pad < 17; ++pad) os << ' ';
    os << s.description << "\n";
  }
  return os.str();
}

VerificationReport run_suite(const SuiteConfig& config) {
  const auto& list = entries();
  const auto it = std::find_if(list.begin(), list.end(), [&](const Entry& e) { return e.info.name == config.suite; });
  if (it == list.end()) throw UsageError("unknown suite '" + config.suite + "'");
  if (config.samples < 1) throw UsageError("samples must be >= 1");
  if (!(config.tol.alg > 0.0) || !(config.tol.geo > 0.0)) throw UsageError("tolerances must be positive");
  if (config.n && (*config.n < it->info.min_level || *config.n > kMaxLevel)) {
    throw UsageError("suite '" + config.suite + "' covers levels " + std::to_string(it->info.min_level) + "..3");
  }

  VerificationReport report;
  report.suite = config.suite;
  report.n = config.n;
  report.samples = config.samples;
  report.seed = config.seed;
  report.tol = config.tol;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Entry& e = list[k];
    if (!e.fn) continue;
    if (config.suite != "all" && e.info.name != config.suite) continue;
    if (config.n && *config.n < e.info.min_level) continue;
    run_entry(e, static_cast<int>(k) + 1, config, report);
  }
  return report;
}

std::string sample_dump(const std::string& kind, int n, int count, std::uint64_t seed) {
  if (n < 0 || n > kMaxLevel) throw UsageError("level must be in 0..3");
  if (count < 1) throw UsageError("count must be >= 1");
  int tag = 0;
  if (kind == "plane") {
    tag = 1;
  } else if (kind == "complex") {
    tag = 2;
  } else if (kind == "infinity") {
    tag = 3;
  } else {
    throw UsageError("kind must be plane, complex or infinity");
  }
  // Dumps live in their own stream family, apart from every suite.
  const std::uint64_t stream = (std::uint64_t{0xffff} << 16) | (static_cast<std::uint64_t>(n) << 8) | tag;
  nlohmann::json vectors = nlohmann::json::array();
  for (int i = 0; i < count; ++i) {
    Rng rng(seed, stream, static_cast<std::uint64_t>(i));
    std::vector<double> v;
    if (tag == 1) {
      v = serialize(random_plane_point(n, rng).matrix);
    } else if (tag == 2) {
      v = serialize(random_complex_point(n, rng).matrix);
    } else {
      v = serialize(infinity_point(n, rng).matrix);
    }
    vectors.push_back(v);
  }
  const bool complex = tag != 1;
  nlohmann::json layout = {{"diagonal", {"xi1", "xi2", "xi3"}},
                           {"offDiagonal", {"x1", "x2", "x3"}},
                           {"unitsPerEntry", algebra_dim(n)},
                           {"matrix", "[[xi1,x3,conj(x2)],[conj(x3),xi2,x1],[x2,conj(x1),xi3]]"},
                           {"parts", complex ? nlohmann::json({"re", "im"}) : nlohmann::json({"re"})}};
  nlohmann::json j = {{"kind", kind},
                      {"n", n},
                      {"ambientDim", (complex ? 2 : 1) * hermitian_dim(n)},
                      {"count", count},
                      {"seed", seed},
                      {"layout", layout},
                      {"vectors", vectors}};
  return canonical_dump(j) + "\n";
}

}  // namespace cayley
