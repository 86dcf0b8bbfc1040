// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starshape/error.hpp"
#include "starshape/linalg.hpp"
#include "starshape/quadrature.hpp"
#include "starshape/random.hpp"

namespace starshape::matrix {

/// U -> S(U) in LT(p), defining a general LT(p) cross section.
using TriangularMap = std::function<Matrix(const Matrix&)>;
/// L = diag(l) -> P(L), a monomial matrix (permutation times diagonal).
using NormalizerMap = std::function<Matrix(const Matrix&)>;
/// f_G on LT(p), or t on GL(p).
using GroupFunction = std::function<double(const Matrix&)>;

//---------------------------------------------------------------------------//
// Linear algebra
//---------------------------------------------------------------------------//

inline bool is_symmetric(const Matrix& m, double rel_tol = 1e-12) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

/// Lower-triangular T with positive diagonal and T T^t = W.
inline Matrix cholesky(const Matrix& w) {
  require(w.rows() == w.cols() && w.rows() >= 1, ErrorCode::InvalidParameter,
          "cholesky needs a non-empty square matrix");
  require(is_symmetric(w, 1e-10), ErrorCode::InvalidParameter,
          "cholesky needs a symmetric matrix");
  const Eigen::Index p = w.rows();
  Matrix t = Matrix::Zero(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    double pivot = w(j, j);
    for (Eigen::Index k = 0; k < j; ++k) pivot -= t(j, k) * t(j, k);
    require(pivot > 0.0 && std::isfinite(pivot), ErrorCode::NotPositiveDefinite,
            "non-positive pivot at column " + std::to_string(j));
    t(j, j) = std::sqrt(pivot);
    for (Eigen::Index i = j + 1; i < p; ++i) {
      double v = w(i, j);
      for (Eigen::Index k = 0; k < j; ++k) v -= t(i, k) * t(j, k);
      t(i, j) = v / t(j, j);
    }
  }
  return t;
}

inline Matrix lower_inverse(const Matrix& t) {
  return t.triangularView<Eigen::Lower>().solve(
      Matrix::Identity(t.rows(), t.cols()));
}

inline bool is_lower_triangular_positive(const Matrix& m, double tol = 0.0) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (!(m(i, i) > 0.0)) return false;
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > tol) return false;
  }
  return true;
}

//---------------------------------------------------------------------------//
// Wishart test data
//---------------------------------------------------------------------------//

/// Bartlett factor A: a_ii^2 ~ chi-square(n - i + 1), a_ij ~ N(0,1), i > j.
inline Matrix bartlett_factor(int p, double n, Rng& rng) {
  require(p >= 1, ErrorCode::InvalidParameter, "p must be >= 1");
  require(n > p - 1, ErrorCode::BadDegreesOfFreedom,
          "Wishart degrees of freedom must exceed p - 1");
  Matrix a = Matrix::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    a(i, i) = std::sqrt(chi_square(rng, n - i));
    for (int j = 0; j < i; ++j) a(i, j) = standard_normal(rng);
  }
  return a;
}

/// W ~ Wishart_p(I, n) as A A^t with A a Bartlett factor.
inline Matrix wishart_sample(int p, double n, Rng& rng) {
  Matrix a = bartlett_factor(p, n, rng);
  return a * a.transpose();
}

//---------------------------------------------------------------------------//
// Pairs and decompositions
//---------------------------------------------------------------------------//

struct PDPair {
  Matrix w1;
  Matrix w2;

  int dim() const { return static_cast<int>(w1.rows()); }

  /// Validates symmetry (1e-12 relative) and positive definiteness.
  static PDPair make(Matrix w1, Matrix w2) {
    require(w1.rows() == w2.rows() && w1.cols() == w2.cols(),
            ErrorCode::DimensionMismatch, "W1 and W2 differ in shape");
    require(is_symmetric(w1) && is_symmetric(w2), ErrorCode::InvalidParameter,
            "pair matrices must be symmetric");
    cholesky(w1);
    cholesky(w2);
    return PDPair{std::move(w1), std::move(w2)};
  }

  PDPair transformed(const Matrix& a) const {
    Matrix t1 = a * w1 * a.transpose();
    Matrix t2 = a * w2 * a.transpose();
    return PDPair{0.5 * (t1 + t1.transpose()), 0.5 * (t2 + t2.transpose())};
  }
};

/// (W1, W2) = (T U T^t, T (I - U) T^t) with T T^t = W1 + W2.
struct LTDecomposition {
  Matrix T;
  Matrix U;
  Matrix S;  // S(U); identity for the standard beta cross section
  Matrix G;  // T S(U)^{-1}, the equivariant part
  Matrix z1, z2;  // invariant part on the general cross section
  double residual = 0.0;  // max relative Frobenius reconstruction error
};

inline LTDecomposition lt_orbital_decompose(const PDPair& pair,
                                            const TriangularMap& s_map = {}) {
  const int p = pair.dim();
  LTDecomposition d;
  d.T = cholesky(pair.w1 + pair.w2);
  const Matrix tinv = lower_inverse(d.T);
  Matrix u = tinv * pair.w1 * tinv.transpose();
  d.U = 0.5 * (u + u.transpose());
  const Matrix eye = Matrix::Identity(p, p);
  d.S = s_map ? s_map(d.U) : eye;
  require(is_lower_triangular_positive(d.S), ErrorCode::NotTriangular,
          "S(U) must be lower triangular with positive diagonal");
  d.G = d.T * lower_inverse(d.S);
  d.z1 = d.S * d.U * d.S.transpose();
  d.z2 = d.S * (eye - d.U) * d.S.transpose();
  d.residual = std::max(
      frobenius_relative(d.T * d.U * d.T.transpose(), pair.w1),
      frobenius_relative(d.T * (eye - d.U) * d.T.transpose(), pair.w2));
  d.residual = std::max(
      d.residual, frobenius_relative(d.G * d.z1 * d.G.transpose(), pair.w1));
  return d;
}

enum class SignConvention { FirstNonzeroPositive, FirstNonzeroNegative };

/// Flip column signs so the first nonzero entry of each column has the
/// convention's sign.
inline Matrix resign_columns(Matrix b, SignConvention convention =
                                           SignConvention::FirstNonzeroPositive) {
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
      if (b(i, j) != 0.0) {
        const bool positive = b(i, j) > 0.0;
        const bool want_positive = convention == SignConvention::FirstNonzeroPositive;
        if (positive != want_positive) b.col(j) = -b.col(j);
        break;
      }
    }
  }
  return b;
}

/// Exactly one nonzero entry in every row and column.
inline bool is_monomial(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  const double scale = m.cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) return false;
  const double tol = 1e-14 * scale;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    int row = 0, col = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row += std::abs(m(i, j)) > tol;
      col += std::abs(m(j, i)) > tol;
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

struct GLOptions {
  /// Minimum separation between consecutive roots.
  double gap = 1e-10;
  SignConvention convention = SignConvention::FirstNonzeroPositive;
  NormalizerMap normalizer;  // identity when empty
};

/// (W1, W2) = (B L B^t, B (I - L) B^t), 1 > l_1 > ... > l_p > 0.
struct GLDecomposition {
  Matrix B;
  Vector l;   // descending roots of det(W1 - l (W1 + W2)) = 0
  Matrix P;   // P(L), identity for the standard cross section
  Matrix G;   // re-signed B P(L)^{-1}
  Matrix z1, z2;  // (P L P^t, P (I - L) P^t)
  double residual = 0.0;
};

/*!
 * Orbital decomposition under GL(p).
 *
 * The generalized eigenproblem W1 v = l (W1 + W2) v is reduced with the
 * Cholesky factor T of W1 + W2 to the symmetric problem on T^{-1} W1 T^{-t};
 * B = T Q for its orthonormal eigenvectors Q, which equals C^{-t} for the
 * (W1 + W2)-normalized generalized eigenvectors C.
 */
inline GLDecomposition gl_orbital_decompose(const PDPair& pair,
                                            const GLOptions& opts = {}) {
  const int p = pair.dim();
  const Matrix sum = pair.w1 + pair.w2;
  const Matrix t = cholesky(sum);
  const Matrix tinv = lower_inverse(t);
  Matrix m = tinv * pair.w1 * tinv.transpose();
  m = 0.5 * (m + m.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
  require(eig.info() == Eigen::Success, ErrorCode::DegenerateRoots,
          "eigen decomposition failed");
  GLDecomposition d;
  d.l.resize(p);
  Matrix q(p, p);
  for (int i = 0; i < p; ++i) {
    d.l[i] = eig.eigenvalues()[p - 1 - i];
    q.col(i) = eig.eigenvectors().col(p - 1 - i);
  }
  for (int i = 0; i < p; ++i)
    require(d.l[i] > 0.0 && d.l[i] < 1.0, ErrorCode::OutOfRange,
            "root outside (0, 1); pair is not positive definite");
  for (int i = 0; i + 1 < p; ++i)
    require(d.l[i] - d.l[i + 1] > opts.gap, ErrorCode::DegenerateRoots,
            "roots " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                " are not distinct");
  d.B = resign_columns(t * q, opts.convention);
  const Matrix lmat = d.l.asDiagonal();
  const Matrix eye = Matrix::Identity(p, p);
  d.P = opts.normalizer ? opts.normalizer(lmat) : eye;
  require(is_monomial(d.P), ErrorCode::InvalidParameter,
          "P(L) must have exactly one nonzero entry per row and column");
  d.G = resign_columns(d.B * d.P.inverse(), opts.convention);
  d.z1 = d.P * lmat * d.P.transpose();
  d.z2 = d.P * (eye - lmat) * d.P.transpose();
  d.residual = std::max({
      frobenius_relative(d.B * lmat * d.B.transpose(), pair.w1),
      frobenius_relative(d.B * (eye - lmat) * d.B.transpose(), pair.w2),
      frobenius_relative(d.B * d.B.transpose(), sum),
      frobenius_relative(d.G * d.z1 * d.G.transpose(), pair.w1),
  });
  return d;
}

//---------------------------------------------------------------------------//
// Densities
//---------------------------------------------------------------------------//

/// log Gamma_p(a) = p(p-1)/4 log pi + sum_i log Gamma(a - (i-1)/2).
inline double log_multivariate_gamma(int p, double a) {
  double out = 0.25 * p * (p - 1) * std::log(kPi);
  for (int i = 0; i < p; ++i) out += std::lgamma(a - 0.5 * i);
  return out;
}

/// log of int_{0<U<I} det(U)^{a-(p+1)/2} det(I-U)^{b-(p+1)/2} dU.
inline double log_multivariate_beta(int p, double a, double b) {
  return log_multivariate_gamma(p, a) + log_multivariate_gamma(p, b) -
         log_multivariate_gamma(p, a + b);
}

namespace detail {

inline void check_shape_parameters(int p, double a, double b) {
  require(p >= 1, ErrorCode::InvalidParameter, "p must be >= 1");
  require(a > 0.5 * (p - 1) && b > 0.5 * (p - 1), ErrorCode::InvalidParameter,
          "a and b must exceed (p - 1)/2");
}

// Integrate h(U) over {0 < U < I} for p = 2 in coordinates
// (u11, u22, u12 = m sin(phi)), m = sqrt(min(u11 u22, (1-u11)(1-u22))).
template <class H>
double integrate_beta_region_p2(H&& h, double rel_tol = 1e-9) {
  QuadratureOptions opts;
  opts.abs_tol = 1e-14;
  opts.rel_tol = rel_tol;
  Matrix u(2, 2);
  auto outer = [&](double u11) {
    auto middle = [&](double u22) {
      const double m = std::sqrt(std::max(
          0.0, std::min(u11 * u22, (1.0 - u11) * (1.0 - u22))));
      if (m <= 0.0) return 0.0;
      auto inner = [&](double phi) {
        const double u12 = m * std::sin(phi);
        u << u11, u12, u12, u22;
        return h(u) * m * std::cos(phi);
      };
      return integrate(inner, -0.5 * kPi, 0.5 * kPi, opts).value;
    };
    return integrate_segments(middle, {0.0, 1.0 - u11, 1.0}, opts).value;
  };
  return integrate(outer, 0.0, 1.0, opts).value;
}

}  // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Law of the invariant U on the LT(p) cross section:
 * prod_i s_ii(U)^{2(a+b)+p-2i+1} det(U)^{a-(p+1)/2} det(I-U)^{b-(p+1)/2}
 * up to the constant 2^p c0.
 *
 * With S = I the normalizer is the multivariate beta function. Otherwise it
 * is computed by cubature for p <= 2; larger p is shape-only.
 */
class MatrixBetaLaw {
 public:
  MatrixBetaLaw(int p, double a, double b, TriangularMap s_map = {})
      : p_(p), a_(a), b_(b), s_map_(std::move(s_map)) {
    detail::check_shape_parameters(p, a, b);
    if (!s_map_) {
      log_normalizer_ = -log_multivariate_beta(p, a, b);
    } else if (p == 1) {
      auto f = [&](double u) {
        Matrix m(1, 1);
        m << u;
        return shape(m);
      };
      QuadratureOptions opts;
      opts.rel_tol = 1e-10;
      log_normalizer_ = -std::log(integrate(f, 0.0, 1.0, opts).value);
    } else if (p == 2) {
      log_normalizer_ = -std::log(detail::integrate_beta_region_p2(
          [&](const Matrix& u) { return shape_unchecked(u); }));
    }
  }

  int dim() const { return p_; }
  bool normalized() const { return log_normalizer_.has_value(); }
  std::optional<double> log_normalizer() const { return log_normalizer_; }

  /// Throws OutOfRange unless U is symmetric with eigenvalues in (0, 1).
  double shape(const Matrix& u) const {
    require(u.rows() == p_ && u.cols() == p_, ErrorCode::DimensionMismatch,
            "U has the wrong shape");
    require(is_symmetric(u, 1e-10), ErrorCode::OutOfRange, "U must be symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (u + u.transpose()));
    require(eig.eigenvalues().minCoeff() > 0.0 && eig.eigenvalues().maxCoeff() < 1.0,
            ErrorCode::OutOfRange, "U must satisfy 0 < U < I");
    return shape_unchecked(u);
  }

  /// Normalized density when available, otherwise the shape.
  double operator()(const Matrix& u) const {
    const double s = shape(u);
    return log_normalizer_ ? s * std::exp(*log_normalizer_) : s;
  }

  double shape_unchecked(const Matrix& u) const {
    const Matrix eye = Matrix::Identity(p_, p_);
    const double det_u = u.determinant();
    const double det_v = (eye - u).determinant();
    if (!(det_u > 0.0) || !(det_v > 0.0)) return 0.0;
    const double off = 0.5 * (p_ + 1);
    double out = std::pow(det_u, a_ - off) * std::pow(det_v, b_ - off);
    if (s_map_) {
      const Matrix s = s_map_(u);
      for (int i = 0; i < p_; ++i)
        out *= std::pow(s(i, i), 2.0 * (a_ + b_) + p_ - 2.0 * (i + 1) + 1.0);
    }
    return out;
  }

 private:
  int p_;
  double a_, b_;
  TriangularMap s_map_;
  std::optional<double> log_normalizer_;
};

/// f_G(G) prod_i g_ii^{2(a+b)-i}, the shape of the equivariant part's law.
inline double equivariant_density_lt(const Matrix& g, double a, double b,
                                     const GroupFunction& f_g) {
  require(is_lower_triangular_positive(g), ErrorCode::NotTriangular,
          "G must be lower triangular with positive diagonal");
  double out = f_g(g);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    out *= std::pow(g(i, i), 2.0 * (a + b) - static_cast<double>(i + 1));
  return out;
}

struct SignProbeReport {
  std::size_t probes = 0;
  double max_rel_deviation = 0.0;
  std::string warning;  // empty when no probe detected a dependence
  bool invariant() const { return warning.empty(); }
};

/*!
 * Probe whether t(B) ignores the sign of each column of B by comparing
 * t(B) with t(B E) for random sign matrices E at the given points. A clean
 * report is evidence, not proof: only the probed points are examined.
 */
inline SignProbeReport probe_column_sign_invariance(const GroupFunction& t,
                                                    const std::vector<Matrix>& points,
                                                    Rng& rng, std::size_t flips_per_point = 8,
                                                    double rel_tol = 1e-10) {
  SignProbeReport rep;
  for (const auto& b : points) {
    const double base = t(b);
    for (std::size_t k = 0; k < flips_per_point; ++k) {
      Matrix flipped = b;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (uniform01(rng) < 0.5) flipped.col(j) = -flipped.col(j);
      const double v = t(flipped);
      const double dev = std::abs(v - base) / std::max(std::abs(base), 1e-300);
      rep.max_rel_deviation = std::max(rep.max_rel_deviation, dev);
      ++rep.probes;
    }
  }
  if (rep.max_rel_deviation > rel_tol)
    rep.warning = "t(B) changed under a column sign flip (max relative deviation " +
                  std::to_string(rep.max_rel_deviation) +
                  "); the ordered-root law assumes it does not";
  return rep;
}

//---------------------------------------------------------------------------//
/*!
 * Law of the ordered roots l_1 > ... > l_p of det(W1 - l(W1+W2)) = 0:
 * |det P(L)|^{2(a+b)} prod l_i^{a-(p+1)/2} prod (1-l_i)^{b-(p+1)/2}
 * prod_{i<j} (l_i - l_j), up to 2^p c0.
 *
 * The normalizer is computed by nested adaptive quadrature over the ordered
 * simplex for p <= 3.
 */
class EigenvalueLaw {
 public:
  EigenvalueLaw(int p, double a, double b, NormalizerMap normalizer = {})
      : p_(p), a_(a), b_(b), normalizer_(std::move(normalizer)) {
    detail::check_shape_parameters(p, a, b);
    if (p <= 3) {
      Vector l(p);
      QuadratureOptions opts;
      opts.abs_tol = 1e-13;
      opts.rel_tol = 1e-9;
      std::function<double(int, double)> level = [&](int i, double upper) -> double {
        auto f = [&](double x) {
          l[i] = x;
          return i + 1 == p_ ? shape_unchecked(l) : level(i + 1, x);
        };
        return integrate(f, 0.0, upper, opts).value;
      };
      log_normalizer_ = -std::log(level(0, 1.0));
    }
  }

  int dim() const { return p_; }
  bool normalized() const { return log_normalizer_.has_value(); }
  std::optional<double> log_normalizer() const { return log_normalizer_; }

  double shape(const Vector& l) const {
    require(l.size() == p_, ErrorCode::DimensionMismatch, "wrong number of roots");
    for (int i = 0; i < p_; ++i)
      require(l[i] > 0.0 && l[i] < 1.0, ErrorCode::OutOfRange,
              "roots must lie in (0, 1)");
    for (int i = 0; i + 1 < p_; ++i)
      require(l[i] > l[i + 1], ErrorCode::NotOrdered,
              "roots must be strictly decreasing");
    return shape_unchecked(l);
  }

  double operator()(const Vector& l) const {
    const double s = shape(l);
    return log_normalizer_ ? s * std::exp(*log_normalizer_) : s;
  }

  /// |det P(L)|^{2(a+b)}; one without a normalizer map.
  double twist_factor(const Vector& l) const {
    if (!normalizer_) return 1.0;
    const Matrix pm = normalizer_(Matrix(l.asDiagonal()));
    require(is_monomial(pm), ErrorCode::InvalidParameter,
            "P(L) must have exactly one nonzero entry per row and column");
    return std::pow(std::abs(pm.determinant()), 2.0 * (a_ + b_));
  }

  double shape_unchecked(const Vector& l) const {
    const double off = 0.5 * (p_ + 1);
    double out = twist_factor(l);
    for (int i = 0; i < p_; ++i) {
      if (!(l[i] > 0.0 && l[i] < 1.0)) return 0.0;
      out *= std::pow(l[i], a_ - off) * std::pow(1.0 - l[i], b_ - off);
      for (int j = i + 1; j < p_; ++j) out *= (l[i] - l[j]);
    }
    return out;
  }

 private:
  int p_;
  double a_, b_;
  NormalizerMap normalizer_;
  std::optional<double> log_normalizer_;
};

//---------------------------------------------------------------------------//
// Cross-section globality
//---------------------------------------------------------------------------//

enum class Group { LT, GL };

struct CrossSectionReport {
  Group group = Group::GL;
  std::size_t points = 0;
  /// Number of sign matrices diag(+-1) fixing each point (GL only).
  std::vector<int> isotropy_sizes;
  std::vector<std::string> violations;
  bool clean() const { return violations.empty(); }
};

/*!
 * Check that a set of cross-section points is consistent with a global cross
 * section.
 *
 * GL: every point's isotropy within the sign group {diag(+-1)} must be the
 * whole group (tested exhaustively over the 2^p sign matrices), and no two
 * points may share an orbit (equal roots). LT: the action is free; each
 * point's Cholesky factor must exist (so the stabilizer is trivial) and no
 * two points may share the invariant U.
 */
inline CrossSectionReport verify_global_cross_section(
    const std::vector<PDPair>& points, Group group, double tol = 1e-9) {
  CrossSectionReport rep;
  rep.group = group;
  rep.points = points.size();
  std::vector<Vector> invariants;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& pt = points[k];
    const int p = pt.dim();
    const std::string where = "point " + std::to_string(k) + ": ";
    if (group == Group::GL) {
      const int total = 1 << p;
      int fixing = 0;
      for (int mask = 0; mask < total; ++mask) {
        Vector signs(p);
        for (int i = 0; i < p; ++i) signs[i] = (mask >> i) & 1 ? -1.0 : 1.0;
        const Matrix e = signs.asDiagonal();
        const double scale = std::max(pt.w1.norm(), pt.w2.norm());
        if ((e * pt.w1 * e - pt.w1).norm() <= tol * scale &&
            (e * pt.w2 * e - pt.w2).norm() <= tol * scale)
          ++fixing;
      }
      rep.isotropy_sizes.push_back(fixing);
      if (fixing != total)
        rep.violations.push_back(
            where + "isotropy subgroup differs from the sign group (" +
            std::to_string(fixing) + " of " + std::to_string(total) +
            " sign matrices fix the point)");
      try {
        invariants.push_back(gl_orbital_decompose(pt).l);
      } catch (const Error& e) {
        rep.violations.push_back(where + e.what());
        invariants.emplace_back();
      }
    } else {
      try {
        auto d = lt_orbital_decompose(pt);
        Vector u(p * (p + 1) / 2);
        int idx = 0;
        for (int i = 0; i < p; ++i)
          for (int j = i; j < p; ++j) u[idx++] = d.U(i, j);
        invariants.push_back(u);
        rep.isotropy_sizes.push_back(1);
      } catch (const Error& e) {
        rep.violations.push_back(where + e.what());
        invariants.emplace_back();
        rep.isotropy_sizes.push_back(0);
      }
    }
  }
  for (std::size_t i = 0; i < invariants.size(); ++i)
    for (std::size_t j = i + 1; j < invariants.size(); ++j)
      if (invariants[i].size() > 0 && invariants[i].size() == invariants[j].size() &&
          (invariants[i] - invariants[j]).norm() <= tol)
        rep.violations.push_back("points " + std::to_string(i) + " and " +
                                 std::to_string(j) + " lie on the same orbit");
  return rep;
}

}  // namespace starshape::matrix
