// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "starshape/error.hpp"
#include "starshape/linalg.hpp"
#include "starshape/quadrature.hpp"
#include "starshape/random.hpp"

namespace starshape {

/// Density on the unit sphere, evaluated at a unit vector.
using DirectionDensityFn = std::function<double(const Vector&)>;

namespace gauges {

struct Elliptical {
  Matrix sigma;
  Matrix sigma_inv;
  double det_sigma = 1.0;
};

struct SupNorm {};

struct L1Norm {};

/// g(x) = max_j <a_j, x>.
struct Polytope {
  std::vector<Vector> facets;
  std::vector<Vector> vertices;  // of the unit body {g <= 1}
};

/*!
 * Planar gauge from a table of radii r_k along angles theta_k, g(u_k) = 1/r_k.
 *
 * The radius is interpolated by a periodic cubic spline in angle.
 */
struct TabulatedRadial {
  std::vector<double> angles;
  std::vector<double> radii;
  std::vector<double> second_derivs;

  double radius(double theta) const {
    const std::size_t n = angles.size();
    theta = std::fmod(theta - angles.front(), kTwoPi);
    if (theta < 0.0) theta += kTwoPi;
    theta += angles.front();
    auto it = std::upper_bound(angles.begin(), angles.end(), theta);
    std::size_t k = it == angles.begin() ? n - 1
                                         : static_cast<std::size_t>(
                                               it - angles.begin() - 1);
    const std::size_t k1 = (k + 1) % n;
    const double left = angles[k];
    double right = k1 == 0 ? angles[0] + kTwoPi : angles[k1];
    if (theta < left) theta += kTwoPi;
    const double h = right - left;
    const double a = right - theta;
    const double b = theta - left;
    return second_derivs[k] * a * a * a / (6.0 * h) +
           second_derivs[k1] * b * b * b / (6.0 * h) +
           (radii[k] / h - second_derivs[k] * h / 6.0) * a +
           (radii[k1] / h - second_derivs[k1] * h / 6.0) * b;
  }
};

/// g(x) = |x| f(x/|x|)^{-1/p} for a caller-supplied direction density f.
struct DirectionDerived {
  DirectionDensityFn density;
};

}  // namespace gauges

enum class GaugeKind {
  Elliptical,
  SupNorm,
  L1Norm,
  Polytope,
  TabulatedRadial,
  DirectionDerived
};

constexpr std::string_view to_string(GaugeKind kind) {
  switch (kind) {
    case GaugeKind::Elliptical: return "elliptical";
    case GaugeKind::SupNorm: return "sup";
    case GaugeKind::L1Norm: return "l1";
    case GaugeKind::Polytope: return "polytope";
    case GaugeKind::TabulatedRadial: return "tabulated";
    case GaugeKind::DirectionDerived: return "direction-derived";
  }
  return "unknown";
}

struct SphereBounds {
  double g_min = 0.0;
  double g_max = 0.0;
};

//---------------------------------------------------------------------------//
/*!
 * A positively homogeneous, degree-one, positive function on R^p \ {0}.
 *
 * Descriptors are immutable after construction; construction validates the
 * variant's invariants (positive-definite sigma, origin inside the polytope,
 * positive radii).
 */
class GaugeDescriptor {
 public:
  using Variant =
      std::variant<gauges::Elliptical, gauges::SupNorm, gauges::L1Norm,
                   gauges::Polytope, gauges::TabulatedRadial,
                   gauges::DirectionDerived>;

  static GaugeDescriptor elliptical(const Matrix& sigma);
  static GaugeDescriptor sup_norm(int dim);
  static GaugeDescriptor l1_norm(int dim);
  static GaugeDescriptor polytope(std::vector<Vector> facets);
  static GaugeDescriptor tabulated(std::vector<double> angles,
                                   std::vector<double> radii);
  /// Unvalidated; prefer gauge_from_direction_density().
  static GaugeDescriptor direction_derived(DirectionDensityFn f, int dim);

  int dim() const { return dim_; }
  GaugeKind kind() const { return static_cast<GaugeKind>(impl_->index()); }
  const Variant& variant() const { return *impl_; }

  template <class T>
  const T& as() const {
    return std::get<T>(*impl_);
  }

  /// Inputs with max |x_i| below this are rejected as the origin.
  double zero_threshold() const { return zero_threshold_; }
  GaugeDescriptor with_zero_threshold(double eps) const {
    GaugeDescriptor copy = *this;
    copy.zero_threshold_ = eps;
    return copy;
  }

  bool is_convex() const {
    return kind() != GaugeKind::TabulatedRadial &&
           kind() != GaugeKind::DirectionDerived;
  }

 private:
  GaugeDescriptor(int dim, Variant v)
      : dim_(dim), impl_(std::make_shared<const Variant>(std::move(v))) {}

  int dim_ = 0;
  std::shared_ptr<const Variant> impl_;
  double zero_threshold_ = 1e-300;
};

namespace detail {

inline void check_point(const GaugeDescriptor& desc, const Vector& x) {
  require(x.size() == desc.dim(), ErrorCode::DimensionMismatch,
          "point has " + std::to_string(x.size()) +
              " coordinates, gauge dimension is " +
              std::to_string(desc.dim()));
  require(x.size() > 0 && x.lpNorm<Eigen::Infinity>() >= desc.zero_threshold(),
          ErrorCode::ZeroVector, "gauge undefined at the origin");
}

inline double raw_eval(const GaugeDescriptor& desc, const Vector& x) {
  using namespace gauges;
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Elliptical>) {
          return std::sqrt(x.dot(v.sigma_inv * x));
        } else if constexpr (std::is_same_v<T, SupNorm>) {
          return x.lpNorm<Eigen::Infinity>();
        } else if constexpr (std::is_same_v<T, L1Norm>) {
          return x.lpNorm<1>();
        } else if constexpr (std::is_same_v<T, Polytope>) {
          double best = -std::numeric_limits<double>::infinity();
          for (const auto& a : v.facets) best = std::max(best, a.dot(x));
          return best;
        } else if constexpr (std::is_same_v<T, TabulatedRadial>) {
          return x.norm() / v.radius(polar_angle(x[0], x[1]));
        } else {
          const double norm = x.norm();
          const double f = v.density(x / norm);
          return norm * std::pow(f, -1.0 / static_cast<double>(x.size()));
        }
      },
      desc.variant());
}

inline std::vector<double> solve_tridiagonal(std::vector<double> sub,
                                             std::vector<double> diag,
                                             std::vector<double> sup,
                                             std::vector<double> rhs) {
  const std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    x[i] = (rhs[i] - sup[i] * x[i + 1]) / diag[i];
  return x;
}

// Periodic cubic spline second derivatives: cyclic tridiagonal system solved
// by the Sherman-Morrison correction.
inline std::vector<double> periodic_spline_second_derivs(
    const std::vector<double>& t, const std::vector<double>& y) {
  const std::size_t n = t.size();
  std::vector<double> h(n);
  for (std::size_t k = 0; k < n; ++k)
    h[k] = (k + 1 < n ? t[k + 1] : t[0] + kTwoPi) - t[k];
  std::vector<double> sub(n), diag(n), sup(n), rhs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t prev = (k + n - 1) % n;
    const std::size_t next = (k + 1) % n;
    sub[k] = h[prev];
    diag[k] = 2.0 * (h[prev] + h[k]);
    sup[k] = h[k];
    rhs[k] = 6.0 * ((y[next] - y[k]) / h[k] - (y[k] - y[prev]) / h[prev]);
  }
  const double alpha = sub[0];      // row 0, column n-1
  const double beta = sup[n - 1];   // row n-1, column 0
  const double gamma = -diag[0];
  std::vector<double> mod = diag;
  mod[0] -= gamma;
  mod[n - 1] -= alpha * beta / gamma;
  auto x = solve_tridiagonal(sub, mod, sup, rhs);
  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = beta;
  auto z = solve_tridiagonal(sub, mod, sup, u);
  const double factor = (x[0] + alpha * x[n - 1] / gamma) /
                        (1.0 + z[0] + alpha * z[n - 1] / gamma);
  for (std::size_t k = 0; k < n; ++k) x[k] -= factor * z[k];
  return x;
}

inline std::vector<Vector> polytope_vertices(const std::vector<Vector>& facets,
                                             int p) {
  const int m = static_cast<int>(facets.size());
  std::vector<Vector> vertices;
  std::vector<int> idx(static_cast<std::size_t>(p));
  std::iota(idx.begin(), idx.end(), 0);
  if (m < p) return vertices;
  for (;;) {
    Matrix a(p, p);
    for (int r = 0; r < p; ++r) a.row(r) = facets[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])].transpose();
    Eigen::FullPivLU<Matrix> lu(a);
    if (lu.isInvertible()) {
      Vector x = lu.solve(Vector::Ones(p));
      double worst = -std::numeric_limits<double>::infinity();
      for (const auto& f : facets) worst = std::max(worst, f.dot(x));
      if (worst <= 1.0 + 1e-9) {
        bool duplicate = false;
        for (const auto& v : vertices)
          if ((v - x).norm() <= 1e-9 * (1.0 + x.norm())) duplicate = true;
        if (!duplicate) vertices.push_back(x);
      }
    }
    int k = p - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == m - p + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < p; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return vertices;
}

}  // namespace detail

//---------------------------------------------------------------------------//
// Construction
//---------------------------------------------------------------------------//
inline GaugeDescriptor GaugeDescriptor::elliptical(const Matrix& sigma) {
  require(sigma.rows() >= 1 && sigma.rows() == sigma.cols(),
          ErrorCode::InvalidParameter, "sigma must be a square matrix");
  const double scale = std::max(1.0, sigma.cwiseAbs().maxCoeff());
  require((sigma - sigma.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale,
          ErrorCode::InvalidParameter, "sigma must be symmetric");
  Matrix sym = 0.5 * (sigma + sigma.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
  require(eig.eigenvalues().minCoeff() > 0.0, ErrorCode::InvalidParameter,
          "sigma must be positive definite");
  gauges::Elliptical e;
  e.sigma = sym;
  e.sigma_inv = sym.inverse();
  e.sigma_inv = 0.5 * (e.sigma_inv + e.sigma_inv.transpose()).eval();
  e.det_sigma = eig.eigenvalues().prod();
  return GaugeDescriptor(static_cast<int>(sym.rows()), std::move(e));
}

inline GaugeDescriptor GaugeDescriptor::sup_norm(int dim) {
  require(dim >= 1, ErrorCode::InvalidParameter, "dim must be >= 1");
  return GaugeDescriptor(dim, gauges::SupNorm{});
}

inline GaugeDescriptor GaugeDescriptor::l1_norm(int dim) {
  require(dim >= 1, ErrorCode::InvalidParameter, "dim must be >= 1");
  return GaugeDescriptor(dim, gauges::L1Norm{});
}

inline GaugeDescriptor GaugeDescriptor::polytope(std::vector<Vector> facets) {
  require(!facets.empty(), ErrorCode::InvalidParameter,
          "polytope needs at least one facet");
  const int p = static_cast<int>(facets.front().size());
  require(p >= 1, ErrorCode::InvalidParameter, "facets must be non-empty");
  for (const auto& a : facets)
    require(a.size() == p, ErrorCode::DimensionMismatch,
            "all facet functionals must share one dimension");
  require(static_cast<int>(facets.size()) > p, ErrorCode::InvalidParameter,
          "a bounded polytope needs more than p facets");
  gauges::Polytope poly;
  poly.facets = std::move(facets);
  poly.vertices = detail::polytope_vertices(poly.facets, p);
  require(static_cast<int>(poly.vertices.size()) > p,
          ErrorCode::InvalidParameter,
          "facets do not bound a polytope around the origin");
  GaugeDescriptor desc(p, std::move(poly));
  // Origin strictly inside: g > 0 on probes of the sphere, including the
  // directions opposite to each facet normal.
  const auto& pf = desc.as<gauges::Polytope>();
  std::vector<Vector> probes;
  for (const auto& a : pf.facets) probes.push_back(-a.normalized());
  for (const auto& v : pf.vertices) probes.push_back(v.normalized());
  Rng rng(0x9a0e, 0);
  const int random_probes = p == 2 ? 0 : 20000;
  if (p == 2)
    for (int k = 0; k < 4096; ++k) probes.push_back(unit_vector_at(kTwoPi * k / 4096.0));
  for (int k = 0; k < random_probes; ++k) probes.push_back(uniform_on_sphere(rng, p));
  for (const auto& u : probes)
    require(detail::raw_eval(desc, u) > 0.0, ErrorCode::InvalidParameter,
            "origin is not strictly inside the polytope");
  return desc;
}

inline GaugeDescriptor GaugeDescriptor::tabulated(std::vector<double> angles,
                                                  std::vector<double> radii) {
  require(angles.size() == radii.size(), ErrorCode::DimensionMismatch,
          "angles and radii must have equal length");
  require(angles.size() >= 4, ErrorCode::InvalidParameter,
          "tabulated gauge needs at least 4 directions");
  std::vector<std::size_t> order(angles.size());
  std::iota(order.begin(), order.end(), 0);
  for (auto& t : angles) {
    require(std::isfinite(t), ErrorCode::InvalidParameter, "angle not finite");
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return angles[i] < angles[j]; });
  gauges::TabulatedRadial tab;
  for (auto i : order) {
    require(radii[i] > 0.0 && std::isfinite(radii[i]), ErrorCode::NonPositive,
            "tabulated radii must be positive");
    if (!tab.angles.empty())
      require(angles[i] - tab.angles.back() > 1e-12,
              ErrorCode::InvalidParameter, "duplicate tabulated angle");
    tab.angles.push_back(angles[i]);
    tab.radii.push_back(radii[i]);
  }
  require(tab.angles.front() + kTwoPi - tab.angles.back() > 1e-12,
          ErrorCode::InvalidParameter, "duplicate tabulated angle");
  tab.second_derivs =
      detail::periodic_spline_second_derivs(tab.angles, tab.radii);
  const std::size_t checks = 64 * tab.angles.size();
  for (std::size_t k = 0; k < checks; ++k)
    require(tab.radius(kTwoPi * static_cast<double>(k) / static_cast<double>(checks)) > 0.0,
            ErrorCode::NonPositive, "interpolated radius is not positive");
  return GaugeDescriptor(2, std::move(tab));
}

inline GaugeDescriptor GaugeDescriptor::direction_derived(DirectionDensityFn f,
                                                          int dim) {
  require(dim >= 1, ErrorCode::InvalidParameter, "dim must be >= 1");
  require(static_cast<bool>(f), ErrorCode::InvalidParameter,
          "direction density handle is empty");
  return GaugeDescriptor(dim, gauges::DirectionDerived{std::move(f)});
}

//---------------------------------------------------------------------------//
// Operations
//---------------------------------------------------------------------------//
inline double gauge_eval(const GaugeDescriptor& desc, const Vector& x) {
  detail::check_point(desc, x);
  return detail::raw_eval(desc, x);
}

struct GradientOptions {
  /// Raise NonSmoothPoint at facet ridges instead of tie-breaking.
  bool strict = false;
  /// Relative tie tolerance between facet values.
  double tie_tol = 1e-9;
};

/*!
 * Gradient of the gauge at x.
 *
 * Piecewise-linear variants return the active facet functional, breaking
 * ties toward the lowest facet index. Tabulated and direction-derived gauges
 * use central differences with step 1e-6 * max(1, |x|).
 */
inline Vector gauge_gradient(const GaugeDescriptor& desc, const Vector& x,
                             const GradientOptions& opts = {}) {
  detail::check_point(desc, x);
  const int p = desc.dim();
  using namespace gauges;
  auto non_smooth = [&] {
    fail(ErrorCode::NonSmoothPoint, "point lies on a facet ridge");
  };
  return std::visit(
      [&](const auto& v) -> Vector {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Elliptical>) {
          Vector sx = v.sigma_inv * x;
          return sx / std::sqrt(x.dot(sx));
        } else if constexpr (std::is_same_v<T, SupNorm>) {
          const double g = x.lpNorm<Eigen::Infinity>();
          Vector grad = Vector::Zero(p);
          int active = -1, ties = 0;
          for (int i = 0; i < p; ++i) {
            if (std::abs(x[i]) >= g * (1.0 - opts.tie_tol)) {
              if (active < 0) active = i;
              ++ties;
            }
          }
          if (opts.strict && ties > 1) non_smooth();
          grad[active] = x[active] >= 0.0 ? 1.0 : -1.0;
          return grad;
        } else if constexpr (std::is_same_v<T, L1Norm>) {
          const double g = x.lpNorm<1>();
          Vector grad(p);
          for (int i = 0; i < p; ++i) {
            const bool on_ridge = std::abs(x[i]) <= opts.tie_tol * g;
            if (opts.strict && on_ridge) non_smooth();
            grad[i] = (on_ridge || x[i] > 0.0) ? 1.0 : -1.0;
          }
          return grad;
        } else if constexpr (std::is_same_v<T, Polytope>) {
          const double g = detail::raw_eval(desc, x);
          const double cut = g - opts.tie_tol * std::abs(g);
          std::size_t active = v.facets.size();
          int ties = 0;
          for (std::size_t j = 0; j < v.facets.size(); ++j) {
            if (v.facets[j].dot(x) >= cut) {
              if (active == v.facets.size()) active = j;
              ++ties;
            }
          }
          if (opts.strict && ties > 1) non_smooth();
          return v.facets[active];
        } else {
          const double h = 1e-6 * std::max(1.0, x.norm());
          Vector grad(p);
          Vector probe = x;
          for (int i = 0; i < p; ++i) {
            probe[i] = x[i] + h;
            const double up = detail::raw_eval(desc, probe);
            probe[i] = x[i] - h;
            const double down = detail::raw_eval(desc, probe);
            probe[i] = x[i];
            grad[i] = (up - down) / (2.0 * h);
          }
          return grad;
        }
      },
      desc.variant());
}

inline Vector outward_normal(const GaugeDescriptor& desc, const Vector& x,
                             const GradientOptions& opts = {}) {
  return gauge_gradient(desc, x, opts).normalized();
}

/// z = x / g(x), the point of the unit cross section on the ray through x.
inline Vector unit_cross_section_point(const GaugeDescriptor& desc,
                                       const Vector& x) {
  return x / gauge_eval(desc, x);
}

/// Polar angles in [0, 2pi) where a planar piecewise-linear gauge has kinks.
inline std::vector<double> kink_angles(const GaugeDescriptor& desc) {
  std::vector<double> out;
  if (desc.dim() != 2) return out;
  switch (desc.kind()) {
    case GaugeKind::SupNorm:
      for (int k = 0; k < 4; ++k) out.push_back(kPi / 4.0 + k * kPi / 2.0);
      break;
    case GaugeKind::L1Norm:
      for (int k = 0; k < 4; ++k) out.push_back(k * kPi / 2.0);
      break;
    case GaugeKind::Polytope:
      for (const auto& v : desc.as<gauges::Polytope>().vertices)
        out.push_back(polar_angle(v[0], v[1]));
      break;
    default:
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Dense-grid bounds for planar gauges, widened by ten times the largest
// step between neighbouring grid values.
inline SphereBounds planar_grid_bounds(const GaugeDescriptor& desc,
                                       std::size_t points) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  double step = 0.0;
  double prev = raw_eval(desc, unit_vector_at(0.0));
  const double first = prev;
  for (std::size_t k = 0; k < points; ++k) {
    const double g = raw_eval(
        desc, unit_vector_at(kTwoPi * static_cast<double>(k + 1) /
                             static_cast<double>(points)));
    lo = std::min(lo, g);
    hi = std::max(hi, g);
    step = std::max(step, std::abs(g - prev));
    prev = g;
  }
  lo = std::min(lo, first);
  hi = std::max(hi, first);
  const double margin = 10.0 * step;
  return {lo - margin > 0.0 ? lo - margin : 0.5 * lo, hi + margin};
}

inline SphereBounds random_search_bounds(const GaugeDescriptor& desc,
                                         std::size_t points) {
  const int p = desc.dim();
  Rng rng(0xb0d5, 0);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  double lipschitz = 0.0;
  for (std::size_t k = 0; k < points; ++k) {
    Vector u = uniform_on_sphere(rng, p);
    const double g = raw_eval(desc, u);
    lo = std::min(lo, g);
    hi = std::max(hi, g);
    if (k % 16 == 0) {
      Vector grad = gauge_gradient(desc, u);
      lipschitz = std::max(lipschitz, (grad - grad.dot(u) * u).norm());
    }
  }
  const double spacing =
      std::pow(sphere_area(p) / static_cast<double>(points), 1.0 / (p - 1));
  const double margin = 10.0 * lipschitz * spacing;
  return {lo - margin > 0.0 ? lo - margin : 0.1 * lo, hi + margin};
}

}  // namespace detail

/// Conservative bounds on g over the unit sphere.
inline SphereBounds sphere_bounds(const GaugeDescriptor& desc) {
  const int p = desc.dim();
  using namespace gauges;
  return std::visit(
      [&](const auto& v) -> SphereBounds {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Elliptical>) {
          Eigen::SelfAdjointEigenSolver<Matrix> eig(v.sigma);
          return {1.0 / std::sqrt(eig.eigenvalues().maxCoeff()),
                  1.0 / std::sqrt(eig.eigenvalues().minCoeff())};
        } else if constexpr (std::is_same_v<T, SupNorm>) {
          return {1.0 / std::sqrt(static_cast<double>(p)), 1.0};
        } else if constexpr (std::is_same_v<T, L1Norm>) {
          return {1.0, std::sqrt(static_cast<double>(p))};
        } else if constexpr (std::is_same_v<T, Polytope>) {
          // Extremes of g on the sphere: the farthest vertex and the nearest
          // facet hyperplane of {g <= 1}.
          double far = 0.0, g_max = 0.0;
          for (const auto& x : v.vertices) far = std::max(far, x.norm());
          for (const auto& a : v.facets) g_max = std::max(g_max, a.norm());
          return {1.0 / far, g_max};
        } else if constexpr (std::is_same_v<T, TabulatedRadial>) {
          return detail::planar_grid_bounds(desc, 64 * v.angles.size());
        } else {
          if (p == 1) {
            Vector plus(1), minus(1);
            plus << 1.0;
            minus << -1.0;
            const double a = detail::raw_eval(desc, plus);
            const double b = detail::raw_eval(desc, minus);
            return {std::min(a, b), std::max(a, b)};
          }
          if (p == 2) return detail::planar_grid_bounds(desc, 1u << 16);
          return detail::random_search_bounds(desc, 20000);
        }
      },
      desc.variant());
}

struct DirectionDensityCheck {
  std::uint64_t seed = 0x5eed;
  std::size_t monte_carlo_points = 100000;
  std::size_t planar_panels = 1u << 14;
  double tolerance = 0.01;
};

/*!
 * Gauge whose induced direction law is the given sphere density,
 * g(x) = |x| f(x/|x|)^{-1/p}.
 *
 * The density must be positive and integrate to one against the sphere's
 * surface measure; both are checked numerically, not enforced.
 */
inline GaugeDescriptor gauge_from_direction_density(
    DirectionDensityFn f, int dim, const DirectionDensityCheck& check = {}) {
  require(dim >= 2, ErrorCode::InvalidParameter,
          "direction densities need dim >= 2");
  require(static_cast<bool>(f), ErrorCode::InvalidParameter,
          "direction density handle is empty");
  double total = 0.0;
  auto probe = [&](const Vector& u) {
    const double v = f(u);
    require(v > 0.0 && std::isfinite(v), ErrorCode::NonPositive,
            "direction density must be positive");
    return v;
  };
  if (dim == 2) {
    total = simpson([&](double t) { return probe(unit_vector_at(t)); }, 0.0,
                    kTwoPi, check.planar_panels);
  } else {
    Rng rng(check.seed, 0);
    double sum = 0.0;
    for (std::size_t k = 0; k < check.monte_carlo_points; ++k)
      sum += probe(uniform_on_sphere(rng, dim));
    total = sphere_area(dim) * sum / static_cast<double>(check.monte_carlo_points);
  }
  require(std::abs(total - 1.0) <= check.tolerance, ErrorCode::NotADensity,
          "direction density integrates to " + std::to_string(total));
  return GaugeDescriptor::direction_derived(std::move(f), dim);
}

}  // namespace starshape
