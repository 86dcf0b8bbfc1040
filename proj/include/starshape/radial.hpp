// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "starshape/error.hpp"
#include "starshape/quadrature.hpp"
#include "starshape/random.hpp"

namespace starshape {

enum class RadialFamily { Gaussian, Exponential, Kotz, HeavyTail };

constexpr std::string_view to_string(RadialFamily family) {
  switch (family) {
    case RadialFamily::Gaussian: return "gaussian";
    case RadialFamily::Exponential: return "exponential";
    case RadialFamily::Kotz: return "kotz";
    case RadialFamily::HeavyTail: return "heavytail";
  }
  return "unknown";
}

//---------------------------------------------------------------------------//
/*!
 * Unnormalized scalar profile f_G on (0, inf).
 *
 * - Gaussian(sigma):     exp(-g^2 / (2 sigma^2))
 * - Exponential(rate):   exp(-rate g)
 * - Kotz(s, r, t):       g^s exp(-r g^t)
 * - HeavyTail(nu):       (1 + g^2)^{-(p + nu)/2}, p supplied at evaluation
 *
 * An optional multiplicative constant `norm` lets callers fold a known
 * normalizer (e.g. the multivariate normal constant) into f_G.
 */
struct RadialProfile {
  RadialFamily family = RadialFamily::Gaussian;
  double sigma = 1.0;
  double rate = 1.0;
  double s = 0.0;
  double r = 1.0;
  double t = 1.0;
  double nu = 1.0;
  std::optional<double> norm;

  static RadialProfile gaussian(double sigma, std::optional<double> norm = {}) {
    RadialProfile p;
    p.family = RadialFamily::Gaussian;
    p.sigma = sigma;
    p.norm = norm;
    p.validate();
    return p;
  }
  static RadialProfile exponential(double rate,
                                   std::optional<double> norm = {}) {
    RadialProfile p;
    p.family = RadialFamily::Exponential;
    p.rate = rate;
    p.norm = norm;
    p.validate();
    return p;
  }
  static RadialProfile kotz(double s, double r, double t,
                            std::optional<double> norm = {}) {
    RadialProfile p;
    p.family = RadialFamily::Kotz;
    p.s = s;
    p.r = r;
    p.t = t;
    p.norm = norm;
    p.validate();
    return p;
  }
  static RadialProfile heavy_tail(double nu, std::optional<double> norm = {}) {
    RadialProfile p;
    p.family = RadialFamily::HeavyTail;
    p.nu = nu;
    p.norm = norm;
    p.validate();
    return p;
  }

  RadialProfile with_norm(std::optional<double> value) const {
    RadialProfile copy = *this;
    copy.norm = value;
    copy.validate();
    return copy;
  }

  void validate() const {
    auto positive = [](double v, const char* name) {
      require(v > 0.0 && std::isfinite(v), ErrorCode::InvalidParameter,
              std::string(name) + " must be positive and finite");
    };
    switch (family) {
      case RadialFamily::Gaussian: positive(sigma, "sigma"); break;
      case RadialFamily::Exponential: positive(rate, "rate"); break;
      case RadialFamily::Kotz:
        require(s >= 0.0 && std::isfinite(s), ErrorCode::InvalidParameter,
                "kotz s must be >= 0");
        positive(r, "r");
        positive(t, "t");
        break;
      case RadialFamily::HeavyTail:
        require(std::isfinite(nu), ErrorCode::InvalidParameter,
                "nu must be finite");
        require(nu > 0.0, ErrorCode::Divergent,
                "heavy-tail profile with nu <= 0 is not integrable");
        break;
    }
    if (norm) positive(*norm, "norm");
  }

  double scale() const {
    switch (family) {
      case RadialFamily::Gaussian: return sigma;
      case RadialFamily::Exponential: return 1.0 / rate;
      case RadialFamily::Kotz: return std::pow(1.0 / r, 1.0 / t);
      case RadialFamily::HeavyTail: return 1.0;
    }
    return 1.0;
  }

  /// Shape without the norm constant.
  double shape(double g, int p) const {
    switch (family) {
      case RadialFamily::Gaussian:
        return std::exp(-g * g / (2.0 * sigma * sigma));
      case RadialFamily::Exponential: return std::exp(-rate * g);
      case RadialFamily::Kotz:
        return (s == 0.0 ? 1.0 : std::pow(g, s)) * std::exp(-r * std::pow(g, t));
      case RadialFamily::HeavyTail:
        return std::pow(1.0 + g * g, -0.5 * (p + nu));
    }
    return 0.0;
  }

  /// f_G(g) including the norm constant.
  double operator()(double g, int p) const {
    return norm.value_or(1.0) * shape(g, p);
  }
};

namespace detail {

inline double radial_integrand(const RadialProfile& profile, int p, double g) {
  if (g <= 0.0) return 0.0;
  return profile.shape(g, p) * std::pow(g, p - 1);
}

/*!
 * Closed-form or asymptotic value of the tail integral
 * int_G^inf shape(g) g^{p-1} dg.
 *
 * Exact through the upper incomplete gamma function for the gamma-type
 * families; a three-term expansion in 1/G^2 for the heavy-tail family, whose
 * remainder is O(G^{-nu-6}).
 */
inline double radial_tail(const RadialProfile& profile, int p, double G) {
  using boost::math::tgamma;
  const double dp = p;
  switch (profile.family) {
    case RadialFamily::Gaussian: {
      const double sig = profile.sigma;
      return std::pow(sig, dp) * std::pow(2.0, 0.5 * dp - 1.0) *
             tgamma(0.5 * dp, G * G / (2.0 * sig * sig));
    }
    case RadialFamily::Exponential:
      return tgamma(dp, profile.rate * G) / std::pow(profile.rate, dp);
    case RadialFamily::Kotz: {
      const double a = (profile.s + dp) / profile.t;
      return tgamma(a, profile.r * std::pow(G, profile.t)) /
             (profile.t * std::pow(profile.r, a));
    }
    case RadialFamily::HeavyTail: {
      const double nu = profile.nu;
      const double m = 0.5 * (dp + nu);
      return std::pow(G, -nu) / nu - m * std::pow(G, -nu - 2.0) / (nu + 2.0) +
             0.5 * m * (m + 1.0) * std::pow(G, -nu - 4.0) / (nu + 4.0);
    }
  }
  return 0.0;
}

// Upper integration limit beyond which the tail is below rel * total.
inline double radial_upper_limit(const RadialProfile& profile, int p,
                                 double total_estimate, double rel) {
  const double scale = profile.scale();
  const double floor = profile.family == RadialFamily::HeavyTail ? 100.0 : 1.0;
  double G = floor * scale;
  for (int k = 0; k < 200; ++k) {
    const double tail = radial_tail(profile, p, G);
    if (tail <= rel * total_estimate) return G;
    if (profile.family == RadialFamily::HeavyTail && G >= 1e8 * scale) return G;
    G *= 2.0;
  }
  return G;
}

inline std::vector<double> geometric_breaks(double scale, double upper) {
  std::vector<double> pts{0.0};
  for (double x = scale * std::pow(2.0, -20); x < upper; x *= 2.0)
    pts.push_back(x);
  pts.push_back(upper);
  return pts;
}

}  // namespace detail

/*!
 * int_0^inf shape(g) g^{p-1} dg, without the norm constant.
 *
 * Adaptive Gauss-Kronrod over geometric panels up to a cutoff where the
 * analytic tail is below 1e-12 of the total, plus that tail.
 */
inline double radial_integral(const RadialProfile& profile, int p) {
  require(p >= 1, ErrorCode::InvalidParameter, "dimension must be >= 1");
  profile.validate();
  if (profile.family == RadialFamily::Kotz)
    require(profile.s + p > 0.0, ErrorCode::Divergent,
            "kotz profile not integrable at the origin");
  const double scale = profile.scale();
  auto f = [&](double g) { return detail::radial_integrand(profile, p, g); };
  QuadratureOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = 1e-13;
  // Rough total to set the cutoff: quadrature over a few scale lengths.
  double rough = integrate(f, 0.0, 4.0 * scale, opts).value;
  if (profile.family != RadialFamily::HeavyTail)
    rough = std::max(rough, detail::radial_tail(profile, p, 0.0));
  require(rough > 0.0 && std::isfinite(rough), ErrorCode::Divergent,
          "radial integral is not positive and finite");
  const double upper = detail::radial_upper_limit(profile, p, rough, 1e-12);
  const auto pts = detail::geometric_breaks(scale, upper);
  opts.abs_tol = 1e-15 * rough;
  opts.rel_tol = 1e-12;
  auto body = integrate_segments(f, pts, opts);
  require(body.converged && body.abs_error <= 1e-9 * body.value,
          ErrorCode::QuadratureFailure,
          "radial quadrature missed the 1e-9 relative target");
  return body.value + detail::radial_tail(profile, p, upper);
}

/// c0 = int_0^inf f_G(g) g^{p-1} dg with f_G including its norm constant.
inline double radial_constant(const RadialProfile& profile, int p) {
  return profile.norm.value_or(1.0) * radial_integral(profile, p);
}

/// (1/c0) f_G(g) g^{p-1}, the density of the length g(x).
inline double radial_density(const RadialProfile& profile, int p, double c0,
                             double g) {
  require(g > 0.0, ErrorCode::NonPositive, "radial density needs g > 0");
  require(c0 > 0.0, ErrorCode::NonPositive, "c0 must be positive");
  return profile(g, p) * std::pow(g, p - 1) / c0;
}

//---------------------------------------------------------------------------//
/*!
 * Tabulated CDF of the radial law on a geometric grid, with monotone cubic
 * Hermite interpolation (node slopes are the exact density, limited by
 * Fritsch-Carlson). Covers all but 1e-10 of the mass on each side; beyond
 * the last node the CDF uses the analytic tail.
 */
class RadialTable {
 public:
  RadialTable() = default;

  static RadialTable build(const RadialProfile& profile, int p,
                           std::size_t count = 4096) {
    require(count >= 16, ErrorCode::InvalidParameter,
            "radial table needs at least 16 nodes");
    RadialTable table;
    table.profile_ = profile;
    table.dim_ = p;
    const double total = radial_integral(profile, p);
    table.total_ = total;
    auto f = [&](double g) { return detail::radial_integrand(profile, p, g); };

    const double hi = detail::radial_upper_limit(profile, p, total, 1e-10);
    QuadratureOptions opts;
    opts.abs_tol = 0.0;
    opts.rel_tol = 1e-12;
    double lo = profile.scale();
    while (lo > 1e-300 && integrate(f, 0.0, lo, opts).value > 1e-10 * total)
      lo *= 0.5;

    table.nodes_.push_back(0.0);
    const double ratio = std::pow(hi / lo, 1.0 / static_cast<double>(count - 2));
    for (std::size_t i = 0; i + 1 < count; ++i)
      table.nodes_.push_back(i + 2 == count ? hi : lo * std::pow(ratio, static_cast<double>(i)));

    table.cdf_.assign(count, 0.0);
    table.slope_.assign(count, 0.0);
    double acc = integrate(f, 0.0, lo, opts).value;
    table.cdf_[1] = acc / total;
    for (std::size_t i = 2; i < count; ++i) {
      acc += detail::kronrod21(f, table.nodes_[i - 1], table.nodes_[i]).value;
      table.cdf_[i] = acc / total;
    }
    for (std::size_t i = 0; i < count; ++i)
      table.slope_[i] = f(table.nodes_[i]) / total;
    // Fritsch-Carlson limiter keeps each cubic piece monotone.
    for (std::size_t i = 0; i + 1 < count; ++i) {
      const double h = table.nodes_[i + 1] - table.nodes_[i];
      const double secant = (table.cdf_[i + 1] - table.cdf_[i]) / h;
      if (secant <= 0.0) {
        table.slope_[i] = table.slope_[i + 1] = 0.0;
        continue;
      }
      const double a = table.slope_[i] / secant;
      const double b = table.slope_[i + 1] / secant;
      const double norm2 = a * a + b * b;
      if (norm2 > 9.0) {
        const double tau = 3.0 / std::sqrt(norm2);
        table.slope_[i] = tau * a * secant;
        table.slope_[i + 1] = tau * b * secant;
      }
    }
    return table;
  }

  bool built() const { return !nodes_.empty(); }
  int dim() const { return dim_; }
  const RadialProfile& profile() const { return profile_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& cumulative() const { return cdf_; }
  /// Unnormalized radial integral (norm constant excluded).
  double integral() const { return total_; }

  double cdf(double g) const {
    ensure_built();
    if (g <= 0.0) return 0.0;
    if (g >= nodes_.back())
      return 1.0 - detail::radial_tail(profile_, dim_, g) / total_;
    const std::size_t i = interval(g);
    return hermite(i, g);
  }

  double quantile(double u) const {
    ensure_built();
    if (u <= 0.0) return 0.0;
    if (u >= cdf_.back()) return nodes_.back();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    std::size_t i = static_cast<std::size_t>(it - cdf_.begin()) - 1;
    double a = nodes_[i], b = nodes_[i + 1];
    double x = a + (b - a) * (u - cdf_[i]) / (cdf_[i + 1] - cdf_[i]);
    // Safeguarded Newton on the monotone cubic piece.
    for (int iter = 0; iter < 60; ++iter) {
      const double fx = hermite(i, x) - u;
      if (fx > 0.0)
        b = x;
      else
        a = x;
      const double d = hermite_slope(i, x);
      double next = d > 0.0 ? x - fx / d : 0.5 * (a + b);
      if (!(next > a && next < b)) next = 0.5 * (a + b);
      if (std::abs(next - x) <= 1e-15 * std::max(1.0, std::abs(x))) return next;
      x = next;
    }
    return x;
  }

  double sample(Rng& rng) const {
    ensure_built();
    return quantile(uniform01(rng));
  }

 private:
  void ensure_built() const {
    require(built(), ErrorCode::TableNotBuilt, "radial table not built");
  }

  std::size_t interval(double g) const {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), g);
    return std::min(static_cast<std::size_t>(it - nodes_.begin()) - 1,
                    nodes_.size() - 2);
  }

  double hermite(std::size_t i, double g) const {
    const double h = nodes_[i + 1] - nodes_[i];
    const double t = (g - nodes_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * cdf_[i] + (t3 - 2 * t2 + t) * h * slope_[i] +
           (-2 * t3 + 3 * t2) * cdf_[i + 1] + (t3 - t2) * h * slope_[i + 1];
  }

  double hermite_slope(std::size_t i, double g) const {
    const double h = nodes_[i + 1] - nodes_[i];
    const double t = (g - nodes_[i]) / h;
    const double t2 = t * t;
    return ((6 * t2 - 6 * t) * cdf_[i] + (3 * t2 - 4 * t + 1) * h * slope_[i] +
            (-6 * t2 + 6 * t) * cdf_[i + 1] + (3 * t2 - 2 * t) * h * slope_[i + 1]) /
           h;
  }

  RadialProfile profile_;
  int dim_ = 0;
  double total_ = 0.0;
  std::vector<double> nodes_;
  std::vector<double> cdf_;
  std::vector<double> slope_;
};

/// n i.i.d. lengths by inverse CDF on a built table.
inline std::vector<double> radial_sample(const RadialTable& table, Rng& rng,
                                         std::size_t n) {
  require(table.built(), ErrorCode::TableNotBuilt, "radial table not built");
  std::vector<double> out(n);
  for (auto& g : out) g = table.sample(rng);
  return out;
}

}  // namespace starshape
