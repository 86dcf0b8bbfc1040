// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "starshape/error.hpp"
#include "starshape/gauge.hpp"
#include "starshape/parallel.hpp"
#include "starshape/quadrature.hpp"
#include "starshape/random.hpp"

namespace starshape {

enum class SphereMethod { AngularQuadrature, MonteCarlo, Exact };

constexpr std::string_view to_string(SphereMethod m) {
  switch (m) {
    case SphereMethod::AngularQuadrature: return "angular-quadrature";
    case SphereMethod::MonteCarlo: return "monte-carlo";
    case SphereMethod::Exact: return "exact";
  }
  return "unknown";
}

/// Estimate of an integral over the unit sphere S^{p-1}.
struct SphereIntegral {
  double value = 0.0;
  double std_error = 0.0;  // zero for deterministic rules
  SphereMethod method = SphereMethod::AngularQuadrature;
  std::size_t n_evals = 0;
};

struct SphereIntegralOptions {
  std::size_t simpson_panels = std::size_t{1} << 20;
  std::size_t monte_carlo_points = 1000000;
  std::uint64_t seed = 0x5eed;
  std::uint64_t stream = 0;
  /// Panel boundaries for kinked planar integrands.
  std::vector<double> breakpoints;
};

/*!
 * Integral of h over the unit sphere.
 *
 * p = 2: composite Simpson in the polar angle, with panel boundaries at
 * the supplied breakpoints. p >= 3: Monte Carlo with uniform directions;
 * stderr is std(omega_p h(U)) / sqrt(n).
 */
template <class H>
SphereIntegral sphere_integral(H&& h, int p,
                               const SphereIntegralOptions& opts = {}) {
  SphereIntegral out;
  if (p == 1) {
    Vector plus(1), minus(1);
    plus << 1.0;
    minus << -1.0;
    out.value = h(plus) + h(minus);
    out.method = SphereMethod::Exact;
    out.n_evals = 2;
    return out;
  }
  if (p == 2) {
    auto f = [&](double theta) { return h(unit_vector_at(theta)); };
    std::vector<double> pts = opts.breakpoints;
    std::sort(pts.begin(), pts.end());
    if (pts.empty()) pts.push_back(0.0);
    const double start = pts.front();
    pts.push_back(start + kTwoPi);
    const auto total_panels = static_cast<double>(opts.simpson_panels);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double len = pts[i + 1] - pts[i];
      if (len <= 0.0) continue;
      auto panels = static_cast<std::size_t>(std::llround(total_panels * len / kTwoPi));
      panels = std::max<std::size_t>(2, panels + panels % 2);
      out.value += simpson(f, pts[i], pts[i + 1], panels);
      out.n_evals += panels + 1;
    }
    out.method = SphereMethod::AngularQuadrature;
    return out;
  }
  const std::size_t n = opts.monte_carlo_points;
  require(n >= 2, ErrorCode::InvalidParameter, "need at least 2 Monte Carlo points");
  const double area = sphere_area(p);
  std::vector<double> values(n);
  for_each_block(n, [&](std::uint64_t block, std::size_t begin, std::size_t end) {
    Rng rng(opts.seed, (opts.stream << 32) + block);
    for (std::size_t i = begin; i < end; ++i)
      values[i] = area * h(uniform_on_sphere(rng, p));
  });
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n - 1);
  out.value = mean;
  out.std_error = std::sqrt(var / static_cast<double>(n));
  out.method = SphereMethod::MonteCarlo;
  out.n_evals = n;
  return out;
}

/// c0 = 1 / int_{S^{p-1}} g(z')^{-p} dz', with a delta-method stderr.
struct DirectionConstant {
  double c0 = 0.0;
  double std_error = 0.0;
  SphereIntegral integral;
};

inline DirectionConstant direction_constant(const GaugeDescriptor& desc,
                                            SphereIntegralOptions opts = {}) {
  const int p = desc.dim();
  if (p == 2 && opts.breakpoints.empty()) opts.breakpoints = kink_angles(desc);
  auto h = [&](const Vector& u) {
    return std::pow(detail::raw_eval(desc, u), -static_cast<double>(p));
  };
  DirectionConstant out;
  out.integral = sphere_integral(h, p, opts);
  require(out.integral.value > 0.0 && std::isfinite(out.integral.value),
          ErrorCode::QuadratureFailure, "sphere integral of g^{-p} is not finite");
  out.c0 = 1.0 / out.integral.value;
  out.std_error = out.integral.std_error / (out.integral.value * out.integral.value);
  return out;
}

/// c0 g(z')^{-p}: density of the direction z' = x/|x| on the sphere.
inline double direction_density(const GaugeDescriptor& desc, double c0,
                                const Vector& zprime) {
  require(zprime.size() == desc.dim(), ErrorCode::DimensionMismatch,
          "direction has the wrong dimension");
  require(std::abs(zprime.norm() - 1.0) <= 1e-9, ErrorCode::NotUnitVector,
          "direction must have unit norm");
  return c0 * std::pow(gauge_eval(desc, zprime), -static_cast<double>(desc.dim()));
}

enum class DirectionStrategy { Rejection, UniformInBody };

struct DirectionSample {
  std::vector<Vector> directions;
  std::size_t proposals = 0;
  double acceptance_rate() const {
    return proposals == 0 ? 0.0
                          : static_cast<double>(directions.size()) /
                                static_cast<double>(proposals);
  }
};

/*!
 * Draw unit vectors from c0 g(z')^{-p} dz'.
 *
 * Rejection proposes uniform directions and accepts with probability
 * (g_min / g(u))^p. UniformInBody keeps the uniform draws from the ball of
 * radius 1/g_min that land in the star body {g <= 1} and returns their
 * directions.
 */
class DirectionSampler {
 public:
  DirectionSampler(GaugeDescriptor desc, SphereBounds bounds,
                   DirectionStrategy strategy = DirectionStrategy::Rejection)
      : desc_(std::move(desc)), bounds_(bounds), strategy_(strategy) {
    require(bounds_.g_min > 0.0 && std::isfinite(bounds_.g_min),
            ErrorCode::BoundsUnavailable, "sphere bounds unavailable");
    require(std::isfinite(bounds_.g_max) && bounds_.g_max >= bounds_.g_min,
            ErrorCode::BoundsUnavailable, "sphere bounds unavailable");
  }

  explicit DirectionSampler(const GaugeDescriptor& desc,
                            DirectionStrategy strategy = DirectionStrategy::Rejection)
      : DirectionSampler(desc, sphere_bounds(desc), strategy) {}

  const GaugeDescriptor& gauge() const { return desc_; }
  DirectionStrategy strategy() const { return strategy_; }
  const SphereBounds& bounds() const { return bounds_; }

  /// One draw; `proposals` is incremented by the number of proposals used.
  Vector operator()(Rng& rng, std::size_t& proposals) const {
    const int p = desc_.dim();
    if (strategy_ == DirectionStrategy::Rejection) {
      for (;;) {
        ++proposals;
        Vector u = uniform_on_sphere(rng, p);
        const double ratio = bounds_.g_min / detail::raw_eval(desc_, u);
        const double accept = std::pow(ratio, p);
        if (accept >= 1.0 || uniform01(rng) < accept) return u;
      }
    }
    const double radius = 1.0 / bounds_.g_min;
    for (;;) {
      ++proposals;
      Vector x = uniform_in_ball(rng, p, radius);
      const double norm = x.norm();
      if (norm == 0.0) continue;
      if (detail::raw_eval(desc_, x) <= 1.0) return x / norm;
    }
  }

 private:
  GaugeDescriptor desc_;
  SphereBounds bounds_;
  DirectionStrategy strategy_;
};

inline DirectionSample direction_sample(const DirectionSampler& sampler,
                                        Rng& rng, std::size_t n) {
  DirectionSample out;
  out.directions.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.directions.push_back(sampler(rng, out.proposals));
  return out;
}

inline DirectionSample direction_sample(const GaugeDescriptor& desc, Rng& rng,
                                        std::size_t n,
                                        DirectionStrategy strategy =
                                            DirectionStrategy::Rejection) {
  return direction_sample(DirectionSampler(desc, strategy), rng, n);
}

/*!
 * Density of the invariant part z = x/g(x) with respect to the surface
 * measure of the unit cross section Z = {g = 1}: c0 <z, n_z>, where n_z is
 * the outward unit normal. <z, n_z> is the distance from the origin to the
 * tangent hyperplane at z.
 */
inline double cross_section_measure_density(const GaugeDescriptor& desc,
                                            double c0, const Vector& z,
                                            const GradientOptions& opts = {}) {
  const double g = gauge_eval(desc, z);
  require(std::abs(g - 1.0) <= 1e-9, ErrorCode::NotOnCrossSection,
          "point is not on the unit cross section (g = " + std::to_string(g) + ")");
  return c0 * z.dot(outward_normal(desc, z, opts));
}

}  // namespace starshape
