// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "starshape/direction.hpp"
#include "starshape/error.hpp"
#include "starshape/gauge.hpp"
#include "starshape/parallel.hpp"
#include "starshape/radial.hpp"
#include "starshape/random.hpp"

namespace starshape {

enum class ConstantProvenance { RadialQuadrature, SphericalIntegral };

constexpr std::string_view to_string(ConstantProvenance p) {
  return p == ConstantProvenance::RadialQuadrature ? "radial-quadrature"
                                                   : "spherical-integral";
}

struct StarBuildOptions {
  SphereIntegralOptions sphere;
  std::size_t table_size = 4096;
  DirectionStrategy strategy = DirectionStrategy::Rejection;
};

//---------------------------------------------------------------------------//
/*!
 * Star-shaped distribution with Lebesgue density f_G(g(x)) on R^p \ {0}.
 *
 * The normalizing constant c0 is available two ways: the radial integral
 * int f_G(g) g^{p-1} dg and the spherical integral 1/int g(z')^{-p} dz'.
 * When the profile carries an explicit norm constant, c0 comes from the
 * radial route and the spherical route is an independent check; otherwise
 * the norm is chosen so the density integrates to one and c0 comes from the
 * spherical route.
 */
class StarDistribution {
 public:
  static StarDistribution build(GaugeDescriptor gauge, RadialProfile profile,
                                const StarBuildOptions& opts = {}) {
    const int p = gauge.dim();
    profile.validate();
    const double raw = radial_integral(profile, p);
    auto dc = direction_constant(gauge, opts.sphere);
    double norm = 0.0;
    ConstantProvenance prov;
    if (profile.norm) {
      norm = *profile.norm;
      prov = ConstantProvenance::RadialQuadrature;
    } else {
      norm = dc.c0 / raw;
      prov = ConstantProvenance::SphericalIntegral;
    }
    auto table = RadialTable::build(profile, p, opts.table_size);
    auto sampler = DirectionSampler(gauge, opts.strategy);
    return StarDistribution(std::move(gauge), std::move(profile), norm, raw,
                            dc, prov, std::move(table), std::move(sampler));
  }

  const GaugeDescriptor& gauge() const { return gauge_; }
  const RadialProfile& profile() const { return profile_; }
  int dim() const { return gauge_.dim(); }

  /// The c0 used for density evaluation, per provenance().
  double c0() const {
    return provenance_ == ConstantProvenance::RadialQuadrature ? c0_radial()
                                                               : c0_spherical();
  }
  ConstantProvenance provenance() const { return provenance_; }
  double c0_radial() const { return norm_ * radial_raw_; }
  double c0_spherical() const { return direction_.c0; }
  double c0_spherical_stderr() const { return direction_.std_error; }
  const DirectionConstant& direction_constant_estimate() const { return direction_; }
  /// |c0_radial - c0_spherical| / c0_spherical.
  double relative_discrepancy() const {
    return std::abs(c0_radial() - c0_spherical()) / c0_spherical();
  }
  /// Multiplier applied to the profile shape in density().
  double norm() const { return norm_; }

  const RadialTable& radial_table() const { return table_; }
  const DirectionSampler& direction_sampler() const { return sampler_; }

  /// f_G(g) including the norm constant.
  double profile_value(double g) const { return norm_ * profile_.shape(g, dim()); }

 private:
  StarDistribution(GaugeDescriptor gauge, RadialProfile profile, double norm,
                   double raw, DirectionConstant dc, ConstantProvenance prov,
                   RadialTable table, DirectionSampler sampler)
      : gauge_(std::move(gauge)),
        profile_(std::move(profile)),
        norm_(norm),
        radial_raw_(raw),
        direction_(std::move(dc)),
        provenance_(prov),
        table_(std::move(table)),
        sampler_(std::move(sampler)) {}

  GaugeDescriptor gauge_;
  RadialProfile profile_;
  double norm_;
  double radial_raw_;
  DirectionConstant direction_;
  ConstantProvenance provenance_;
  RadialTable table_;
  DirectionSampler sampler_;
};

/// Lebesgue density f_G(g(x)); undefined at the origin.
inline double density(const StarDistribution& dist, const Vector& x) {
  return dist.profile_value(gauge_eval(dist.gauge(), x));
}

/// Orbital coordinates of x: g(x) with x/g(x), plus the Euclidean direction.
struct OrbitalRecord {
  double g = 0.0;
  Vector z;
  Vector zprime;
};

inline OrbitalRecord orbital_decompose(const GaugeDescriptor& gauge,
                                       const Vector& x) {
  OrbitalRecord rec;
  rec.g = gauge_eval(gauge, x);
  rec.z = x / rec.g;
  rec.zprime = x / x.norm();
  return rec;
}

inline OrbitalRecord orbital_decompose(const StarDistribution& dist,
                                       const Vector& x) {
  return orbital_decompose(dist.gauge(), x);
}

/// One draw x = g z'/g(z') with independent length and direction.
inline Vector sample_one(const StarDistribution& dist, Rng& rng,
                         std::size_t* proposals = nullptr) {
  std::size_t used = 0;
  const double g = dist.radial_table().sample(rng);
  Vector u = dist.direction_sampler()(rng, used);
  if (proposals) *proposals += used;
  return (g / detail::raw_eval(dist.gauge(), u)) * u;
}

inline std::vector<Vector> sample(const StarDistribution& dist, Rng& rng,
                                  std::size_t n) {
  std::vector<Vector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_one(dist, rng));
  return out;
}

/// Block-parallel sampling; block b uses stream (stream << 32) + b.
inline std::vector<Vector> sample(const StarDistribution& dist,
                                  std::uint64_t seed, std::size_t n,
                                  std::uint64_t stream = 0) {
  std::vector<Vector> out(n);
  for_each_block(n, [&](std::uint64_t block, std::size_t begin, std::size_t end) {
    Rng rng(seed, (stream << 32) + block);
    for (std::size_t i = begin; i < end; ++i) out[i] = sample_one(dist, rng);
  });
  return out;
}

/*!
 * Move x along its ray from one gauge's parameterization to another's:
 * w = g_from(x) x / g_to(x), so that g_to(w) = g_from(x).
 */
inline Vector within_orbit_map(const GaugeDescriptor& g_from,
                               const GaugeDescriptor& g_to, const Vector& x) {
  require(g_from.dim() == g_to.dim(), ErrorCode::DimensionMismatch,
          "gauges have different dimensions");
  return (gauge_eval(g_from, x) / gauge_eval(g_to, x)) * x;
}

/// Density of w = within_orbit_map(dist.gauge(), g_to, x) for x ~ dist:
/// f_G(g_to(w)) (g_to(w) / g_from(w))^p.
inline double pushforward_density(const StarDistribution& dist,
                                  const GaugeDescriptor& g_to, const Vector& w) {
  require(g_to.dim() == dist.dim(), ErrorCode::DimensionMismatch,
          "gauges have different dimensions");
  const double gb = gauge_eval(g_to, w);
  const double ga = gauge_eval(dist.gauge(), w);
  return dist.profile_value(gb) * std::pow(gb / ga, dist.dim());
}

}  // namespace starshape
