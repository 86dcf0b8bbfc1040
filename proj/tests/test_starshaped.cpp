// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdlib>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "starshape/starshaped.hpp"
#include "starshape/stats.hpp"
#include "starshape/verify.hpp"

using namespace starshape;

namespace {

Vector vec(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

const GaugeDescriptor& euclid() {
  static const auto g = GaugeDescriptor::elliptical(Matrix::Identity(2, 2));
  return g;
}

// Polar-coordinate integral of a planar density with the angle split into
// eighths (covers the kinks of the square and diamond gauges).
double planar_mass(const std::function<double(const Vector&)>& f, double r_max) {
  double total = 0.0;
  for (int k = 0; k < 8; ++k) {
    auto outer = [&](double t) {
      const Vector u = unit_vector_at(t);
      return oracle::gk([&](double r) { return f(r * u) * r; }, 0.0, r_max, 1e-12);
    };
    total += oracle::gk(outer, k * oracle::kPi / 4, (k + 1) * oracle::kPi / 4, 1e-11);
  }
  return total;
}

}  // namespace

TEST(Density, BivariateStandardNormal) {
  const auto d = StarDistribution::build(euclid(), RadialProfile::gaussian(1.0, 1 / (2 * oracle::kPi)));
  EXPECT_EQ(d.provenance(), ConstantProvenance::RadialQuadrature);
  EXPECT_NEAR(density(d, vec(1, 1)), std::exp(-1.0) / (2 * oracle::kPi), 1e-15);
  EXPECT_NEAR(d.relative_discrepancy(), 0.0, 1e-9);
}

TEST(Density, SupNormExponentialSelfNormalized) {
  const auto d = StarDistribution::build(GaugeDescriptor::sup_norm(2), RadialProfile::exponential(1.0));
  EXPECT_EQ(d.provenance(), ConstantProvenance::SphericalIntegral);
  // int e^{-g} g dg = 1 and c0 = 1/8, so the density is e^{-g}/8.
  EXPECT_NEAR(density(d, vec(0.5, -2)), std::exp(-2.0) / 8.0, 1e-12);
  EXPECT_NEAR(planar_mass([&](const Vector& x) { return density(d, x); }, 60.0), 1.0, 1e-8);
}

TEST(Density, ConstantOnProportionalCrossSections) {
  const auto d = StarDistribution::build(GaugeDescriptor::l1_norm(2), RadialProfile::heavy_tail(2.0));
  Rng rng(31, 0);
  for (int k = 0; k < 100; ++k) {
    const Vector a = uniform_on_sphere(rng, 2), b = uniform_on_sphere(rng, 2);
    const double r = 3 * uniform01(rng) + 0.1;
    const Vector x = a * (r / gauge_eval(d.gauge(), a));
    const Vector y = b * (r / gauge_eval(d.gauge(), b));
    EXPECT_NEAR(density(d, x), density(d, y), 1e-14);
  }
}

TEST(Density, RejectsOrigin) {
  const auto d = StarDistribution::build(euclid(), RadialProfile::gaussian(1.0));
  try {
    density(d, vec(0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroVector);
  }
}

TEST(Sample, StandardNormalMoments) {
  const auto d = StarDistribution::build(euclid(), RadialProfile::gaussian(1.0));
  const std::size_t n = 200000;
  const auto xs = sample(d, 32, n);
  Vector mean = Vector::Zero(2);
  for (const auto& x : xs) mean += x;
  mean /= static_cast<double>(n);
  Matrix cov = Matrix::Zero(2, 2);
  for (const auto& x : xs) cov += (x - mean) * (x - mean).transpose();
  cov /= static_cast<double>(n - 1);
  EXPECT_LT(mean.cwiseAbs().maxCoeff(), 4.0 / std::sqrt(static_cast<double>(n)));
  EXPECT_NEAR(cov(0, 0), 1.0, 0.05);
  EXPECT_NEAR(cov(1, 1), 1.0, 0.05);
  EXPECT_NEAR(cov(0, 1), 0.0, 0.05);
}

TEST(Sample, LengthDirectionIndependence) {
  const auto d = StarDistribution::build(GaugeDescriptor::sup_norm(2), RadialProfile::exponential(1.0));
  const auto xs = sample(d, 33, 100000);
  EXPECT_GT(verify::length_direction_independence(d.gauge(), xs).p_value, 0.001);
}

TEST(Sample, LengthMarginalMatchesRadialLaw) {
  const auto d = StarDistribution::build(GaugeDescriptor::sup_norm(2), RadialProfile::gaussian(1.0));
  const auto xs = sample(d, 34, 50000);
  std::vector<double> g;
  for (const auto& x : xs) g.push_back(gauge_eval(d.gauge(), x));
  // Length law is Rayleigh for p = 2.
  EXPECT_GT(stats::ks_test(g, [](double v) { return 1 - std::exp(-0.5 * v * v); }).p_value, 0.01);
}

TEST(Sample, DirectionDerivedTargetIsRealized) {
  auto f = [](const Vector& u) { return (2.0 + u[0]) / (4 * oracle::kPi); };
  const auto g = gauge_from_direction_density(f, 2);
  const auto d = StarDistribution::build(g, RadialProfile::gaussian(1.0));
  const auto xs = sample(d, 35, 100000);
  std::vector<double> edges(37), probs(36);
  for (int k = 0; k <= 36; ++k) edges[k] = 2 * oracle::kPi * k / 36;
  for (int k = 0; k < 36; ++k)
    probs[k] = (2 * (edges[k + 1] - edges[k]) + std::sin(edges[k + 1]) - std::sin(edges[k])) /
               (4 * oracle::kPi);
  const auto r = stats::chisq_gof(stats::histogram(verify::polar_angles(xs), edges), probs);
  EXPECT_GT(r.p_value, 0.001);
}

TEST(Sample, DeterministicAcrossWorkerCounts) {
  const auto d = StarDistribution::build(GaugeDescriptor::l1_norm(3), RadialProfile::exponential(1.0));
  ::setenv("STARSHAPE_THREADS", "1", 1);
  const auto a = sample(d, 36, 20000);
  ::setenv("STARSHAPE_THREADS", "4", 1);
  const auto b = sample(d, 36, 20000);
  ::unsetenv("STARSHAPE_THREADS");
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i], b[i]);
  const auto c = sample(d, 37, 20000);
  EXPECT_NE(a[0], c[0]);
}

TEST(OrbitalDecompose, Examples) {
  auto rec = orbital_decompose(euclid(), vec(3, 4));
  EXPECT_NEAR(rec.g, 5.0, 1e-15);
  EXPECT_NEAR((rec.z - vec(0.6, 0.8)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((rec.zprime - vec(0.6, 0.8)).norm(), 0.0, 1e-15);
  rec = orbital_decompose(GaugeDescriptor::sup_norm(2), vec(2, -4));
  EXPECT_DOUBLE_EQ(rec.g, 4.0);
  EXPECT_EQ(rec.z, vec(0.5, -1));
  EXPECT_NEAR((rec.zprime - vec(1 / std::sqrt(5.0), -2 / std::sqrt(5.0))).norm(), 0.0, 1e-15);
}

TEST(OrbitalDecompose, InvarianceAndReconstruction) {
  const auto g = GaugeDescriptor::sup_norm(2);
  Rng rng(38, 0);
  for (int k = 0; k < 100; ++k) {
    const Vector x = uniform_on_sphere(rng, 2) * (1 + 5 * uniform01(rng));
    const auto a = orbital_decompose(g, x);
    const auto b = orbital_decompose(g, 8.0 * x);  // power of two keeps it exact
    EXPECT_EQ(a.z, b.z);
    EXPECT_NEAR(b.g, 8.0 * a.g, 1e-15 * b.g);
    EXPECT_LE((a.g * a.z - x).norm(), 1e-10 * x.norm());
    EXPECT_LE((a.z / a.z.norm() - a.zprime).norm(), 1e-15);
    // Non-power-of-two scale: equal up to rounding.
    EXPECT_LE((orbital_decompose(g, 7.3 * x).z - a.z).norm(), 1e-15);
  }
}

TEST(WithinOrbitMap, Examples) {
  const auto sup = GaugeDescriptor::sup_norm(2);
  EXPECT_EQ(within_orbit_map(sup, sup, vec(0.3, -2)), vec(0.3, -2));
  const Vector w = within_orbit_map(euclid(), sup, vec(3, 4));
  EXPECT_NEAR(w[0], 3.75, 1e-15);
  EXPECT_NEAR(w[1], 5.0, 1e-15);
  EXPECT_NEAR(gauge_eval(sup, w), 5.0, 1e-15);
  Rng rng(39, 0);
  for (int k = 0; k < 100; ++k) {
    const Vector x = uniform_on_sphere(rng, 2) * 3;
    const Vector back = within_orbit_map(sup, euclid(), within_orbit_map(euclid(), sup, x));
    EXPECT_LE((back - x).norm(), 1e-12 * x.norm());
  }
  EXPECT_THROW(within_orbit_map(sup, GaugeDescriptor::sup_norm(3), vec(1, 1)), Error);
}

TEST(WithinOrbitMap, EquivariantPartTransformation) {
  const auto a = GaugeDescriptor::elliptical(Matrix::Identity(2, 2));
  const auto b = GaugeDescriptor::l1_norm(2);
  Rng rng(40, 0);
  for (int k = 0; k < 100; ++k) {
    const Vector x = uniform_on_sphere(rng, 2) * (0.5 + 4 * uniform01(rng));
    const double ga = gauge_eval(a, x);
    EXPECT_NEAR(gauge_eval(b, x), ga * gauge_eval(b, x / ga), 1e-12 * gauge_eval(b, x));
  }
}

TEST(PushforwardDensity, SameGaugeIsDensity) {
  const auto d = StarDistribution::build(GaugeDescriptor::sup_norm(2), RadialProfile::gaussian(1.0));
  Rng rng(41, 0);
  for (int k = 0; k < 50; ++k) {
    const Vector w = uniform_on_sphere(rng, 2) * 2.0;
    EXPECT_NEAR(pushforward_density(d, d.gauge(), w), density(d, w), 1e-15);
  }
}

TEST(PushforwardDensity, IntegratesToOne) {
  const auto d = StarDistribution::build(euclid(), RadialProfile::gaussian(1.0, 1 / (2 * oracle::kPi)));
  const auto sup = GaugeDescriptor::sup_norm(2);
  const double mass = planar_mass([&](const Vector& w) { return pushforward_density(d, sup, w); }, 12.0);
  EXPECT_NEAR(mass, 1.0, 1e-8);
}

TEST(StarDistribution, TwinRoutesAgreeWithClosedFormNorms) {
  // norm = 1/(radial integral * p * area of the unit body).
  const auto ell = GaugeDescriptor::elliptical((Matrix(2, 2) << 1, 0, 0, 4).finished());
  const auto d1 = StarDistribution::build(ell, RadialProfile::gaussian(1.0, 1 / (4 * oracle::kPi)));
  EXPECT_LE(d1.relative_discrepancy(), 1e-7);
  const auto d2 = StarDistribution::build(GaugeDescriptor::l1_norm(2), RadialProfile::exponential(1.0, 0.25));
  EXPECT_LE(d2.relative_discrepancy(), 1e-6);
  const auto tampered = StarDistribution::build(ell, RadialProfile::gaussian(1.0, 1.01 / (4 * oracle::kPi)));
  EXPECT_FALSE(verify::twin_route_check(tampered).pass);
}
