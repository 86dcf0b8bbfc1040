// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "starshape/radial.hpp"
#include "starshape/stats.hpp"

using namespace starshape;

TEST(RadialConstant, GaussianWithFoldedNormalConstant) {
  const auto prof = RadialProfile::gaussian(1.0, 1.0 / (2.0 * oracle::kPi));
  EXPECT_NEAR(radial_constant(prof, 2), 1.0 / (2.0 * oracle::kPi), 1e-9 / (2 * oracle::kPi));
}

TEST(RadialConstant, ExponentialGammaIntegral) {
  EXPECT_NEAR(radial_constant(RadialProfile::exponential(1.0), 3), 2.0, 2e-9);
}

TEST(RadialConstant, Kotz) {
  // s = 1, t = 2, r = 1/2 at p = 2 integrates g^2 exp(-g^2/2): sqrt(pi/2).
  EXPECT_NEAR(radial_constant(RadialProfile::kotz(1.0, 0.5, 2.0), 2),
              std::sqrt(oracle::kPi / 2.0), 1e-9);
  // s = 2 integrates g^3 exp(-g^2/2) = 2.
  EXPECT_NEAR(radial_constant(RadialProfile::kotz(2.0, 0.5, 2.0), 2), 2.0, 2e-9);
}

TEST(RadialConstant, AgreesWithIndependentQuadrature) {
  const std::vector<RadialProfile> profiles{
      RadialProfile::gaussian(0.7), RadialProfile::exponential(2.5),
      RadialProfile::kotz(0.5, 1.3, 1.5), RadialProfile::heavy_tail(3.0),
      RadialProfile::heavy_tail(0.5)};
  for (const auto& prof : profiles)
    for (int p : {1, 2, 3}) {
      auto f = [&](double g) { return prof.shape(g, p) * std::pow(g, p - 1); };
      // Slow algebraic tails go through g = cot(psi) onto a finite interval,
      // where the integrand becomes cos^{p-1} sin^{nu-1} with the
      // singularity at psi = 0.
      auto h = [&](double psi) {
        return std::pow(std::cos(psi), p - 1) * std::pow(std::sin(psi), prof.nu - 1);
      };
      const double ref = prof.family == RadialFamily::HeavyTail
                             ? oracle::tanh_sinh(h, 0.0, oracle::kPi / 2, 1e-13)
                             : oracle::gk_half_line(f, 0.0, 1e-13);
      EXPECT_NEAR(radial_constant(prof, p), ref, 2e-9 * ref)
          << to_string(prof.family) << " p=" << p;
    }
}

TEST(RadialConstant, HeavyTailClosedForm) {
  // int_0^inf (1+g^2)^{-(p+nu)/2} g^{p-1} dg = B(p/2, nu/2)/2.
  for (double nu : {0.5, 1.0, 3.0, 7.5})
    for (int p : {1, 2, 3}) {
      const double ref = 0.5 * std::tgamma(0.5 * p) * std::tgamma(0.5 * nu) / std::tgamma(0.5 * (p + nu));
      EXPECT_NEAR(radial_constant(RadialProfile::heavy_tail(nu), p), ref, 1e-9 * ref);
    }
}

TEST(RadialProfile, Validation) {
  try {
    RadialProfile::heavy_tail(0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Divergent);
  }
  EXPECT_THROW(RadialProfile::gaussian(-1.0), Error);
  EXPECT_THROW(RadialProfile::kotz(-0.5, 1.0, 1.0), Error);
  EXPECT_THROW(RadialProfile::exponential(1.0, -2.0), Error);
}

TEST(RadialDensity, Examples) {
  const auto gauss = RadialProfile::gaussian(1.0, 1.0 / (2.0 * oracle::kPi));
  const double c0 = radial_constant(gauss, 2);
  EXPECT_NEAR(radial_density(gauss, 2, c0, 1.0), std::exp(-0.5), 1e-9);
  const auto expo = RadialProfile::exponential(1.0);
  EXPECT_NEAR(radial_density(expo, 1, radial_constant(expo, 1), 2.0), std::exp(-2.0), 1e-12);
  try {
    radial_density(expo, 1, 1.0, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositive);
  }
}

TEST(RadialDensity, IntegratesToOne) {
  const std::vector<RadialProfile> profiles{
      RadialProfile::gaussian(1.0), RadialProfile::exponential(1.0),
      RadialProfile::kotz(1.0, 0.5, 2.0), RadialProfile::heavy_tail(3.0)};
  for (const auto& prof : profiles)
    for (int p : {1, 2, 3}) {
      const double c0 = radial_constant(prof, p);
      const double total = oracle::gk_half_line(
          [&](double g) { return g <= 0.0 ? 0.0 : radial_density(prof, p, c0, g); }, 0.0, 1e-13);
      EXPECT_NEAR(total, 1.0, 1e-8) << to_string(prof.family) << " p=" << p;
    }
}

TEST(RadialTable, NotBuilt) {
  RadialTable empty;
  Rng rng(1, 0);
  try {
    radial_sample(empty, rng, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TableNotBuilt);
  }
}

TEST(RadialTable, CumulativeIsStrictlyIncreasingAndNormalized) {
  for (const auto& prof : {RadialProfile::gaussian(1.0), RadialProfile::heavy_tail(1.0)}) {
    const auto t = RadialTable::build(prof, 2);
    const auto& c = t.cumulative();
    for (std::size_t i = 1; i < c.size(); ++i) ASSERT_GT(c[i], c[i - 1]);
    EXPECT_NEAR(c.back(), 1.0, 1e-8);
  }
}

TEST(RadialTable, QuantileRoundTrip) {
  for (const auto& prof : {RadialProfile::gaussian(1.0), RadialProfile::exponential(1.0),
                           RadialProfile::kotz(1.0, 0.5, 2.0), RadialProfile::heavy_tail(3.0)}) {
    const auto t = RadialTable::build(prof, 3);
    for (int k = 1; k <= 99; ++k) {
      const double u = k / 100.0;
      EXPECT_NEAR(t.cdf(t.quantile(u)), u, 1e-6);
    }
  }
}

TEST(RadialTable, CdfMatchesRayleigh) {
  const auto t = RadialTable::build(RadialProfile::gaussian(1.0), 2);
  for (double g : {0.1, 0.5, 1.0, 1.7, 3.0, 5.0})
    EXPECT_NEAR(t.cdf(g), 1.0 - std::exp(-0.5 * g * g), 1e-9);
}

TEST(RadialSample, RayleighMedian) {
  const auto t = RadialTable::build(RadialProfile::gaussian(1.0), 2);
  Rng rng(101, 0);
  auto g = radial_sample(t, rng, 100000);
  std::nth_element(g.begin(), g.begin() + g.size() / 2, g.end());
  EXPECT_NEAR(g[g.size() / 2], std::sqrt(2.0 * std::log(2.0)), 0.01);
}

TEST(RadialSample, UnitExponentialMean) {
  const auto t = RadialTable::build(RadialProfile::exponential(1.0), 1);
  Rng rng(102, 0);
  const auto g = radial_sample(t, rng, 100000);
  double mean = 0.0;
  for (double v : g) mean += v;
  EXPECT_NEAR(mean / g.size(), 1.0, 0.01);
}

TEST(RadialSample, HeavyTailKsAgainstIndependentCdf) {
  const auto prof = RadialProfile::heavy_tail(3.0);
  const auto t = RadialTable::build(prof, 2);
  Rng rng(103, 0);
  const auto g = radial_sample(t, rng, 100000);
  // For p = 2, nu = 3: density 3 g (1+g^2)^{-5/2}, CDF 1 - (1+g^2)^{-3/2}.
  const auto r = stats::ks_test(g, [](double x) { return 1.0 - std::pow(1.0 + x * x, -1.5); });
  EXPECT_GT(r.p_value, 0.01);
}

TEST(RadialSample, GaussianScaleEquivariance) {
  const auto t1 = RadialTable::build(RadialProfile::gaussian(1.0), 3);
  const auto t2 = RadialTable::build(RadialProfile::gaussian(2.5), 3);
  Rng a(104, 0), b(105, 0);
  auto g1 = radial_sample(t1, a, 50000);
  for (double& v : g1) v *= 2.5;
  const auto g2 = radial_sample(t2, b, 50000);
  EXPECT_GT(stats::two_sample_ks(g1, g2).p_value, 0.01);
}
