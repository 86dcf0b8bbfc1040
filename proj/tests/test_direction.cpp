// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdlib>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "starshape/direction.hpp"
#include "starshape/stats.hpp"
#include "starshape/verify.hpp"

using namespace starshape;

namespace {

Vector vec(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

Matrix diag14() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = 4.0;
  return m;
}

// Piecewise Boost quadrature of h(theta) with the integrand split on quarter
// turns offset by `shift`.
double quarter_split(const std::function<double(double)>& h, double shift) {
  double total = 0.0;
  for (int k = 0; k < 4; ++k)
    total += oracle::gk(h, shift + k * oracle::kPi / 2, shift + (k + 1) * oracle::kPi / 2, 1e-14);
  return total;
}

}  // namespace

TEST(DirectionConstant, PlanarExamples) {
  EXPECT_NEAR(direction_constant(GaugeDescriptor::sup_norm(2)).c0, 0.125, 1e-10);
  // Unit l1 ball has area 2, so c0 = 1/(2 * area) = 1/4.
  EXPECT_NEAR(direction_constant(GaugeDescriptor::l1_norm(2)).c0, 0.25, 1e-10);
  EXPECT_NEAR(direction_constant(GaugeDescriptor::elliptical(Matrix::Identity(2, 2))).c0,
              1.0 / (2 * oracle::kPi), 1e-12);
  EXPECT_NEAR(direction_constant(GaugeDescriptor::elliptical(diag14())).c0,
              1.0 / (2 * oracle::kPi * 2), 1e-12);
}

TEST(DirectionConstant, MonteCarloCarriesStandardError) {
  SphereIntegralOptions opts;
  opts.monte_carlo_points = 200000;
  const auto dc = direction_constant(GaugeDescriptor::sup_norm(3), opts);
  EXPECT_EQ(dc.integral.method, SphereMethod::MonteCarlo);
  EXPECT_GT(dc.std_error, 0.0);
  EXPECT_NEAR(dc.c0, oracle::hypercube_c0(3), 4.0 * dc.std_error);
  const auto sph = direction_constant(GaugeDescriptor::elliptical(Matrix::Identity(3, 3)), opts);
  // Constant integrand: zero variance.
  EXPECT_NEAR(sph.c0, 1.0 / oracle::sphere_area(3), 1e-12);
  EXPECT_LT(sph.std_error, 1e-12);
}

TEST(DirectionConstant, IndependentOfWorkerCount) {
  SphereIntegralOptions opts;
  opts.monte_carlo_points = 50000;
  const auto g = GaugeDescriptor::l1_norm(3);
  ::setenv("STARSHAPE_THREADS", "1", 1);
  const auto one = direction_constant(g, opts);
  ::setenv("STARSHAPE_THREADS", "3", 1);
  const auto three = direction_constant(g, opts);
  ::unsetenv("STARSHAPE_THREADS");
  EXPECT_EQ(one.c0, three.c0);
  EXPECT_EQ(one.std_error, three.std_error);
}

TEST(DirectionDensity, Examples) {
  const auto ell = GaugeDescriptor::elliptical(diag14());
  const double c_ell = direction_constant(ell).c0;
  EXPECT_NEAR(direction_density(ell, c_ell, vec(1, 0)), 1.0 / (4 * oracle::kPi), 1e-12);
  const auto sup = GaugeDescriptor::sup_norm(2);
  EXPECT_NEAR(direction_density(sup, 0.125, vec(1, 0)), 0.125, 1e-15);
  const auto id = GaugeDescriptor::elliptical(Matrix::Identity(2, 2));
  EXPECT_NEAR(direction_density(id, 1 / (2 * oracle::kPi), unit_vector_at(1.234)),
              1 / (2 * oracle::kPi), 1e-15);
}

TEST(DirectionDensity, AngularGaussianFormula) {
  Matrix s(2, 2);
  s << 2.0, 0.6, 0.6, 1.0;
  const auto g = GaugeDescriptor::elliptical(s);
  const double c0 = direction_constant(g).c0;
  const Matrix inv = s.inverse();
  for (int k = 0; k < 36; ++k) {
    const Vector u = unit_vector_at(0.17 * k);
    const double ref = 1.0 / (2 * oracle::kPi * std::sqrt(s.determinant())) / u.dot(inv * u);
    EXPECT_NEAR(direction_density(g, c0, u), ref, 1e-10 * ref);
  }
}

TEST(DirectionDensity, IntegratesToOne) {
  for (const auto& g : {GaugeDescriptor::sup_norm(2), GaugeDescriptor::l1_norm(2),
                        GaugeDescriptor::elliptical(diag14())}) {
    const double c0 = direction_constant(g).c0;
    auto h = [&](double t) { return direction_density(g, c0, unit_vector_at(t)); };
    // Split at both families' kinks (multiples of pi/4).
    double total = 0.0;
    for (int k = 0; k < 8; ++k)
      total += oracle::gk(h, k * oracle::kPi / 4, (k + 1) * oracle::kPi / 4, 1e-14);
    EXPECT_NEAR(total, 1.0, 1e-8) << to_string(g.kind());
  }
}

TEST(DirectionDensity, RejectsNonUnit) {
  try {
    direction_density(GaugeDescriptor::sup_norm(2), 0.125, vec(1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUnitVector);
  }
}

TEST(DirectionSample, RejectionAcceptanceRates) {
  Rng rng(21, 0);
  auto s = direction_sample(GaugeDescriptor::elliptical(Matrix::Identity(2, 2)), rng, 10000);
  EXPECT_DOUBLE_EQ(s.acceptance_rate(), 1.0);
  s = direction_sample(GaugeDescriptor::sup_norm(2), rng, 100000);
  // Mean of (g_min / g(u))^2 over the circle with g_min = 1/sqrt(2): 2/pi.
  const double expected =
      oracle::gk([](double t) { return 0.5 / (std::cos(t) * std::cos(t)); }, 0.0, oracle::kPi / 4) /
      (oracle::kPi / 4);
  EXPECT_NEAR(expected, 2.0 / oracle::kPi, 1e-13);
  EXPECT_NEAR(s.acceptance_rate(), expected, 0.005);
}

TEST(DirectionSample, StrategiesAgree) {
  const auto g = GaugeDescriptor::polytope({vec(1, 0), vec(0, 1), vec(-1, 0.5), vec(-0.5, -1)});
  Rng a(22, 0), b(23, 0);
  const auto r = direction_sample(g, a, 100000, DirectionStrategy::Rejection);
  const auto u = direction_sample(g, b, 100000, DirectionStrategy::UniformInBody);
  EXPECT_GT(stats::two_sample_ks(verify::polar_angles(r.directions),
                                 verify::polar_angles(u.directions))
                .p_value,
            0.01);
}

TEST(DirectionSample, BoundsUnavailable) {
  try {
    DirectionSampler(GaugeDescriptor::sup_norm(2), SphereBounds{0.0, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundsUnavailable);
  }
}

TEST(CrossSectionMeasure, Examples) {
  Matrix s(2, 2);
  s << 2.0, 0.6, 0.6, 1.0;
  const auto ell = GaugeDescriptor::elliptical(s);
  const double c0 = direction_constant(ell).c0;
  const Matrix inv2 = s.inverse() * s.inverse();
  for (int k = 0; k < 12; ++k) {
    const Vector z = unit_cross_section_point(ell, unit_vector_at(0.5 * k));
    EXPECT_NEAR(cross_section_measure_density(ell, c0, z), c0 / std::sqrt(z.dot(inv2 * z)), 1e-13);
  }
  EXPECT_NEAR(cross_section_measure_density(GaugeDescriptor::sup_norm(2), 0.125, vec(1, 0.3)),
              0.125, 1e-15);
  EXPECT_NEAR(cross_section_measure_density(GaugeDescriptor::l1_norm(2), 0.25, vec(0.5, 0.5)),
              0.25 / std::sqrt(2.0), 1e-15);
  try {
    cross_section_measure_density(GaugeDescriptor::sup_norm(2), 0.125, vec(1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOnCrossSection);
  }
}

TEST(CrossSectionMeasure, IntegratesToOneAlongEdgesAndEllipse) {
  // Ellipse z = Sigma^{1/2}(cos s, sin s) for Sigma = diag(1, 4).
  const auto ell = GaugeDescriptor::elliptical(diag14());
  const double c_ell = direction_constant(ell).c0;
  auto ell_h = [&](double s) {
    Vector z = vec(std::cos(s), 2 * std::sin(s));
    const double ds = std::hypot(std::sin(s), 2 * std::cos(s));
    return cross_section_measure_density(ell, c_ell, z) * ds;
  };
  EXPECT_NEAR(quarter_split(ell_h, 0.0), 1.0, 1e-10);

  // Polygons: integrate along each edge between consecutive vertices.
  auto polygon_mass = [](const GaugeDescriptor& g, const std::vector<Vector>& verts) {
    const double c0 = direction_constant(g).c0;
    double total = 0.0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const Vector a = verts[i], b = verts[(i + 1) % verts.size()];
      auto f = [&](double t) {
        return cross_section_measure_density(g, c0, a + t * (b - a)) * (b - a).norm();
      };
      total += oracle::gk(f, 0.0, 1.0, 1e-14);
    }
    return total;
  };
  EXPECT_NEAR(polygon_mass(GaugeDescriptor::sup_norm(2),
                           {vec(1, 1), vec(-1, 1), vec(-1, -1), vec(1, -1)}),
              1.0, 1e-10);
  EXPECT_NEAR(polygon_mass(GaugeDescriptor::l1_norm(2),
                           {vec(1, 0), vec(0, 1), vec(-1, 0), vec(0, -1)}),
              1.0, 1e-10);
}

TEST(CrossSectionMeasure, HistogramOfCrossSectionPoints) {
  // On the square, nu_Z is 1/8 times arc length. The arc between angles a < b
  // on the facet x = 1 has length tan(b) - tan(a); other facets by symmetry.
  const auto sup = GaugeDescriptor::sup_norm(2);
  auto arc = [](double a, double b) {
    const double quarter = oracle::kPi / 2;
    std::vector<double> pts{a};
    for (int k = 0; k < 8; ++k) {
      const double s = oracle::kPi / 4 + k * quarter;
      if (s > a && s < b) pts.push_back(s);
    }
    pts.push_back(b);
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double mid = 0.5 * (pts[i] + pts[i + 1]);
      const double off = std::floor((mid + oracle::kPi / 4) / quarter) * quarter;
      len += std::tan(pts[i + 1] - off) - std::tan(pts[i] - off);
    }
    return len;
  };
  std::vector<double> edges(37), probs(36);
  for (int k = 0; k <= 36; ++k) edges[k] = 2 * oracle::kPi * k / 36;
  for (int k = 0; k < 36; ++k) probs[k] = arc(edges[k], edges[k + 1]) / 8.0;
  Rng rng(24, 0);
  const auto dirs = direction_sample(sup, rng, 100000);
  std::vector<double> angles;
  for (const auto& u : dirs.directions) {
    const Vector z = unit_cross_section_point(sup, u);
    angles.push_back(polar_angle(z[0], z[1]));
  }
  EXPECT_GT(stats::chisq_gof(stats::histogram(angles, edges), probs).p_value, 0.001);
}
