// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Draws from a bivariate normal with covariance diag(1, 4), splits each draw
// into length and direction, and compares the direction histogram with the
// angular Gaussian density.

#include <cstdio>

#include "starshape/starshape.hpp"

int main() {
  using namespace starshape;
  Matrix sigma(2, 2);
  sigma << 1.0, 0.0, 0.0, 4.0;
  const auto gauge = GaugeDescriptor::elliptical(sigma);
  const auto dist = StarDistribution::build(gauge, RadialProfile::gaussian(1.0));
  std::printf("c0 (spherical route) = %.12f, expected 1/(2 pi sqrt(det)) = %.12f\n",
              dist.c0_spherical(), 1.0 / (kTwoPi * 2.0));

  const auto xs = sample(dist, 2026, 200000);
  const auto angles = verify::polar_angles(xs);
  const std::size_t bins = 12;
  std::vector<double> edges(bins + 1);
  for (std::size_t k = 0; k <= bins; ++k) edges[k] = kTwoPi * static_cast<double>(k) / bins;
  const auto counts = stats::histogram(angles, edges);
  std::printf("%8s %10s %10s\n", "bin", "observed", "expected");
  for (std::size_t k = 0; k < bins; ++k) {
    const double p = verify::angular_mass(gauge, dist.c0_spherical(), edges[k], edges[k + 1]);
    std::printf("%8zu %10.5f %10.5f\n", k, static_cast<double>(counts[k]) / xs.size(), p);
  }
  const auto r = verify::length_direction_independence(gauge, xs);
  std::printf("length/direction independence: statistic %.3f, p-value %.4f\n", r.statistic,
              r.p_value);
  return 0;
}
