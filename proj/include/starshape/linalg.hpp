// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace starshape {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Surface area of the unit sphere S^{p-1} in R^p.
inline double sphere_area(int p) {
  return 2.0 * std::pow(kPi, 0.5 * p) / std::tgamma(0.5 * p);
}

inline Vector unit_vector_at(double theta) {
  Vector u(2);
  u << std::cos(theta), std::sin(theta);
  return u;
}

/// Polar angle in [0, 2pi).
inline double polar_angle(double x, double y) {
  double theta = std::atan2(y, x);
  if (theta < 0.0) theta += kTwoPi;
  if (theta >= kTwoPi) theta -= kTwoPi;
  return theta;
}

inline double frobenius_relative(const Matrix& actual, const Matrix& expected) {
  const double denom = expected.norm();
  return (actual - expected).norm() / (denom > 0.0 ? denom : 1.0);
}

}  // namespace starshape
