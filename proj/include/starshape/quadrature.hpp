// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "starshape/error.hpp"

namespace starshape {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t n_evals = 0;
  bool converged = true;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  std::size_t max_subdivisions = 4000;
};

namespace detail {

// 21-point Kronrod rule with embedded 10-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 11> kKronrodNodes{
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kKronrodWeights{
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208643474262, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kGaussWeights{
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel kronrod21(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 21> values{};
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[10];
  double gauss = 0.0;
  double res_abs = std::abs(kronrod);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    values[2 * j] = f1;
    values[2 * j + 1] = f2;
    kronrod += kKronrodWeights[j] * (f1 + f2);
    res_abs += kKronrodWeights[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (f1 + f2);
  }
  const double mean = 0.5 * kronrod;
  double res_asc = kKronrodWeights[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j)
    res_asc += kKronrodWeights[j] * (std::abs(values[2 * j] - mean) +
                                     std::abs(values[2 * j + 1] - mean));
  const double scale = std::abs(half);
  kronrod *= half;
  gauss *= half;
  res_abs *= scale;
  res_asc *= scale;
  double err = std::abs(kronrod - gauss);
  if (res_asc != 0.0 && err != 0.0)
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(50.0 * eps * res_abs, err);
  if (!std::isfinite(kronrod)) err = std::numeric_limits<double>::infinity();
  return {a, b, kronrod, err};
}

}  // namespace detail

/*!
 * Globally adaptive Gauss-Kronrod (21-point) integration of f over [a, b].
 *
 * The panel with the largest error estimate is bisected until the summed
 * error meets max(abs_tol, rel_tol * |value|) or the subdivision budget is
 * exhausted, in which case the result is flagged as not converged.
 */
template <class F>
QuadratureResult integrate(F&& f, double a, double b,
                           const QuadratureOptions& opts = {}) {
  QuadratureResult out;
  if (a == b) return out;
  std::priority_queue<detail::Panel> heap;
  auto first = detail::kronrod21(f, a, b);
  out.n_evals = 21;
  double total = first.value;
  double error = first.error;
  heap.push(first);
  std::size_t panels = 1;
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (panels >= opts.max_subdivisions) {
      out.converged = false;
      break;
    }
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) {
      heap.push(worst);
      out.converged = false;
      break;
    }
    const auto left = detail::kronrod21(f, worst.a, mid);
    const auto right = detail::kronrod21(f, mid, worst.b);
    out.n_evals += 42;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  // Re-sum from the panels to shed accumulated update round-off.
  total = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  out.value = total;
  out.abs_error = error;
  if (!std::isfinite(total)) out.converged = false;
  return out;
}

/// Integrate over consecutive segments of a sorted breakpoint list.
template <class F>
QuadratureResult integrate_segments(F&& f, const std::vector<double>& points,
                                    const QuadratureOptions& opts = {}) {
  QuadratureResult out;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    auto piece = integrate(f, points[i], points[i + 1], opts);
    out.value += piece.value;
    out.abs_error += piece.abs_error;
    out.n_evals += piece.n_evals;
    out.converged = out.converged && piece.converged;
  }
  return out;
}

/// Like integrate(), but throws QuadratureFailure when not converged.
template <class F>
double integrate_or_throw(F&& f, double a, double b,
                          const QuadratureOptions& opts = {}) {
  auto r = integrate(f, a, b, opts);
  require(r.converged, ErrorCode::QuadratureFailure,
          "adaptive quadrature did not reach the error target");
  return r.value;
}

/// Composite Simpson rule with an even number of panels.
template <class F>
double simpson(F&& f, double a, double b, std::size_t panels) {
  if (panels < 2) panels = 2;
  if (panels % 2 == 1) ++panels;
  const double h = (b - a) / static_cast<double>(panels);
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i < panels; ++i) {
    const double v = f(a + h * static_cast<double>(i));
    if (i % 2 == 1)
      odd += v;
    else
      even += v;
  }
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

}  // namespace starshape
