// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "starshape/error.hpp"

namespace starshape::stats {

struct TestReport {
  std::string name;
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
  double dof = 0.0;  // zero when not applicable
  std::string method;
  double alpha = 0.01;
  bool pass = true;
};

inline TestReport finish(TestReport r, double alpha) {
  r.p_value = std::clamp(r.p_value, 0.0, 1.0);
  r.alpha = alpha;
  r.pass = r.p_value > alpha;
  return r;
}

/*!
 * Kolmogorov distribution upper tail Q(lambda) = P(K > lambda).
 *
 * Alternating series for lambda >= 1.18; the Jacobi theta form otherwise,
 * where the alternating series converges slowly. Terms are summed until
 * they drop below 1e-16 (at least 20 terms in the alternating form).
 */
inline double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.18) {
    const double pi = 3.141592653589793238462643383279502884;
    const double w = pi * pi / (8.0 * lambda * lambda);
    double sum = 0.0;
    for (int k = 1; k < 100; ++k) {
      const double term = std::exp(-static_cast<double>((2 * k - 1) * (2 * k - 1)) * w);
      sum += term;
      if (term < 1e-16 * sum) break;
    }
    return std::clamp(1.0 - std::sqrt(2.0 * pi) / lambda * sum, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (k >= 20 && term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

/// Upper tail of the chi-square distribution.
inline double chisq_upper_tail(double statistic, double dof) {
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * statistic);
}

/// One-sample Kolmogorov-Smirnov test with the asymptotic p-value.
inline TestReport ks_test(std::vector<double> samples,
                          const std::function<double(double)>& cdf,
                          double alpha = 0.01) {
  require(samples.size() >= 10, ErrorCode::TooFewSamples,
          "KS test needs at least 10 samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  TestReport r;
  r.name = "ks";
  r.method = "one-sample Kolmogorov-Smirnov, asymptotic";
  r.statistic = d;
  r.n = samples.size();
  r.p_value = kolmogorov_q(std::sqrt(n) * d);
  return finish(r, alpha);
}

/// Two-sample Kolmogorov-Smirnov test at effective size n_a n_b/(n_a+n_b).
inline TestReport two_sample_ks(std::vector<double> a, std::vector<double> b,
                                double alpha = 0.01) {
  require(a.size() >= 10 && b.size() >= 10, ErrorCode::TooFewSamples,
          "two-sample KS needs at least 10 samples per side");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  TestReport r;
  r.name = "two-sample-ks";
  r.method = "two-sample Kolmogorov-Smirnov, asymptotic";
  r.statistic = d;
  r.n = a.size() + b.size();
  const double ne = na * nb / (na + nb);
  r.p_value = kolmogorov_q(std::sqrt(ne) * d);
  return finish(r, alpha);
}

/*!
 * Pearson chi-square goodness of fit.
 *
 * Bins whose expected count is below 5 are merged with their neighbours in
 * order, and a short remainder joins the last merged bin.
 */
inline TestReport chisq_gof(const std::vector<std::uint64_t>& counts,
                            const std::vector<double>& probs,
                            double alpha = 0.01) {
  require(counts.size() == probs.size(), ErrorCode::InvalidParameter,
          "counts and probabilities differ in length");
  const double total_prob = std::accumulate(probs.begin(), probs.end(), 0.0);
  require(std::abs(total_prob - 1.0) <= 1e-6, ErrorCode::InvalidParameter,
          "expected probabilities sum to " + std::to_string(total_prob));
  const double n = static_cast<double>(
      std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  std::vector<std::pair<double, double>> merged;  // (observed, expected)
  double obs = 0.0, exp = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    obs += static_cast<double>(counts[i]);
    exp += n * probs[i];
    if (exp >= 5.0) {
      merged.emplace_back(obs, exp);
      obs = exp = 0.0;
    }
  }
  if ((obs > 0.0 || exp > 0.0) && !merged.empty()) {
    merged.back().first += obs;
    merged.back().second += exp;
  }
  require(merged.size() >= 2, ErrorCode::DegenerateBins,
          "fewer than 2 bins survive merging");
  double stat = 0.0;
  for (const auto& [o, e] : merged) stat += (o - e) * (o - e) / e;
  TestReport r;
  r.name = "chisq-gof";
  r.method = "Pearson chi-square, " + std::to_string(merged.size()) + " bins after merging";
  r.statistic = stat;
  r.n = static_cast<std::size_t>(n);
  r.dof = static_cast<double>(merged.size() - 1);
  r.p_value = chisq_upper_tail(stat, r.dof);
  return finish(r, alpha);
}

/// Histogram of values into bins defined by sorted edges; values outside
/// [edges.front(), edges.back()) are clamped into the end bins.
inline std::vector<std::uint64_t> histogram(const std::vector<double>& values,
                                            const std::vector<double>& edges) {
  std::vector<std::uint64_t> counts(edges.size() - 1, 0);
  for (double v : values) {
    auto it = std::upper_bound(edges.begin(), edges.end(), v);
    std::size_t k = it == edges.begin() ? 0 : static_cast<std::size_t>(it - edges.begin()) - 1;
    counts[std::min(k, counts.size() - 1)]++;
  }
  return counts;
}

enum class IndependenceStatistic { Pearson, LikelihoodRatio };

/// Bin index of each value by rank, giving equal-count margins.
inline std::vector<std::size_t> quantile_bins(const std::vector<double>& v,
                                              std::size_t bins) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
  std::vector<std::size_t> out(v.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    out[order[rank]] = rank * bins / order.size();
  return out;
}

/*!
 * Contingency-table independence test with empirical-quantile binning on
 * each margin; dof = (bins_a - 1)(bins_b - 1).
 */
inline TestReport independence_chisq(
    const std::vector<double>& a, const std::vector<double>& b,
    std::size_t bins_a, std::size_t bins_b, double alpha = 0.001,
    IndependenceStatistic kind = IndependenceStatistic::Pearson) {
  require(a.size() == b.size(), ErrorCode::InvalidParameter,
          "paired samples differ in length");
  require(bins_a >= 2 && bins_b >= 2, ErrorCode::InvalidParameter,
          "need at least 2 bins per margin");
  require(a.size() >= 50 * bins_a * bins_b, ErrorCode::TooFewSamples,
          "independence test needs n >= 50 * bins_a * bins_b");
  const auto ia = quantile_bins(a, bins_a);
  const auto ib = quantile_bins(b, bins_b);
  std::vector<double> table(bins_a * bins_b, 0.0), row(bins_a, 0.0), col(bins_b, 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    table[ia[k] * bins_b + ib[k]] += 1.0;
    row[ia[k]] += 1.0;
    col[ib[k]] += 1.0;
  }
  const double n = static_cast<double>(a.size());
  double stat = 0.0;
  for (std::size_t i = 0; i < bins_a; ++i)
    for (std::size_t j = 0; j < bins_b; ++j) {
      const double e = row[i] * col[j] / n;
      const double o = table[i * bins_b + j];
      if (kind == IndependenceStatistic::Pearson)
        stat += (o - e) * (o - e) / e;
      else if (o > 0.0)
        stat += 2.0 * o * std::log(o / e);
    }
  TestReport r;
  r.name = "independence";
  r.method = kind == IndependenceStatistic::Pearson
                 ? "Pearson contingency chi-square, quantile bins"
                 : "likelihood-ratio (G) contingency test, quantile bins";
  r.statistic = stat;
  r.n = a.size();
  r.dof = static_cast<double>((bins_a - 1) * (bins_b - 1));
  r.p_value = chisq_upper_tail(stat, r.dof);
  return finish(r, alpha);
}

}  // namespace starshape::stats
