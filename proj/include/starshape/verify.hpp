// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Property checks that turn the distributional results into pass/fail
// tests. Shared by the `starshape verify` command and the acceptance suite.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "starshape/direction.hpp"
#include "starshape/error.hpp"
#include "starshape/gauge.hpp"
#include "starshape/io.hpp"
#include "starshape/matrixmodels.hpp"
#include "starshape/parallel.hpp"
#include "starshape/quadrature.hpp"
#include "starshape/starshaped.hpp"
#include "starshape/stats.hpp"

namespace starshape::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Check> checks;

  bool pass() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  void add(std::string name, bool ok, std::string detail) {
    checks.push_back(Check{std::move(name), ok, std::move(detail)});
  }

  void add(const stats::TestReport& r, const std::string& label) {
    std::ostringstream os;
    os << r.method << ": statistic=" << r.statistic << " p=" << r.p_value
       << " n=" << r.n << " alpha=" << r.alpha;
    add(label, r.pass, os.str());
  }

  /// Runs a check body; a library Error fails the check with its message.
  template <class F>
  void guard(const std::string& name, F&& body) {
    try {
      body();
    } catch (const Error& e) {
      add(name, false, std::string("error: ") + e.what());
    }
  }

  /// "criterion N <title>: PASS|FAIL (first failing detail)".
  std::string line() const {
    std::ostringstream os;
    os << "criterion " << id << " " << title << ": " << (pass() ? "PASS" : "FAIL");
    for (const auto& c : checks)
      if (!c.pass) {
        os << " [" << c.name << ": " << c.detail << "]";
        break;
      }
    if (checks.empty()) os << " [no checks ran]";
    return os.str();
  }
};

inline io::Json to_json(const Criterion& c) {
  io::Json checks = io::Json::array();
  for (const auto& k : c.checks)
    checks.push_back({{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}});
  return {{"criterion", c.id}, {"title", c.title}, {"pass", c.pass()}, {"checks", checks}};
}

//---------------------------------------------------------------------------//
// Planar helpers
//---------------------------------------------------------------------------//

inline std::vector<double> polar_angles(const std::vector<Vector>& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(polar_angle(x[0], x[1]));
  return out;
}

/// [a, b] split at every kink (mod 2 pi) strictly inside it.
inline std::vector<double> split_at_kinks(double a, double b,
                                          const std::vector<double>& kinks) {
  std::vector<double> pts{a};
  for (double k : kinks)
    for (double s : {k - kTwoPi, k, k + kTwoPi})
      if (s > a + 1e-14 && s < b - 1e-14) pts.push_back(s);
  std::sort(pts.begin(), pts.end());
  pts.push_back(b);
  return pts;
}

inline std::vector<double> merged_kinks(const GaugeDescriptor& a, const GaugeDescriptor& b) {
  auto out = kink_angles(a);
  auto more = kink_angles(b);
  out.insert(out.end(), more.begin(), more.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline QuadratureOptions tight_options() {
  QuadratureOptions o;
  o.abs_tol = 1e-14;
  o.rel_tol = 1e-10;
  return o;
}

/// Probability that the direction angle falls in [a, b] under c0 g^{-2}.
inline double angular_mass(const GaugeDescriptor& desc, double c0, double a, double b) {
  auto f = [&](double t) { return c0 / std::pow(detail::raw_eval(desc, unit_vector_at(t)), 2); };
  return integrate_segments(f, split_at_kinks(a, b, kink_angles(desc)), tight_options()).value;
}

/// Chi-square test of planar direction angles against c0 g^{-2} on equal bins.
inline stats::TestReport direction_chisq(const GaugeDescriptor& desc, double c0,
                                         const std::vector<double>& angles,
                                         std::size_t bins = 36, double alpha = 0.001) {
  require(desc.dim() == 2, ErrorCode::DimensionMismatch, "angle tests need p = 2");
  std::vector<double> edges(bins + 1), probs(bins);
  for (std::size_t k = 0; k <= bins; ++k) edges[k] = kTwoPi * static_cast<double>(k) / bins;
  for (std::size_t k = 0; k < bins; ++k) probs[k] = angular_mass(desc, c0, edges[k], edges[k + 1]);
  auto r = stats::chisq_gof(stats::histogram(angles, edges), probs, alpha);
  r.name = "direction-law";
  return r;
}

/// Independence of g(x) and the direction (polar angle for p = 2, first
/// direction coordinate otherwise) on quantile bins.
inline stats::TestReport length_direction_independence(
    const GaugeDescriptor& gauge, const std::vector<Vector>& xs, std::size_t bins = 8,
    double alpha = 0.001,
    stats::IndependenceStatistic kind = stats::IndependenceStatistic::Pearson) {
  std::vector<double> g(xs.size()), dir(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    g[i] = gauge_eval(gauge, xs[i]);
    dir[i] = gauge.dim() == 2 ? polar_angle(xs[i][0], xs[i][1]) : xs[i][0] / xs[i].norm();
  }
  return stats::independence_chisq(g, dir, bins, bins, alpha, kind);
}

struct Calibration {
  std::size_t runs = 0;
  std::size_t rejections = 0;
  double rate() const { return runs ? static_cast<double>(rejections) / runs : 0.0; }
};

/// Rejection count of the independence test at `alpha` over independent seeds.
inline Calibration calibrate_independence(const StarDistribution& dist, std::size_t runs,
                                          std::size_t n, double alpha = 0.05,
                                          std::uint64_t first_seed = 1000) {
  Calibration c;
  c.runs = runs;
  for (std::size_t k = 0; k < runs; ++k) {
    auto xs = sample(dist, first_seed + k, n, 7);
    if (!length_direction_independence(dist.gauge(), xs, 8, alpha).pass) ++c.rejections;
  }
  return c;
}

//---------------------------------------------------------------------------//
// Normalizing constants
//---------------------------------------------------------------------------//

/// Tolerance class for the two c0 routes: exact planar quadrature is held to
/// a relative bound, Monte Carlo to a multiple of its standard error.
inline Check twin_route_check(const StarDistribution& dist) {
  std::ostringstream os;
  os.precision(10);
  const double r = dist.c0_radial();
  const double s = dist.c0_spherical();
  const double diff = std::abs(r - s);
  bool ok = false;
  if (dist.dim() >= 3) {
    const double se = dist.c0_spherical_stderr();
    ok = diff <= 3.0 * se;
    os << "c0_radial=" << r << " c0_spherical=" << s << " |diff|=" << diff
       << " bound=3*stderr=" << 3.0 * se;
  } else {
    const bool kinked = !kink_angles(dist.gauge()).empty();
    const double tol = dist.dim() == 1 ? 1e-9 : (kinked ? 1e-6 : 1e-7);
    ok = diff / s <= tol;
    os << "c0_radial=" << r << " c0_spherical=" << s << " rel=" << diff / s
       << " bound=" << tol;
  }
  return Check{"twin-route", ok, os.str()};
}

//---------------------------------------------------------------------------//
// Within-orbit pushforward
//---------------------------------------------------------------------------//

struct PushforwardOutcome {
  stats::TestReport chisq;
  double disk_mass = 0.0;
  double cell_mass = 0.0;
  double cutoff = 0.0;
};

/*!
 * Maps draws of `dist` onto the parameterization of `to` and compares a
 * polar-grid histogram with cell integrals of the pushforward density.
 * Angle bins are equal; radial edges are quantiles of the length law, the
 * last ring running to a cutoff beyond which the mass is below 1e-10.
 */
inline PushforwardOutcome pushforward_check(const StarDistribution& dist,
                                            const GaugeDescriptor& to,
                                            const std::vector<Vector>& xs,
                                            std::size_t grid = 20, double alpha = 0.001) {
  require(dist.dim() == 2 && to.dim() == 2, ErrorCode::DimensionMismatch,
          "polar-grid pushforward check needs p = 2");
  PushforwardOutcome out;
  out.cutoff = dist.radial_table().nodes().back() / sphere_bounds(to).g_min;
  std::vector<double> r_edges(grid + 1), t_edges(grid + 1);
  for (std::size_t k = 0; k <= grid; ++k) {
    t_edges[k] = kTwoPi * static_cast<double>(k) / grid;
    r_edges[k] = k == 0 ? 0.0
                 : k == grid ? out.cutoff
                             : dist.radial_table().quantile(static_cast<double>(k) / grid);
  }
  const auto kinks = merged_kinks(dist.gauge(), to);
  const auto opts = tight_options();
  auto cell = [&](double r0, double r1, double t0, double t1) {
    auto outer = [&](double t) {
      const Vector u = unit_vector_at(t);
      auto inner = [&](double r) { return pushforward_density(dist, to, r * u) * r; };
      return integrate(inner, r0, r1, opts).value;
    };
    return integrate_segments(outer, split_at_kinks(t0, t1, kinks), opts).value;
  };

  std::vector<double> probs(grid * grid);
  for (std::size_t i = 0; i < grid; ++i)
    for (std::size_t j = 0; j < grid; ++j)
      probs[i * grid + j] = cell(r_edges[i], r_edges[i + 1], t_edges[j], t_edges[j + 1]);
  for (double p : probs) out.cell_mass += p;
  out.disk_mass = cell(0.0, out.cutoff, 0.0, kTwoPi);

  std::vector<std::uint64_t> counts(grid * grid, 0);
  for (const auto& x : xs) {
    const Vector w = within_orbit_map(dist.gauge(), to, x);
    const double r = w.norm();
    auto ri = static_cast<std::size_t>(
        std::upper_bound(r_edges.begin() + 1, r_edges.end() - 1, r) - r_edges.begin() - 1);
    auto ti = std::min<std::size_t>(
        grid - 1, static_cast<std::size_t>(polar_angle(w[0], w[1]) / kTwoPi * grid));
    counts[ri * grid + ti]++;
  }
  out.chisq = stats::chisq_gof(counts, probs, alpha);
  out.chisq.name = "pushforward";
  return out;
}

//---------------------------------------------------------------------------//
// Surface measure on the unit cross section
//---------------------------------------------------------------------------//

/// Integral over Z = {g = 1} of c0 <z, n_z> against arc length (p = 2),
/// with z(t) = u(t)/g(u(t)) and the arc-length element from its derivative.
inline double cross_section_mass(const GaugeDescriptor& desc, double c0) {
  require(desc.dim() == 2, ErrorCode::DimensionMismatch, "cross-section mass needs p = 2");
  auto f = [&](double t) {
    const Vector u = unit_vector_at(t);
    Vector du(2);
    du << -u[1], u[0];
    const double g = detail::raw_eval(desc, u);
    const Vector grad = gauge_gradient(desc, u);
    const Vector z = u / g;
    const Vector dz = du / g - u * (grad.dot(du) / (g * g));
    return c0 * z.dot(grad.normalized()) * dz.norm();
  };
  return integrate_segments(f, split_at_kinks(0.0, kTwoPi, kink_angles(desc)), tight_options())
      .value;
}

//---------------------------------------------------------------------------//
// Distribution-level verification (criteria applicable to one distribution)
//---------------------------------------------------------------------------//

struct DistributionVerifyOptions {
  std::size_t n = 100000;
  std::uint64_t seed = 1;
  double alpha = 0.001;
};

inline std::vector<Criterion> verify_distribution(const StarDistribution& dist,
                                                  const DistributionVerifyOptions& o = {}) {
  std::vector<Criterion> out;
  const int p = dist.dim();

  Criterion twin{2, "twin-route consistency", {}};
  twin.checks.push_back(twin_route_check(dist));
  out.push_back(std::move(twin));

  auto xs = sample(dist, o.seed, o.n, 0);

  Criterion indep{3, "length/direction independence", {}};
  indep.guard("independence", [&] {
    indep.add(length_direction_independence(dist.gauge(), xs, 8, o.alpha), "independence");
  });
  out.push_back(std::move(indep));

  if (p != 2) return out;

  Criterion dir{4, "direction law", {}};
  dir.guard("direction-chisq", [&] {
    dir.add(direction_chisq(dist.gauge(), dist.c0_spherical(), polar_angles(xs), 36, o.alpha),
            "direction-chisq");
  });
  dir.guard("null-robustness", [&] {
    const auto other_profile = dist.profile().family == RadialFamily::Exponential
                                   ? RadialProfile::gaussian(1.0)
                                   : RadialProfile::exponential(1.0);
    auto other = StarDistribution::build(dist.gauge(), other_profile);
    auto ys = sample(other, o.seed + 1, o.n, 1);
    dir.add(stats::two_sample_ks(polar_angles(xs), polar_angles(ys), 0.01), "null-robustness");
  });
  out.push_back(std::move(dir));

  Criterion push{5, "within-orbit pushforward", {}};
  push.guard("pushforward", [&] {
    auto res = pushforward_check(dist, GaugeDescriptor::sup_norm(2), xs, 20, o.alpha);
    push.add(res.chisq, "pushforward-chisq");
    std::ostringstream os;
    os.precision(10);
    os << "disk mass=" << res.disk_mass << " (bound 1e-4)";
    push.add("pushforward-mass", std::abs(res.disk_mass - 1.0) <= 1e-4, os.str());
  });
  out.push_back(std::move(push));

  if (dist.gauge().kind() != GaugeKind::DirectionDerived) {
    Criterion surf{7, "surface measure", {}};
    surf.guard("cross-section-mass", [&] {
      const double m = cross_section_mass(dist.gauge(), dist.c0_spherical());
      std::ostringstream os;
      os.precision(12);
      os << "mass=" << m << " (bound 1e-6)";
      surf.add("cross-section-mass", std::abs(m - 1.0) <= 1e-6, os.str());
    });
    out.push_back(std::move(surf));
  }
  return out;
}

//---------------------------------------------------------------------------//
// Matrix models
//---------------------------------------------------------------------------//

/// n independent pairs (W1, W2) ~ (Wishart_p(I, n1), Wishart_p(I, n2)).
inline std::vector<matrix::PDPair> wishart_pairs(int p, double n1, double n2, std::size_t n,
                                                 std::uint64_t seed, std::uint64_t stream = 0) {
  std::vector<matrix::PDPair> out(n);
  for_each_block(n, [&](std::uint64_t block, std::size_t begin, std::size_t end) {
    Rng rng(seed, (stream << 32) + block);
    for (std::size_t i = begin; i < end; ++i) {
      Matrix w1 = matrix::wishart_sample(p, n1, rng);
      Matrix w2 = matrix::wishart_sample(p, n2, rng);
      out[i] = matrix::PDPair{std::move(w1), std::move(w2)};
    }
  });
  return out;
}

/*!
 * Cell probabilities of a p = 2 density on {0 < U < I} over an equal grid of
 * (u11, u22, u12) in [0,1] x [0,1] x [-1/2, 1/2], flattened u11-major.
 * The u12 range of a cell is intersected with |u12| < m(u11, u22) and
 * integrated in the angle phi of u12 = m sin(phi).
 */
inline std::vector<double> matrix_beta_cells(const std::function<double(const Matrix&)>& density,
                                             std::size_t bins = 5) {
  QuadratureOptions opts;
  opts.abs_tol = 1e-13;
  opts.rel_tol = 1e-9;
  const double w = 1.0 / static_cast<double>(bins);
  auto cell = [&](double a11, double b11, double a22, double b22, double c, double d) {
    Matrix u(2, 2);
    auto middle_fn = [&](double u11) {
      auto inner_fn = [&](double u22) {
        const double m = std::sqrt(std::max(0.0, std::min(u11 * u22, (1.0 - u11) * (1.0 - u22))));
        if (m <= 0.0 || c >= m || d <= -m) return 0.0;
        const double lo = std::asin(std::max(-1.0, c / m));
        const double hi = std::asin(std::min(1.0, d / m));
        auto f = [&](double phi) {
          const double u12 = m * std::sin(phi);
          u << u11, u12, u12, u22;
          return density(u) * m * std::cos(phi);
        };
        return integrate(f, lo, hi, opts).value;
      };
      std::vector<double> pts{a22, b22};
      auto add = [&](double v) {
        if (v > a22 && v < b22) pts.push_back(v);
      };
      add(1.0 - u11);
      for (double e : {c, d})
        if (e != 0.0) {
          add(e * e / u11);
          add(1.0 - e * e / (1.0 - u11));
        }
      std::sort(pts.begin(), pts.end());
      return integrate_segments(inner_fn, pts, opts).value;
    };
    std::vector<double> pts{a11, b11};
    auto add = [&](double v) {
      if (v > a11 && v < b11) pts.push_back(v);
    };
    for (double e : {a22, b22}) {
      add(1.0 - e);
      for (double cc : {c, d})
        if (cc != 0.0) {
          if (e > 0.0) add(cc * cc / e);
          if (e < 1.0) add(1.0 - cc * cc / (1.0 - e));
        }
    }
    for (double cc : {c, d})
      if (cc != 0.0 && 1.0 - 4.0 * cc * cc > 0.0) {
        const double s = std::sqrt(1.0 - 4.0 * cc * cc);
        add(0.5 * (1.0 - s));
        add(0.5 * (1.0 + s));
      }
    std::sort(pts.begin(), pts.end());
    return integrate_segments(middle_fn, pts, opts).value;
  };
  std::vector<double> probs;
  probs.reserve(bins * bins * bins);
  for (std::size_t i = 0; i < bins; ++i)
    for (std::size_t j = 0; j < bins; ++j)
      for (std::size_t k = 0; k < bins; ++k)
        probs.push_back(cell(i * w, (i + 1) * w, j * w, (j + 1) * w, -0.5 + k * w,
                             -0.5 + (k + 1) * w));
  return probs;
}

inline std::size_t matrix_beta_cell_index(const Matrix& u, std::size_t bins) {
  auto idx = [&](double v) {
    return std::min(bins - 1, static_cast<std::size_t>(std::max(0.0, v) * bins));
  };
  return (idx(u(0, 0)) * bins + idx(u(1, 1))) * bins + idx(u(0, 1) + 0.5);
}

/// Cell probabilities of an ordered-root density over an equal bins x bins
/// grid on [0,1]^2 restricted to l1 > l2, flattened l1-major.
inline std::vector<double> ordered_root_cells(const std::function<double(double, double)>& density,
                                              std::size_t bins = 10) {
  QuadratureOptions opts;
  opts.abs_tol = 1e-13;
  opts.rel_tol = 1e-9;
  const double w = 1.0 / static_cast<double>(bins);
  std::vector<double> probs(bins * bins, 0.0);
  for (std::size_t i = 0; i < bins; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double a1 = i * w, b1 = (i + 1) * w, a2 = j * w, b2 = (j + 1) * w;
      auto outer = [&](double l1) {
        const double top = std::min(b2, l1);
        if (top <= a2) return 0.0;
        return integrate([&](double l2) { return density(l1, l2); }, a2, top, opts).value;
      };
      probs[i * bins + j] = integrate(outer, a1, b1, opts).value;
    }
  return probs;
}

struct MatrixVerifyOptions {
  int p = 2;
  double n1 = 5.0;
  double n2 = 7.0;
  std::size_t n = 100000;
  std::uint64_t seed = 3;
  double alpha = 0.001;
};

/// Criteria 8 to 10 evaluated on Wishart pairs.
inline std::vector<Criterion> verify_matrix(const MatrixVerifyOptions& o = {}) {
  using namespace matrix;
  std::vector<Criterion> out;
  const double a = 0.5 * o.n1, b = 0.5 * o.n2;
  const auto pairs = wishart_pairs(o.p, o.n1, o.n2, o.n, o.seed);

  Criterion beta{8, "matrix beta law", {}};
  std::vector<LTDecomposition> lts;
  beta.guard("lt-decompose", [&] {
    lts.reserve(pairs.size());
    double worst = 0.0;
    for (const auto& pr : pairs) {
      lts.push_back(lt_orbital_decompose(pr));
      worst = std::max(worst, lts.back().residual);
    }
    std::ostringstream os;
    os << "max reconstruction residual=" << worst << " (bound 1e-8)";
    beta.add("lt-reconstruction", worst <= 1e-8, os.str());
  });
  if (!lts.empty()) {
    beta.guard("bartlett", [&] {
      for (int i = 0; i < o.p; ++i) {
        std::vector<double> t2;
        t2.reserve(lts.size());
        for (const auto& d : lts) t2.push_back(d.T(i, i) * d.T(i, i));
        const double dof = o.n1 + o.n2 - i;
        beta.add(stats::ks_test(t2, [&](double x) {
                   return x <= 0.0 ? 0.0 : boost::math::gamma_p(0.5 * dof, 0.5 * x);
                 }, 0.01),
                 "bartlett-t" + std::to_string(i + 1) + std::to_string(i + 1));
      }
    });
    beta.guard("t-u-independence", [&] {
      std::vector<double> t11, lu;
      for (const auto& d : lts) {
        t11.push_back(d.T(0, 0));
        Eigen::SelfAdjointEigenSolver<Matrix> eig(d.U, Eigen::EigenvaluesOnly);
        lu.push_back(eig.eigenvalues().maxCoeff());
      }
      beta.add(stats::independence_chisq(t11, lu, 8, 8, o.alpha,
                                         stats::IndependenceStatistic::LikelihoodRatio),
               "t-u-independence");
    });
    if (o.p == 1) {
      beta.guard("scalar-beta", [&] {
        std::vector<double> u;
        for (const auto& d : lts) u.push_back(d.U(0, 0));
        beta.add(stats::ks_test(u, [&](double x) {
                   return x <= 0.0 ? 0.0 : x >= 1.0 ? 1.0 : boost::math::ibeta(a, b, x);
                 }, 0.01),
                 "scalar-beta-ks");
      });
    }
    if (o.p == 2) {
      beta.guard("matrix-beta-histogram", [&] {
        MatrixBetaLaw law(2, a, b);
        const double k = std::exp(*law.log_normalizer());
        const auto probs =
            matrix_beta_cells([&](const Matrix& u) { return k * law.shape_unchecked(u); }, 5);
        std::vector<std::uint64_t> counts(probs.size(), 0);
        for (const auto& d : lts) counts[matrix_beta_cell_index(d.U, 5)]++;
        beta.add(stats::chisq_gof(counts, probs, o.alpha), "matrix-beta-histogram");
      });
    }
  }
  out.push_back(std::move(beta));

  if (o.p < 2) return out;

  Criterion eig{9, "ordered-root law", {}};
  std::vector<GLDecomposition> gls;
  std::size_t degenerate = 0;
  eig.guard("gl-decompose", [&] {
    gls.reserve(pairs.size());
    double worst = 0.0;
    for (const auto& pr : pairs) {
      try {
        gls.push_back(gl_orbital_decompose(pr));
        worst = std::max(worst, gls.back().residual);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateRoots) throw;
        ++degenerate;
      }
    }
    std::ostringstream os;
    os << "max reconstruction residual=" << worst << " degenerate=" << degenerate;
    eig.add("gl-reconstruction", worst <= 1e-8, os.str());
  });
  if (!gls.empty() && o.p == 2) {
    eig.guard("root-histogram", [&] {
      EigenvalueLaw law(2, a, b);
      const double k = std::exp(*law.log_normalizer());
      Vector l(2);
      const auto probs = ordered_root_cells(
          [&](double l1, double l2) {
            l << l1, l2;
            return k * law.shape_unchecked(l);
          },
          10);
      std::vector<std::uint64_t> counts(probs.size(), 0);
      for (const auto& d : gls) {
        auto i = std::min<std::size_t>(9, static_cast<std::size_t>(d.l[0] * 10));
        auto j = std::min<std::size_t>(9, static_cast<std::size_t>(d.l[1] * 10));
        counts[i * 10 + j]++;
      }
      eig.add(stats::chisq_gof(counts, probs, o.alpha), "root-histogram");
    });
  }
  if (!gls.empty()) {
    eig.guard("b-l-independence", [&] {
      std::vector<double> b11, l1, l2;
      for (const auto& d : gls) {
        b11.push_back(d.B(0, 0));
        l1.push_back(d.l[0]);
        l2.push_back(d.l[1]);
      }
      eig.add(stats::independence_chisq(b11, l1, 8, 8, o.alpha,
                                        stats::IndependenceStatistic::LikelihoodRatio),
              "b-l1-independence");
      eig.add(stats::independence_chisq(b11, l2, 8, 8, o.alpha,
                                        stats::IndependenceStatistic::LikelihoodRatio),
              "b-l2-independence");
    });
  }
  eig.guard("degenerate-pair", [&] {
    const Matrix w = Matrix::Identity(o.p, o.p);
    try {
      gl_orbital_decompose(PDPair::make(w, w));
      eig.add("degenerate-pair", false, "W1 = W2 was accepted");
    } catch (const Error& e) {
      eig.add("degenerate-pair", e.code() == ErrorCode::DegenerateRoots, e.what());
    }
  });
  out.push_back(std::move(eig));

  Criterion glob{10, "cross-section globality", {}};
  glob.guard("sign-group", [&] {
    std::vector<PDPair> pts;
    for (const auto& d : gls) {
      if (pts.size() >= 50) break;
      pts.push_back(PDPair{d.z1, d.z2});
    }
    auto rep = verify_global_cross_section(pts, Group::GL);
    glob.add("standard-gl", rep.clean(),
             rep.clean() ? std::to_string(pts.size()) + " points clean" : rep.violations.front());
  });
  out.push_back(std::move(glob));
  return out;
}

}  // namespace starshape::verify
