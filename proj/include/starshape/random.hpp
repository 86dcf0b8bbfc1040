// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include "starshape/linalg.hpp"

namespace starshape {

//---------------------------------------------------------------------------//
/*!
 * Counter-based generator (Philox4x32-10) keyed by a 64-bit seed and a 64-bit
 * stream id.
 *
 * The i-th output of stream s depends only on (seed, s, i), so splitting work
 * into blocks that each own a stream makes results independent of the number
 * of worker threads.  Satisfies UniformRandomBitGenerator.
 */
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0, std::uint64_t stream = 0)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    if (buffered_ == 0) refill();
    --buffered_;
    return buffer_[buffered_];
  }

  std::uint64_t seed() const {
    return static_cast<std::uint64_t>(key_[0]) |
           (static_cast<std::uint64_t>(key_[1]) << 32);
  }
  std::uint64_t stream() const { return stream_; }

  // Cached second Box-Muller variate.
  bool has_spare_normal = false;
  double spare_normal = 0.0;

 private:
  static void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                      std::uint32_t& lo) {
    const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(prod >> 32);
    lo = static_cast<std::uint32_t>(prod);
  }

  void refill() {
    std::array<std::uint32_t, 4> ctr{
        static_cast<std::uint32_t>(counter_),
        static_cast<std::uint32_t>(counter_ >> 32),
        static_cast<std::uint32_t>(stream_),
        static_cast<std::uint32_t>(stream_ >> 32)};
    std::array<std::uint32_t, 2> key = key_;
    for (int round = 0; round < 10; ++round) {
      std::uint32_t hi0, lo0, hi1, lo1;
      mulhilo(0xD2511F53u, ctr[0], hi0, lo0);
      mulhilo(0xCD9E8D57u, ctr[2], hi1, lo1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += 0x9E3779B9u;
      key[1] += 0xBB67AE85u;
    }
    ++counter_;
    buffer_[1] = static_cast<std::uint64_t>(ctr[0]) |
                 (static_cast<std::uint64_t>(ctr[1]) << 32);
    buffer_[0] = static_cast<std::uint64_t>(ctr[2]) |
                 (static_cast<std::uint64_t>(ctr[3]) << 32);
    buffered_ = 2;
  }

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

/// Uniform on the open interval (0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline double standard_normal(Rng& rng) {
  if (rng.has_spare_normal) {
    rng.has_spare_normal = false;
    return rng.spare_normal;
  }
  constexpr double two_pi = 6.283185307179586476925286766559;
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  rng.spare_normal = radius * std::sin(two_pi * u2);
  rng.has_spare_normal = true;
  return radius * std::cos(two_pi * u2);
}

/// Gamma(shape, 1) by Marsaglia-Tsang; shape < 1 uses the U^{1/shape} boost.
inline double standard_gamma(Rng& rng, double shape) {
  if (shape < 1.0) {
    const double boost = std::pow(uniform01(rng), 1.0 / shape);
    return standard_gamma(rng, shape + 1.0) * boost;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01(rng);
    if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

inline double chi_square(Rng& rng, double dof) {
  return 2.0 * standard_gamma(rng, 0.5 * dof);
}

/// Uniform on the unit sphere in R^p via a normalized Gaussian vector.
inline Vector uniform_on_sphere(Rng& rng, int p) {
  Vector v(p);
  double norm2 = 0.0;
  do {
    for (int i = 0; i < p; ++i) v[i] = standard_normal(rng);
    norm2 = v.squaredNorm();
  } while (norm2 == 0.0);
  return v / std::sqrt(norm2);
}

inline Vector uniform_in_ball(Rng& rng, int p, double radius) {
  const double r = radius * std::pow(uniform01(rng), 1.0 / p);
  return r * uniform_on_sphere(rng, p);
}

}  // namespace starshape
