// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "sigrel/minkowski.hpp"

namespace sigrel {

/// Seeded generator whose output depends only on the seed. Distributions are
/// derived from the raw engine words so results are identical across standard
/// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  long long uniform_int(long long lo, long long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return lo + static_cast<long long>(r % span);
  }

  bool coin(int num = 1, int den = 2) { return uniform_int(0, den - 1) < num; }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Rational k/den with k uniform in [lo*den, hi*den].
  Scalar rational(long long lo, long long hi, long long den) {
    return Scalar::ratio(uniform_int(lo * den, hi * den), den);
  }

  /// Scalar in [lo, hi] in the given backend: a fine-grained rational for the
  /// exact backend, a 53-bit uniform for the approximate one.
  Scalar scalar(double lo, double hi, Backend b, double eps = kDefaultEps) {
    if (b == Backend::exact) {
      return Scalar::ratio(uniform_int(static_cast<long long>(lo * 16), static_cast<long long>(hi * 16)), 16);
    }
    return Scalar::approx(Real(lo) + Real(hi - lo) * Real(unit()), eps);
  }

  /// Rational point of the unit sphere (inverse stereographic projection).
  Vec3 unit_vector(Backend b, double eps = kDefaultEps) {
    Scalar p = rational(-3, 3, 4);
    Scalar q = rational(-3, 3, 4);
    Scalar d = Scalar(1) + p * p + q * q;
    Vec3 v{Scalar(2) * p / d, Scalar(2) * q / d, (Scalar(1) - p * p - q * q) / d};
    if (b == Backend::approx) v = {v.x.to(b, eps), v.y.to(b, eps), v.z.to(b, eps)};
    return v;
  }

  /// Velocity with |v| < max_speed.
  Vec3 velocity(Backend b, double max_speed = 0.9, double eps = kDefaultEps) {
    for (;;) {
      Vec3 v{scalar(-max_speed, max_speed, b, eps), scalar(-max_speed, max_speed, b, eps),
             scalar(-max_speed, max_speed, b, eps)};
      if (v.norm2() < Scalar::approx(Real(max_speed * max_speed), 0.0)) return v;
    }
  }

  Event event(double range, Backend b, double eps = kDefaultEps) {
    return {scalar(-range, range, b, eps), scalar(-range, range, b, eps), scalar(-range, range, b, eps),
            scalar(-range, range, b, eps)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sigrel
