// SPDX-License-Identifier: Apache-2.0
// Seeded instance generators shared by the sweeps and the acceptance run.
#pragma once

#include <cstdint>

#include "sigrel/coords.hpp"

namespace sigrel::fixtures {

inline Scalar ax(double v) { return Scalar::approx(Real(v)); }
inline Scalar q(long long n, long long d = 1) { return Scalar::ratio(n, d); }

inline Event ev(long long t, long long x, long long y, long long z) { return {q(t), q(x), q(y), q(z)}; }

inline Particle random_particle(Rng& rng, double max_speed = 0.6) {
  return Particle::make(rng.event(4, Backend::approx), rng.velocity(Backend::approx, max_speed));
}

/// Rest-space vector of a with random spatial components.
inline Event random_rest_vector(Rng& rng, const Particle& a, double range = 3) {
  Event w{Scalar::approx(Real(0)), rng.scalar(-range, range, Backend::approx), rng.scalar(-range, range, Backend::approx),
          rng.scalar(-range, range, Backend::approx)};
  return rest_offset(a, a.base(), a.base() + w);
}

inline Calibration random_calibration(Rng& rng) {
  Particle a = random_particle(rng);
  Scalar t0 = rng.scalar(-2, 2, Backend::approx);
  Scalar unit = rng.scalar(0.5, 2, Backend::approx);
  return {a, a.at(t0), a.at(t0 + unit)};
}

inline FieldPoint random_point(Rng& rng, const Calibration& c, double range = 3) {
  return field_point(c, rng.scalar(-range, range, Backend::approx));
}

inline Location random_location(Rng& rng, const Particle& anchor) {
  return Location::at(anchor, random_rest_vector(rng, anchor));
}

/// A valid frame on a random sub-light experimenter.
inline Frame random_frame(Rng& rng) {
  Particle a = random_particle(rng);
  Event o = a.at(rng.scalar(-2, 2, Backend::approx));
  return standard_frame(a, o, rng.scalar(0.5, 2, Backend::approx));
}

/// A future-timelike displacement.
inline Event random_timelike(Rng& rng) {
  for (;;) {
    Event d = rng.event(3, Backend::approx);
    d.t = abs(d.t) + Scalar::approx(Real(0.1));
    if (mdot(d, d).sign() > 0) return d;
  }
}

/// An interval-preserving image of V: a spatial rotation about z by a random
/// angle followed by an x boost.
inline Event lorentz_image(Rng& rng, const Event& V) {
  Real th = Real(6.283185307179586) * Real(rng.unit());
  Scalar c = Scalar::approx(cos(th)), s = Scalar::approx(sin(th));
  Event r{V.t, c * V.x - s * V.y, s * V.x + c * V.y, V.z};
  Scalar beta = rng.scalar(-0.7, 0.7, Backend::approx);
  Scalar gamma = Scalar(1) / sqrt(Scalar(1) - beta * beta);
  return {gamma * (r.t - beta * r.x), gamma * (r.x - beta * r.t), r.y, r.z};
}

}  // namespace sigrel::fixtures
