// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "sigrel/sigmodel.hpp"

namespace sigrel {

/// The six coordinate-system parameters: experimenter `a`, zero event `o`,
/// unit event `u` (both on a's worldline), and three axis locations.
struct Frame {
  Particle a;
  Event o;
  Event u;
  Particle ax, ay, az;
};

/// Component of (p - o) orthogonal to a's worldline, i.e. p's offset in a's
/// rest space through o. Identical for every point of a particle parallel to a.
inline Event rest_offset(const Particle& a, const Event& o, const Event& p) {
  Event d = p - o;
  Event D = a.direction();
  return d - (mdot(d, D) / mdot(D, D)) * D;
}

/// Positive-definite inner product on rest-space vectors.
inline Scalar sdot(const Event& a, const Event& b) { return -mdot(a, b); }

/// Orthogonal (not normalized) rest-space axis vectors of the frame, in the
/// order ax, ay, az, after Gram-Schmidt.
inline std::array<Event, 3> rest_basis(const Frame& f) {
  Event wx = rest_offset(f.a, f.o, f.ax.base());
  Event wy = rest_offset(f.a, f.o, f.ay.base());
  Event wz = rest_offset(f.a, f.o, f.az.base());
  wy = wy - (sdot(wy, wx) / sdot(wx, wx)) * wx;
  wz = wz - (sdot(wz, wx) / sdot(wx, wx)) * wx - (sdot(wz, wy) / sdot(wy, wy)) * wy;
  return {wx, wy, wz};
}

inline bool frame_validate(const Frame& f) {
  if (!f.a.contains(f.o) || !f.a.contains(f.u)) return false;
  if (f.o == f.u || !(f.o.t < f.u.t)) return false;
  for (const Particle* p : {&f.ax, &f.ay, &f.az}) {
    if (!(p->velocity() == f.a.velocity())) return false;
  }
  Event wx = rest_offset(f.a, f.o, f.ax.base());
  Event wy = rest_offset(f.a, f.o, f.ay.base());
  Event wz = rest_offset(f.a, f.o, f.az.base());
  if (wx.is_zero() || wy.is_zero() || wz.is_zero()) return false;
  // Orthogonality is tested on the cosine-squared so the tolerance is scale free.
  auto orthogonal = [](const Event& p, const Event& q) {
    Scalar c = sdot(p, q);
    return (c * c / (sdot(p, p) * sdot(q, q))).is_zero();
  };
  return orthogonal(wx, wy) && orthogonal(wx, wz) && orthogonal(wy, wz);
}

/// Coordinates of `e` in the frame: the Poincare transform to a's rest frame
/// with origin o, composed with the dilation that sends u to time 1.
inline std::array<Scalar, 4> poincare_to_frame(const Frame& f, const Event& e) {
  Event U = f.u - f.o;
  Scalar tau2 = mdot(U, U);
  Event d = e - f.o;
  Scalar t = mdot(d, U) / tau2;
  Event r = d - t * U;
  auto basis = rest_basis(f);
  std::array<Scalar, 4> out{t, Scalar(0), Scalar(0), Scalar(0)};
  for (int i = 0; i < 3; ++i) {
    const Event& w = basis[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i + 1)] = sdot(r, w) / sqrt(sdot(w, w) * tau2);
  }
  return out;
}

/// Inverse of poincare_to_frame: the event with the given frame coordinates.
inline Event poincare_from_frame(const Frame& f, const std::array<Scalar, 4>& c) {
  Event U = f.u - f.o;
  Scalar tau2 = mdot(U, U);
  Event e = f.o + c[0] * U;
  auto basis = rest_basis(f);
  for (int i = 0; i < 3; ++i) {
    const Event& w = basis[static_cast<std::size_t>(i)];
    e = e + (c[static_cast<std::size_t>(i + 1)] * sqrt(tau2 / sdot(w, w))) * w;
  }
  return e;
}

/// Frame whose time axis is `a`, with o, the unit interval along a's
/// worldline, and spatial axes given as rest-frame unit directions, boosted
/// into a's rest space. Requires rational gamma for exact results.
inline Frame frame_with_axes(const Particle& a, const Event& o, const Scalar& unit, const std::array<Vec3, 3>& axes) {
  const Vec3& v = a.velocity();
  Scalar v2 = v.norm2();
  Scalar gamma = Scalar(1) / sqrt(Scalar(1) - v2);
  Event u = o + (unit * gamma) * a.direction();
  std::array<Particle, 3> locs{a, a, a};
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec3& n = axes[i];
    // Boost of the spatial vector n: (gamma v.n, n + (gamma-1)/v2 (v.n) v).
    Scalar vn = v.dot(n);
    Vec3 s = v2.is_zero() ? n : n + ((gamma - Scalar(1)) / v2 * vn) * v;
    Event w = Event::from(gamma * vn, s);
    locs[i] = a.parallel_through(o + w);
  }
  return Frame{a, o, u, locs[0], locs[1], locs[2]};
}

/// frame_with_axes with the standard x, y, z directions.
inline Frame standard_frame(const Particle& a, const Event& o, const Scalar& unit) {
  return frame_with_axes(a, o, unit,
                         {Vec3{Scalar(1), Scalar(0), Scalar(0)}, Vec3{Scalar(0), Scalar(1), Scalar(0)},
                          Vec3{Scalar(0), Scalar(0), Scalar(1)}});
}

}  // namespace sigrel
