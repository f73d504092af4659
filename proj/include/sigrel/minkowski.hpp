// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <ostream>
#include <string>
#include <string_view>

#include "sigrel/scalar.hpp"

namespace sigrel {

struct Vec3 {
  Scalar x, y, z;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(const Scalar& k, const Vec3& a) { return {k * a.x, k * a.y, k * a.z}; }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

  Scalar dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Scalar norm2() const { return dot(*this); }
  Vec3 cross(const Vec3& o) const { return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x}; }
  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
};

/// A point of spacetime (t, x, y, z) in units with c = 1. Also used for
/// displacement 4-vectors.
struct Event {
  Scalar t, x, y, z;

  Vec3 space() const { return {x, y, z}; }
  static Event from(const Scalar& t, const Vec3& s) { return {t, s.x, s.y, s.z}; }

  friend Event operator+(const Event& a, const Event& b) { return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Event operator-(const Event& a, const Event& b) { return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Event operator*(const Scalar& k, const Event& a) { return {k * a.t, k * a.x, k * a.y, k * a.z}; }
  Event operator-() const { return {-t, -x, -y, -z}; }
  friend bool operator==(const Event& a, const Event& b) {
    return a.t == b.t && a.x == b.x && a.y == b.y && a.z == b.z;
  }

  bool is_zero() const { return t.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }

  std::array<Scalar, 4> coords() const { return {t, x, y, z}; }

  friend std::ostream& operator<<(std::ostream& os, const Event& e) {
    return os << '(' << e.t << ", " << e.x << ", " << e.y << ", " << e.z << ')';
  }
};

/// Minkowski inner product with signature (+, -, -, -).
inline Scalar mdot(const Event& a, const Event& b) { return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z; }

/// (dt)^2 - (dx)^2 - (dy)^2 - (dz)^2 between two events.
inline Scalar interval2(const Event& e1, const Event& e2) {
  Event d = e2 - e1;
  return mdot(d, d);
}

enum class Separation { equal, lightlike_future, lightlike_past, timelike_future, timelike_past, spacelike };

inline std::string_view to_string(Separation s) {
  switch (s) {
    case Separation::equal: return "equal";
    case Separation::lightlike_future: return "lightlike-future";
    case Separation::lightlike_past: return "lightlike-past";
    case Separation::timelike_future: return "timelike-future";
    case Separation::timelike_past: return "timelike-past";
    case Separation::spacelike: return "spacelike";
  }
  return "?";
}

/// Classifies e2 relative to e1.
inline Separation separation(const Event& e1, const Event& e2) {
  if (e1 == e2) return Separation::equal;
  int s = interval2(e1, e2).sign();
  int dt = (e2.t - e1.t).sign();
  if (s < 0) return Separation::spacelike;
  // A null displacement with dt == 0 is the zero vector, handled above.
  if (s == 0) return dt > 0 ? Separation::lightlike_future : Separation::lightlike_past;
  return dt > 0 ? Separation::timelike_future : Separation::timelike_past;
}

inline bool is_timelike(Separation s) { return s == Separation::timelike_future || s == Separation::timelike_past; }
inline bool is_lightlike(Separation s) {
  return s == Separation::lightlike_future || s == Separation::lightlike_past;
}

inline Event make_event(const Scalar& t, const Scalar& x, const Scalar& y, const Scalar& z) { return {t, x, y, z}; }

/// Same event, re-expressed in the given backend.
inline Event to_backend(const Event& e, Backend b, double eps = kDefaultEps) {
  return {e.t.to(b, eps), e.x.to(b, eps), e.y.to(b, eps), e.z.to(b, eps)};
}

}  // namespace sigrel
