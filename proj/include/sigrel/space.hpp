// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "sigrel/signalling.hpp"

namespace sigrel {

/// A place for the fixed experimenter: a particle motionless w.r.t. `anchor`.
struct Location {
  Particle place;
  Particle anchor;

  static Location make(const Particle& anchor, const Particle& place) {
    if (!motionless(anchor, place)) throw Error(ErrorKind::AnchorMismatch, "a location must be motionless w.r.t. its anchor");
    return {place, anchor};
  }
  /// The location through anchor.base() + w, for a rest-space vector w.
  static Location at(const Particle& anchor, const Event& w) { return {anchor.parallel_through(anchor.base() + w), anchor}; }
  static Location origin(const Particle& anchor) { return {anchor, anchor}; }

  /// Position in the anchor's rest space, as a 4-vector orthogonal to it.
  Event position() const { return rest_offset(anchor, anchor.base(), place.base()); }

  friend bool operator==(const Location& l, const Location& m) { return l.place == m.place; }
};

/// Location of the anchor's rest point with rest-frame coordinates (x, y, z)
/// when the anchor is at rest; general anchors use boosted offsets.
inline Location rest_location(const Particle& anchor, const Scalar& x, const Scalar& y, const Scalar& z) {
  Scalar zero = like(anchor.base().t, Scalar(0));
  Event w{zero, like(zero, x), like(zero, y), like(zero, z)};
  return Location::at(anchor, rest_offset(anchor, anchor.base(), anchor.base() + w));
}

inline void require_anchor(std::initializer_list<const Location*> ls) {
  const Location* first = *ls.begin();
  for (const Location* l : ls) {
    if (!(l->anchor == first->anchor)) throw Error(ErrorKind::AnchorMismatch, "locations have different anchors");
  }
}

/// Linear dependence of two rest vectors, tested on the normalized Gram
/// determinant.
inline bool dependent(const Event& p, const Event& q) {
  Scalar pp = sdot(p, p), qq = sdot(q, q);
  if (pp.is_zero() || qq.is_zero()) return true;
  Scalar pq = sdot(p, q);
  return (Scalar(1) - pq * pq / (pp * qq)).is_zero();
}

/// Col: light from one location through a second arrives at the third no
/// later than light sent there directly, for some ordering of the three.
inline bool col(const Location& l1, const Location& l2, const Location& l3, Trace* tr = nullptr) {
  require_anchor({&l1, &l2, &l3});
  return constructive(tr, [&](bool p) {
    std::array<Particle, 3> ls{lift(p, l1.place), lift(p, l2.place), lift(p, l3.place)};
    static constexpr int perms[3][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}};
    for (const auto& pm : perms) {
      const Particle& li = ls[pm[0]];
      const Particle& lj = ls[pm[1]];
      const Particle& lk = ls[pm[2]];
      Event ei = li.base();
      Event ej = future_meet(ei, lj);
      Event ek = future_meet(ej, lk);
      Event direct = future_meet(ei, lk);
      if (ek == direct) {
        if (tr) {
          (*tr)["order"] = {pm[0] + 1, pm[1] + 1, pm[2] + 1};
          (*tr)["s1"] = to_json(Signal(ei, ej));
          (*tr)["s2"] = to_json(Signal(ej, ek));
          (*tr)["s3"] = to_json(Signal(ei, direct));
        }
        return true;
      }
    }
    return false;
  });
}

inline bool col_oracle(const Location& l1, const Location& l2, const Location& l3) {
  return dependent(l2.position() - l1.position(), l3.position() - l1.position());
}

/// Spatial betweenness (l2 between l1 and l3, inclusive).
inline bool bw(const Location& l1, const Location& l2, const Location& l3) {
  require_anchor({&l1, &l2, &l3});
  Event p1 = l1.position(), p2 = l2.position(), p3 = l3.position();
  return col_oracle(l1, l2, l3) && sdot(p1 - p2, p3 - p2).sign() <= 0;
}

/// Spatial equidistance: |l1 l2| = |l3 l4|.
inline bool ed(const Location& l1, const Location& l2, const Location& l3, const Location& l4) {
  require_anchor({&l1, &l2, &l3, &l4});
  Event d1 = l2.position() - l1.position(), d2 = l4.position() - l3.position();
  return sdot(d1, d1) == sdot(d2, d2);
}

inline void require_line(const Location& l1, const Location& l2) {
  if (l1 == l2) throw Error(ErrorKind::DegenerateLine, "a spatial line needs two distinct locations");
}

/// The spatial lines l1 l2 and l3 l4 are parallel: translating l2 by the
/// vector l1 -> l3 lands on the line l3 l4 (checked with Col).
inline bool pa(const Location& l1, const Location& l2, const Location& l3, const Location& l4, Trace* tr = nullptr) {
  require_anchor({&l1, &l2, &l3, &l4});
  require_line(l1, l2);
  require_line(l3, l4);
  Location moved = Location::at(l1.anchor, l2.position() + l3.position() - l1.position());
  note(tr, "translated", to_json(moved.place));
  return col(l3, l4, moved);
}

inline bool pa_oracle(const Location& l1, const Location& l2, const Location& l3, const Location& l4) {
  require_line(l1, l2);
  require_line(l3, l4);
  return dependent(l2.position() - l1.position(), l4.position() - l3.position());
}

/// dd(a, b): the event at which light sent from b at time zero reaches a.
inline FieldPoint dd_from_anchor(const Calibration& c, const Location& b, Trace* tr = nullptr) {
  if (!(b.anchor == c.a)) throw Error(ErrorKind::AnchorMismatch, "location is not anchored at the calibrated experimenter");
  require_on(c.a, c.o, "zero event");
  Event arrival = constructive(tr, [&](bool p) {
    Particle A = lift(p, c.a), B = lift(p, b.place);
    Event o = lift(p, c.o);
    Event DA = A.direction();
    Event launch = B.at(mdot(o - B.base(), DA) / mdot(B.direction(), DA));
    if (tr) (*tr)["e'"] = to_json(launch);
    return future_meet(launch, A);
  });
  note(tr, "e", to_json(arrival));
  return {arrival, c};
}

/// dd(b1, b2) = dd(a, b) for the location b completing the parallelogram
/// b1, b2, b, a.
inline FieldPoint dd(const Calibration& c, const Location& b1, const Location& b2, Trace* tr = nullptr) {
  require_anchor({&b1, &b2});
  Location b = Location::at(c.a, b2.position() - b1.position());
  Location a = Location::origin(c.a);
  if (!(b1 == b2)) {
    if (!pa(b1, b2, a, b) || (!(b1 == a) && !pa(b1, a, b2, b))) {
      throw Error(ErrorKind::CalibrationFailure, "parallel translation witness failed");
    }
  }
  note(tr, "b", to_json(b.place));
  return dd_from_anchor(c, b, tr);
}

/// Euclidean distance of the two locations in units of the calibration.
inline Scalar dd_oracle(const Calibration& c, const Location& b1, const Location& b2) {
  Event d = b2.position() - b1.position();
  Event U = c.u - c.o;
  return sqrt(sdot(d, d) / mdot(U, U));
}

/// Ort(a, b, a, c) with the reflection of b through a as the witness b'.
inline bool ort(const Location& a, const Location& b, const Location& c, Trace* tr = nullptr) {
  require_anchor({&a, &b, &c});
  require_line(a, b);
  require_line(a, c);
  Location b2 = Location::at(a.anchor, Scalar(2) * a.position() - b.position());
  Calibration cal{a.anchor, a.anchor.base(), a.anchor.at(like(a.anchor.base().t, Scalar(1)))};
  note(tr, "b'", to_json(b2.place));
  return col(b2, a, b) && dd(cal, a, b2).carrier == dd(cal, a, b).carrier &&
         dd(cal, c, b2).carrier == dd(cal, c, b).carrier;
}

inline bool ort_oracle(const Location& a, const Location& b, const Location& c) {
  require_line(a, b);
  require_line(a, c);
  Event u = b.position() - a.position(), w = c.position() - a.position();
  Scalar d = sdot(u, w);
  return (d * d / (sdot(u, u) * sdot(w, w))).is_zero();
}

}  // namespace sigrel
