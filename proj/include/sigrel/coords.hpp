// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "sigrel/space.hpp"

namespace sigrel {

inline Calibration calibration_of(const Frame& f) { return {f.a, f.o, f.u}; }

/// The coordinates of e in the frame, as field points: the time coordinate,
/// then the distances from the origin of the projections of e's location on
/// the three axes. Projections are along lines parallel to the other axes;
/// a coordinate is negative when its projection lies on the far side of the
/// origin from the axis location.
inline std::array<FieldPoint, 4> cord(const Frame& f, const Event& e, Trace* tr = nullptr) {
  if (!frame_validate(f)) throw Error(ErrorKind::InvalidFrame, "frame parameters are not valid");
  Calibration c = calibration_of(f);
  FieldPoint t = time_coord(c, e);
  const Particle& a = f.a;
  Location origin = Location::origin(a);
  Location ax{f.ax, a}, ay{f.ay, a}, az{f.az, a};
  Location b = Location::make(a, a.parallel_through(e));

  auto basis = rest_basis(f);
  Event r = b.position();
  std::array<Scalar, 3> k;
  for (std::size_t i = 0; i < 3; ++i) k[i] = sdot(r, basis[i]) / sdot(basis[i], basis[i]);
  Location px = Location::at(a, k[0] * basis[0]);
  Location py = Location::at(a, k[1] * basis[1]);
  Location pz = Location::at(a, r - k[2] * basis[2]);

  auto parallel_or_same = [](const Location& l1, const Location& l2, const Location& l3, const Location& l4) {
    return l1 == l2 || pa(l1, l2, l3, l4);
  };
  if (!parallel_or_same(b, pz, origin, az) || !parallel_or_same(pz, px, origin, ay) ||
      !parallel_or_same(pz, py, origin, ax) || !col(origin, px, ax) || !col(origin, py, ay)) {
    throw Error(ErrorKind::CalibrationFailure, "projection witness failed");
  }

  auto signed_distance = [&](const Location& from, const Location& to, const Location& axis) {
    FieldPoint d = dd(c, from, to);
    Location image = Location::at(a, to.position() - from.position());
    bool negative = !(image == origin) && bw(image, origin, axis);
    return negative ? neg(d) : d;
  };
  FieldPoint gx = signed_distance(origin, px, ax);
  FieldPoint gy = signed_distance(origin, py, ay);
  FieldPoint gz = signed_distance(pz, b, az);
  if (tr) {
    (*tr)["b"] = to_json(b.place);
    (*tr)["px"] = to_json(px.place);
    (*tr)["py"] = to_json(py.place);
    (*tr)["pz"] = to_json(pz.place);
    (*tr)["carriers"] = {to_json(t.carrier), to_json(gx.carrier), to_json(gy.carrier), to_json(gz.carrier)};
  }
  return {t, gx, gy, gz};
}

/// Scalar rendering of cord.
inline std::array<Scalar, 4> cord_values(const Frame& f, const Event& e, Trace* tr = nullptr) {
  auto c = cord(f, e, tr);
  return {field_value(c[0]), field_value(c[1]), field_value(c[2]), field_value(c[3])};
}

/// A rest-space vector of `a` also orthogonal to v (Minkowski sense).
inline Event orthogonal_to(const Event& D, const Event& v) {
  Scalar one = like(D.t, Scalar(1)), zero = like(D.t, Scalar(0));
  Event vp = v - (mdot(v, D) / mdot(D, D)) * D;
  bool use_v = !(sdot(vp, vp).is_zero());
  for (int i = 1; i <= 3; ++i) {
    Event w{zero, i == 1 ? one : zero, i == 2 ? one : zero, i == 3 ? one : zero};
    w = w - (mdot(w, D) / mdot(D, D)) * D;
    if (use_v) w = w - (mdot(w, vp) / mdot(vp, vp)) * vp;
    if (!sdot(w, w).is_zero()) return w;
  }
  throw Error(ErrorKind::DomainError, "no orthogonal direction");
}

/// Relativistic distance mu_{a,o}(e1, e2): the event on a's worldline whose
/// proper time from o is the signed Minkowski distance of e1, e2. The pair is
/// first translated to start at o; then an event e' simultaneous with o for
/// both a and the observer through o, e sends light to e and to the result.
inline Event mu(const Particle& a, const Event& o, const Event& e1, const Event& e2, Trace* tr = nullptr) {
  require_on(a, o, "o");
  Separation s = separation(e1, e2);
  if (s == Separation::equal) return o;
  if (!is_timelike(s)) throw Error(ErrorKind::NotTimelike, "relativistic distance needs time-like separated events");
  if (s == Separation::timelike_past) {
    note(tr, "case", "reversed pair");
    return Scalar(2) * o - mu(a, o, e2, e1, tr);
  }
  return constructive(tr, [&](bool p) {
    Particle A = lift(p, a);
    Event O = lift(p, o);
    Event V = lift(p, e2) - lift(p, e1);
    Event e = O + V;
    Event w = orthogonal_to(A.direction(), V);
    Event W = sqrt(mdot(V, V) / sdot(w, w)) * w;
    if ((V - W).t.sign() <= 0) W = -W;
    Event ep = O + W;
    Event xi = future_meet(ep, A);
    if (tr) {
      (*tr)["e"] = to_json(e);
      (*tr)["e'"] = to_json(ep);
      (*tr)["xi"] = to_json(xi);
    }
    Particle obs = Particle::through(O, e);
    if (!simultaneous_oracle(A, O, ep) || !simultaneous_oracle(obs, O, ep) || !signal_between(ep, e) ||
        !signal_between(ep, xi)) {
      throw Error(ErrorKind::CalibrationFailure, "relativistic distance witness failed");
    }
    return xi;
  });
}

/// Checks xi against the closed form: (xi - o)^2 equals the interval of the
/// pair, with the sign given by their temporal order.
inline bool mu_oracle(const Event& o, const Event& e1, const Event& e2, const Event& xi) {
  Event d = xi - o;
  Scalar i2 = interval2(e1, e2);
  int sign = (e2.t - e1.t).sign();
  return mdot(d, d) == i2 && (d.t.sign() == sign || (i2.is_zero() && d.is_zero()));
}

/// Minkowski equidistance of the pairs (e1, e2), (e3, e4), measured with the
/// given experimenter and zero.
inline bool med(const Event& e1, const Event& e2, const Event& e3, const Event& e4, const Particle& a,
                const Event& o, Trace* tr = nullptr) {
  Trace t1, t2;
  Event x = mu(a, o, e1, e2, tr ? &t1 : nullptr);
  Event y = mu(a, o, e3, e4, tr ? &t2 : nullptr);
  if (tr) {
    (*tr)["mu12"] = t1;
    (*tr)["mu34"] = t2;
  }
  return x == y;
}

inline bool med(const Event& e1, const Event& e2, const Event& e3, const Event& e4, Trace* tr = nullptr) {
  Particle a = Particle::time_axis(e1.t.backend());
  return med(e1, e2, e3, e4, a, a.base(), tr);
}

inline bool med_oracle(const Event& e1, const Event& e2, const Event& e3, const Event& e4) {
  return interval2(e1, e2) == interval2(e3, e4) && (e2.t - e1.t).sign() == (e4.t - e3.t).sign();
}

/// The field isomorphism F(a, o, u) -> F(a', o', u'): measure o -> x and
/// o -> u on a' from o', then divide in the target field.
inline FieldPoint iso(const Calibration& to, const FieldPoint& x, Trace* tr = nullptr) {
  const Calibration& from = x.cal;
  require_calibration(from);
  require_calibration(to);
  require_on(from.a, x.carrier, "x");
  Event xi = mu(to.a, to.o, from.o, x.carrier);
  Event iota = mu(to.a, to.o, from.o, from.u);
  note(tr, "xi''", to_json(xi));
  note(tr, "iota''", to_json(iota));
  return div(FieldPoint{xi, to}, FieldPoint{iota, to});
}

}  // namespace sigrel
