// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "sigrel/frame.hpp"
#include "sigrel/sigmodel.hpp"

namespace sigrel {

/// Witness trace: the auxiliary particles, signals and events a construction
/// produced, keyed by the labels of the corresponding experiment.
using Trace = nlohmann::json;

inline void note(Trace* tr, const std::string& key, nlohmann::json value) {
  if (tr) (*tr)[key] = std::move(value);
}

// ---------------------------------------------------------------------------
// Backend plumbing

inline Scalar promote(const Scalar& s) { return s.is_exact() ? s.to(Backend::approx) : s; }
inline Vec3 promote(const Vec3& v) { return {promote(v.x), promote(v.y), promote(v.z)}; }
inline Event promote(const Event& e) { return {promote(e.t), promote(e.x), promote(e.y), promote(e.z)}; }
inline Particle promote(const Particle& p) { return Particle::make(promote(p.base()), promote(p.velocity())); }

/// Runs a construction on the given values; if an exact square root is not
/// rational, reruns it on the approximate backend (`f(true)`) and records the
/// promotion in the trace.
template <class F>
auto constructive(Trace* tr, F&& f) -> decltype(f(false)) {
  try {
    return f(false);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonConstructibleExact) throw;
    note(tr, "promoted", true);
    return f(true);
  }
}

template <class T>
T lift(bool p, const T& v) {
  return p ? promote(v) : v;
}

/// `v` in the backend of `ref`.
inline Scalar like(const Scalar& ref, const Scalar& v) {
  return ref.is_exact() ? v : v.to(Backend::approx, ref.eps());
}

// ---------------------------------------------------------------------------
// Light cones and worldlines

/// The event where the future light cone of `p` meets a's worldline.
inline Event future_meet(const Event& p, const Particle& a) {
  Event D = a.direction();
  Event d = a.base() - p;
  Scalar A = mdot(D, D), B = mdot(d, D), C = mdot(d, d);
  Scalar disc = B * B - A * C;
  if (disc.sign() <= 0) return a.at(-B / A);
  return a.at((-B + sqrt(disc)) / A);
}

/// The event where the past light cone of `p` meets a's worldline.
inline Event past_meet(const Event& p, const Particle& a) {
  Event D = a.direction();
  Event d = a.base() - p;
  Scalar A = mdot(D, D), B = mdot(d, D), C = mdot(d, d);
  Scalar disc = B * B - A * C;
  if (disc.sign() <= 0) return a.at(-B / A);
  return a.at((-B - sqrt(disc)) / A);
}

/// The common event of two worldlines, if any.
inline std::optional<Event> meet(const Particle& a, const Particle& b) {
  Vec3 dv = a.velocity() - b.velocity();
  Vec3 db = b.base().space() - a.base().space();
  if (dv.is_zero()) return std::nullopt;
  Scalar t = db.dot(dv) / dv.norm2();
  Event e = a.at(t);
  if (!b.contains(e)) return std::nullopt;
  return e;
}

/// The parameter t at which a.at(t) is simultaneous with `e` for a.
inline Scalar simultaneous_param(const Particle& a, const Event& e) {
  Event D = a.direction();
  return mdot(e - a.base(), D) / mdot(D, D);
}

/// The null direction (1, 1, 0, 0) in the backend of `ref`.
inline Event null_x(const Scalar& ref) {
  Scalar one = like(ref, Scalar(1)), zero = like(ref, Scalar(0));
  return {one, one, zero, zero};
}

/// Radar bounce point for a timelike-future (or zero) displacement e1 -> e3:
/// the event reached by light from e1 that reflects light to e3.
inline Event bounce(const Event& e1, const Event& e3) {
  Event U = e3 - e1;
  if (U.is_zero()) return e1;
  Event N = null_x(e1.t);
  return e1 + (mdot(U, U) / (Scalar(2) * mdot(U, N))) * N;
}

// ---------------------------------------------------------------------------
// Signals, order and motion

/// The signal sent at e1 and received at e2, if light can do that.
inline std::optional<Signal> signal_between(const Event& e1, const Event& e2) {
  Separation s = separation(e1, e2);
  if (s != Separation::equal && s != Separation::lightlike_future) return std::nullopt;
  return Signal(e1, e2);
}

/// Parallel worldlines.
inline bool motionless(const Particle& a, const Particle& b) { return a.velocity() == b.velocity(); }

struct CausalWitness {
  bool holds = false;
  std::optional<Event> mid;
};

/// e1 <= e2: light can go e1 -> e'' -> e2. The intermediate event is
/// returned when it exists.
inline CausalWitness causal_leq(const Event& e1, const Event& e2, Trace* tr = nullptr) {
  Separation s = separation(e1, e2);
  CausalWitness w;
  if (s == Separation::equal) {
    w = {true, e1};
  } else if (s == Separation::lightlike_future) {
    w = {true, e2};
  } else if (s == Separation::timelike_future) {
    w = {true, bounce(e1, e2)};
  }
  if (w.holds) {
    note(tr, "e''", to_json(*w.mid));
    note(tr, "s1", to_json(Signal(e1, *w.mid)));
    note(tr, "s2", to_json(Signal(*w.mid, e2)));
  }
  return w;
}

inline bool causal_leq_oracle(const Event& e1, const Event& e2) {
  Separation s = separation(e1, e2);
  return s == Separation::equal || s == Separation::lightlike_future || s == Separation::timelike_future;
}

inline bool strictly_earlier(const Event& e1, const Event& e2, Trace* tr = nullptr) {
  return !(e1 == e2) && causal_leq(e1, e2, tr).holds;
}

/// Radar simultaneity for a: a co-moving observer at the midpoint of the
/// two locations sends to both events at once and gets both echoes at once.
inline bool simultaneous(const Particle& a, const Event& e1, const Event& e2, Trace* tr = nullptr) {
  return constructive(tr, [&](bool p) {
    Particle A = lift(p, a);
    Event x1 = lift(p, e1), x2 = lift(p, e2);
    Particle mid = A.parallel_through((Scalar(1) / Scalar(2)) * (x1 + x2));
    Event s1 = past_meet(x1, mid), s2 = past_meet(x2, mid);
    Event r1 = future_meet(x1, mid), r2 = future_meet(x2, mid);
    if (tr) {
      (*tr)["a'"] = to_json(mid);
      (*tr)["e1"] = to_json(s1);
      (*tr)["e2"] = to_json(r1);
      (*tr)["sent"] = {to_json(s1), to_json(s2)};
      (*tr)["returned"] = {to_json(r1), to_json(r2)};
    }
    return s1 == s2 && r1 == r2;
  });
}

inline bool simultaneous_oracle(const Particle& a, const Event& e1, const Event& e2) {
  return mdot(e2 - e1, a.direction()).is_zero();
}

inline void require_on(const Particle& a, const Event& e, const char* what) {
  if (!a.contains(e)) throw Error(ErrorKind::NotOnWorldline, std::string(what) + " is not on the experimenter's worldline");
}

/// Time-equidistance on a's worldline: light from e1, e2 bounces off a
/// common location and returns at e3, e4 (pairs interchanged when e3 is
/// earlier than e1).
inline bool ted(const Particle& a, const Event& e1, const Event& e2, const Event& e3, const Event& e4,
                Trace* tr = nullptr) {
  require_on(a, e1, "e1");
  require_on(a, e2, "e2");
  require_on(a, e3, "e3");
  require_on(a, e4, "e4");
  if (e3.t < e1.t) {
    note(tr, "case", "e3 earlier than e1");
    return ted(a, e3, e4, e1, e2, tr);
  }
  return constructive(tr, [&](bool p) {
    Particle A = lift(p, a);
    Event E = bounce(lift(p, e1), lift(p, e3));
    Particle loc = A.parallel_through(E);
    Event E2 = future_meet(lift(p, e2), loc);
    Event back = future_meet(E2, A);
    if (tr) {
      (*tr)["a'"] = to_json(loc);
      (*tr)["e"] = to_json(E);
      (*tr)["e'"] = to_json(E2);
      (*tr)["return"] = to_json(back);
    }
    return back == lift(p, e4);
  });
}

inline bool ted_oracle(const Event& e1, const Event& e2, const Event& e3, const Event& e4) {
  return e2.t - e1.t == e4.t - e3.t;
}

// ---------------------------------------------------------------------------
// The field of quantities on a's worldline

/// The experimenter with its selected zero o and unit u.
struct Calibration {
  Particle a;
  Event o;
  Event u;
};

inline void require_calibration(const Calibration& c) {
  require_on(c.a, c.o, "zero event");
  require_on(c.a, c.u, "unit event");
  if (!(c.o.t < c.u.t)) throw Error(ErrorKind::InvalidFrame, "the zero event must be strictly earlier than the unit");
}

/// An element of the field F(a, o, u): an event on a's worldline.
struct FieldPoint {
  Event carrier;
  Calibration cal;
};

/// The scalar a field point stands for under its calibration.
inline Scalar field_value(const FieldPoint& x) {
  return (x.carrier.t - x.cal.o.t) / (x.cal.u.t - x.cal.o.t);
}

/// The carrier of the scalar v in F(a, o, u).
inline FieldPoint field_point(const Calibration& c, const Scalar& v) { return {c.o + v * (c.u - c.o), c}; }

inline FieldPoint at_event(const Calibration& c, const Event& e) {
  require_on(c.a, e, "carrier");
  return {e, c};
}

/// tau = t1 + t2 :<=> Ted(o, t1, t2, tau).
inline FieldPoint plus(const FieldPoint& t1, const FieldPoint& t2, Trace* tr = nullptr) {
  const Calibration& c = t1.cal;
  require_on(c.a, c.o, "zero event");
  require_on(c.a, t1.carrier, "t1");
  require_on(c.a, t2.carrier, "t2");
  Event tau = constructive(tr, [&](bool p) {
    Particle A = lift(p, c.a);
    Event o = lift(p, c.o), x1 = lift(p, t1.carrier), x2 = lift(p, t2.carrier);
    if (!(x2.t < o.t)) {
      Event E = bounce(o, x2);
      Particle loc = A.parallel_through(E);
      Event E2 = future_meet(x1, loc);
      note(tr, "a'", to_json(loc));
      note(tr, "e'", to_json(E2));
      return future_meet(E2, A);
    }
    Event E = bounce(x2, o);
    Particle loc = A.parallel_through(E);
    Event E2 = past_meet(x1, loc);
    note(tr, "a'", to_json(loc));
    note(tr, "e'", to_json(E2));
    return past_meet(E2, A);
  });
  note(tr, "tau", to_json(tau));
  if (!ted(c.a, c.o, t1.carrier, t2.carrier, tau)) {
    throw Error(ErrorKind::CalibrationFailure, "addition witness does not satisfy time-equidistance");
  }
  return {tau, c};
}

/// The additive inverse: the reflection of x through o, checked with plus.
inline FieldPoint neg(const FieldPoint& x, Trace* tr = nullptr) {
  FieldPoint n{Scalar(2) * x.cal.o - x.carrier, x.cal};
  require_on(x.cal.a, x.carrier, "x");
  if (!(plus(x, n).carrier == x.cal.o)) throw Error(ErrorKind::CalibrationFailure, "negation witness failed");
  note(tr, "neg", to_json(n.carrier));
  return n;
}

inline bool earlier_t(const Event& a, const Event& b) { return a.t < b.t; }

/// t1 * t2 by the two-ball experiment, defined directly when t1 is later than
/// u and t2 later than o. The other cases reduce to it algebraically and are
/// flagged "extended case" in the trace.
inline FieldPoint times(const FieldPoint& t1, const FieldPoint& t2, Trace* tr = nullptr) {
  const Calibration& c = t1.cal;
  require_calibration(c);
  require_on(c.a, t1.carrier, "t1");
  require_on(c.a, t2.carrier, "t2");
  const Event& o = c.o;
  if (t1.carrier == o || t2.carrier == o) {
    note(tr, "case", "zero factor");
    return {o, c};
  }
  if (earlier_t(t2.carrier, o)) {
    note(tr, "case", "extended case: t2 before o");
    return neg(times(t1, neg(t2)));
  }
  if (earlier_t(t1.carrier, o)) {
    note(tr, "case", "extended case: t1 before o");
    return neg(times(neg(t1), t2));
  }
  if (!earlier_t(c.u, t1.carrier)) {
    // (t1 + 1) t2 - t2
    note(tr, "case", "extended case: t1 not later than u");
    FieldPoint shifted = plus(t1, FieldPoint{c.u, c});
    return plus(times(shifted, t2), neg(t2));
  }
  note(tr, "case", "defined case");
  Event tau = constructive(tr, [&](bool p) {
    Particle A = lift(p, c.a);
    Event O = lift(p, o), U = lift(p, c.u), X1 = lift(p, t1.carrier), X2 = lift(p, t2.carrier);
    Event D = A.direction();
    Event N = null_x(O.t);
    Scalar nd = mdot(N, D);
    Event u1 = U - (mdot(U - O, D) / nd) * N;
    Event t2p = X2 - (mdot(X2 - O, D) / nd) * N;
    Particle b1 = A.parallel_through(u1);
    Particle b2 = A.parallel_through(t2p);
    if (!is_timelike(separation(u1, X1))) throw Error(ErrorKind::CalibrationFailure, "ball p would be superluminal");
    Particle pp = Particle::through(u1, X1);
    Particle q = pp.parallel_through(t2p);
    auto hit = meet(q, A);
    if (!hit) throw Error(ErrorKind::CalibrationFailure, "particle q does not reach the experimenter");
    if (!simultaneous_oracle(A, O, u1) || !simultaneous_oracle(A, O, t2p)) {
      throw Error(ErrorKind::CalibrationFailure, "launch events are not simultaneous with o");
    }
    if (tr) {
      (*tr)["b1"] = to_json(b1);
      (*tr)["b2"] = to_json(b2);
      (*tr)["u'"] = to_json(u1);
      (*tr)["t2'"] = to_json(t2p);
      (*tr)["s1"] = to_json(Signal(u1, U));
      (*tr)["s2"] = to_json(Signal(t2p, X2));
      (*tr)["p"] = to_json(pp);
      (*tr)["q"] = to_json(q);
    }
    return *hit;
  });
  note(tr, "tau", to_json(tau));
  return {tau, c};
}

/// x / y: the carrier z with y * z = x, verified by the multiplication
/// experiment.
inline FieldPoint div(const FieldPoint& x, const FieldPoint& y, Trace* tr = nullptr) {
  if (y.carrier == y.cal.o) throw Error(ErrorKind::DivisionByZero, "division by the zero event");
  FieldPoint z = field_point(x.cal, field_value(x) / field_value(y));
  if (!(times(y, z).carrier == x.carrier)) throw Error(ErrorKind::CalibrationFailure, "division witness failed");
  note(tr, "quotient", to_json(z.carrier));
  return z;
}

// ---------------------------------------------------------------------------
// The three-ball motion experiment

/// Decides whether b is motionless w.r.t. a by the three-ball experiment:
/// balls b1, b2, b3 thrown from one event are calibrated so that light sent
/// from a when b1 arrives, reflected by b2, returns exactly when b3 arrives.
/// b then repeats the reflection; the answer is whether its echo and b3
/// arrive together.
inline bool desargues_experiment(const Particle& a, const Particle& b, std::uint64_t seed, Trace* tr = nullptr) {
  if (a == b) throw Error(ErrorKind::DomainError, "the experiment needs two distinct particles");
  return constructive(tr, [&](bool p) {
    Particle A = lift(p, a), B = lift(p, b);
    const Scalar& ref = A.base().t;
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
      Scalar t1 = like(ref, rng.rational(-2, 2, 4));
      Scalar dt = like(ref, rng.rational(1, 16, 2));
      if (rng.coin()) dt = -dt;
      Event A1 = A.at(t1);
      Event A1b = B.at(t1 + dt);
      if (!is_timelike(separation(A1, A1b))) continue;
      Particle b1 = Particle::through(A1, A1b);
      Event first = A1.t < A1b.t ? A1 : A1b;
      Event e = first - like(ref, rng.rational(1, 8, 4)) * b1.direction();
      Scalar lambda = like(ref, rng.rational(1, 3, 4) / Scalar(4));
      Particle b2 = Particle::make(e, A.velocity() + lambda * (b1.velocity() - A.velocity()));
      Event R = future_meet(A1, b2);
      Event A3 = future_meet(R, A);
      if (!is_timelike(separation(e, A3))) continue;
      Particle b3 = Particle::through(e, A3);
      Event R2 = future_meet(A1b, b2);
      Event echo = future_meet(R2, B);
      auto arrival = meet(b3, B);
      if (tr) {
        (*tr)["attempts"] = attempt + 1;
        (*tr)["e"] = to_json(e);
        (*tr)["b1"] = to_json(b1);
        (*tr)["b2"] = to_json(b2);
        (*tr)["b3"] = to_json(b3);
        (*tr)["calibration"] = {to_json(A1), to_json(R), to_json(A3)};
        (*tr)["rerun"] = {to_json(A1b), to_json(R2), to_json(echo)};
        (*tr)["b3_meets_b"] = arrival ? to_json(*arrival) : nlohmann::json(nullptr);
      }
      return arrival.has_value() && *arrival == echo;
    }
    throw Error(ErrorKind::CalibrationFailure, "could not place the three balls");
  });
}

/// The event on a's worldline simultaneous with e, checked by the radar
/// experiment.
inline FieldPoint time_coord(const Calibration& c, const Event& e, Trace* tr = nullptr) {
  Event carrier = c.a.at(simultaneous_param(c.a, e));
  if (!simultaneous(c.a, carrier, e, tr)) {
    throw Error(ErrorKind::CalibrationFailure, "time coordinate witness failed");
  }
  note(tr, "time", to_json(carrier));
  return {carrier, c};
}

}  // namespace sigrel
