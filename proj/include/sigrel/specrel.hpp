// SPDX-License-Identifier: Apache-2.0
// The reference-frame language model tr(M) built over a signalling model:
// quantities as iso-classes of field points, bodies as photons or observers,
// the world-view relation W, and sampled checkers for the SpecRel axioms and
// the completeness glosses.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "sigrel/coords.hpp"

namespace sigrel {

// ---------------------------------------------------------------------------
// Quantities

/// An element of U/E: a representative field point plus its scalar value
/// under the representative's calibration.
struct Quantity {
  FieldPoint rep;
  Scalar canonical;
};

inline Quantity make_quantity(const Calibration& c, const Scalar& v) { return {field_point(c, v), v}; }

inline Quantity quantity_at(const FieldPoint& x) { return {x, field_value(x)}; }

/// Q(q): the representative lies on its experimenter and the calibration is
/// suitable.
inline bool q_holds(const Quantity& q) {
  try {
    require_calibration(q.rep.cal);
    require_on(q.rep.cal.a, q.rep.carrier, "quantity carrier");
  } catch (const Error&) {
    return false;
  }
  return true;
}

/// rep(q, a, o, u): the carrier of q in F(a, o, u).
inline Event rep(const Quantity& q, const Calibration& c, Trace* tr = nullptr) { return iso(c, q.rep, tr).carrier; }

/// q = q' decided geometrically: iso carries q's representative onto q''s.
inline bool quantity_eq(const Quantity& q1, const Quantity& q2) {
  return rep(q1, q2.rep.cal) == q2.rep.carrier;
}

/// The same equality decided on canonical values.
inline bool quantity_eq_canonical(const Quantity& q1, const Quantity& q2) { return q1.canonical == q2.canonical; }

/// Both arguments pulled into q1's calibration and combined there.
inline Quantity q_plus(const Quantity& q1, const Quantity& q2, Trace* tr = nullptr) {
  const Calibration& c = q1.rep.cal;
  return quantity_at(plus(q1.rep, iso(c, q2.rep), tr));
}

inline Quantity q_times(const Quantity& q1, const Quantity& q2, Trace* tr = nullptr) {
  const Calibration& c = q1.rep.cal;
  return quantity_at(times(q1.rep, iso(c, q2.rep), tr));
}

inline Quantity q_neg(const Quantity& q) { return quantity_at(neg(q.rep)); }

inline Quantity q_inverse(const Quantity& q) {
  return quantity_at(div(field_point(q.rep.cal, like(q.rep.carrier.t, Scalar(1))), q.rep));
}

/// q1 <= q2: q2's carrier in q1's field is not causally before q1's.
inline bool q_leq(const Quantity& q1, const Quantity& q2) {
  return causal_leq(q1.rep.carrier, rep(q2, q1.rep.cal)).holds;
}

// ---------------------------------------------------------------------------
// Bodies

/// A photon (a non-event signal) or an observer (a frame).
class Body {
 public:
  static Body photon(const Signal& s) {
    if (s.is_event()) throw Error(ErrorKind::InvalidSignal, "a photon needs a signal that is not an event");
    return Body(s);
  }
  static Body observer(const Frame& f) {
    if (!frame_validate(f)) throw Error(ErrorKind::InvalidFrame, "observer parameters are not valid");
    return Body(f);
  }

  bool is_photon() const { return std::holds_alternative<Signal>(payload_); }
  bool is_observer() const { return std::holds_alternative<Frame>(payload_); }
  const Signal& signal() const { return std::get<Signal>(payload_); }
  const Frame& frame() const { return std::get<Frame>(payload_); }

 private:
  explicit Body(Signal s) : payload_(std::move(s)) {}
  explicit Body(Frame f) : payload_(std::move(f)) {}
  std::variant<Signal, Frame> payload_;
};

inline nlohmann::json to_json(const Frame& f) {
  return {{"a", to_json(f.a)}, {"o", to_json(f.o)}, {"u", to_json(f.u)},
          {"ax", to_json(f.ax)}, {"ay", to_json(f.ay)}, {"az", to_json(f.az)}};
}

inline nlohmann::json to_json(const Body& b) {
  if (b.is_photon()) return {{"photon", to_json(b.signal())}};
  return {{"observer", to_json(b.frame())}};
}

/// lambda(e1, e2, e3): every pair is joined by a signal in one direction or
/// the other, so the three events lie on one light-like line.
inline bool lightlike_collinear(const Event& e1, const Event& e2, const Event& e3) {
  auto joined = [](const Event& p, const Event& q) { return signal_between(p, q) || signal_between(q, p); };
  return joined(e1, e2) && joined(e1, e3) && joined(e2, e3);
}

/// wl(e, s): e is on the world-line of the photon s.
inline bool wl(const Event& e, const Signal& s) { return lightlike_collinear(e, s.beg(), s.end()); }

/// b = b': same light-like line for photons; for observers, the same
/// coordinate map, decided on the parameters (worldline, zero, unit, and
/// the unit directions of the three axes).
inline bool body_eq(const Body& b1, const Body& b2) {
  if (b1.is_photon() != b2.is_photon()) return false;
  if (b1.is_photon()) return wl(b2.signal().beg(), b1.signal()) && wl(b2.signal().end(), b1.signal());
  const Frame& f = b1.frame();
  const Frame& g = b2.frame();
  if (!(f.a == g.a) || !(f.o == g.o) || !(f.u == g.u)) return false;
  auto bf = rest_basis(f), bg = rest_basis(g);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!dependent(bf[i], bg[i]) || sdot(bf[i], bg[i]).sign() <= 0) return false;
  }
  return true;
}

inline Calibration calibration_of(const Body& m) { return calibration_of(m.frame()); }

/// The event that observer m coordinatizes as (t, x, y, z), located by the
/// closed-form inverse and confirmed with cord.
inline Event w_event(const Body& m, const std::array<Scalar, 4>& c) {
  const Frame& f = m.frame();
  Event e = poincare_from_frame(f, c);
  if (cord_values(f, e) != c) throw Error(ErrorKind::CalibrationFailure, "coordinate witness failed");
  return e;
}

/// W(m, b, t, x, y, z): m is an observer and the event at (m(t), m(x), m(y),
/// m(z)) in m's coordinates is on b's world-line.
inline bool w_holds(const Body& m, const Body& b, const Quantity& t, const Quantity& x, const Quantity& y,
                    const Quantity& z) {
  if (!m.is_observer()) return false;
  Calibration c = calibration_of(m);
  std::array<Scalar, 4> coords;
  std::size_t i = 0;
  for (const Quantity* q : {&t, &x, &y, &z}) coords[i++] = field_value(FieldPoint{rep(*q, c), c});
  Event e = w_event(m, coords);
  if (b.is_photon()) return wl(e, b.signal());
  return b.frame().a.contains(e);
}

/// W with the coordinates given as scalars in m's own calibration.
inline bool w_holds(const Body& m, const Body& b, const std::array<Scalar, 4>& c) {
  if (!m.is_observer()) return false;
  Calibration cal = calibration_of(m);
  return w_holds(m, b, make_quantity(cal, c[0]), make_quantity(cal, c[1]), make_quantity(cal, c[2]),
                 make_quantity(cal, c[3]));
}

// ---------------------------------------------------------------------------
// Instance generators for tr(M)

/// tr(M) over a signalling model. Over M(F)+ the observers are the ones
/// whose unit event is at Minkowski distance 1 from the zero.
struct SpecRelModel {
  SignallingModel base;
  Backend backend() const { return base.backend; }
};

/// Sub-light velocity. On the exact backend the speed is 2k/(1+k^2) along a
/// rational unit vector, so gamma is rational.
inline Vec3 random_velocity(Rng& rng, Backend b) {
  if (b == Backend::approx) return rng.velocity(Backend::approx, 0.6);
  Scalar k = rng.rational(0, 1, 8) / Scalar(2);
  Scalar speed = Scalar(2) * k / (Scalar(1) + k * k);
  return speed * rng.unit_vector(Backend::exact);
}

/// Rational rotation from a random integer quaternion, returned as the
/// images of the three standard axes.
inline std::array<Vec3, 3> random_rotation(Rng& rng, Backend b) {
  long long w = 0, x = 0, y = 0, z = 0;
  while (w == 0 && x == 0 && y == 0 && z == 0) {
    w = rng.uniform_int(-3, 3);
    x = rng.uniform_int(-3, 3);
    y = rng.uniform_int(-3, 3);
    z = rng.uniform_int(-3, 3);
  }
  long long n = w * w + x * x + y * y + z * z;
  auto r = [&](long long v) { return Scalar::ratio(v, n).to(b); };
  Vec3 cx{r(w * w + x * x - y * y - z * z), r(2 * (x * y + w * z)), r(2 * (x * z - w * y))};
  Vec3 cy{r(2 * (x * y - w * z)), r(w * w - x * x + y * y - z * z), r(2 * (y * z + w * x))};
  Vec3 cz{r(2 * (x * z + w * y)), r(2 * (y * z - w * x)), r(w * w - x * x - y * y + z * z)};
  return {cx, cy, cz};
}

inline Body random_observer(Rng& rng, const SpecRelModel& m) {
  Backend b = m.backend();
  Particle a = Particle::make(rng.event(3, b), random_velocity(rng, b));
  Event o = a.at(rng.scalar(-2, 2, b));
  Scalar unit = m.base.tu ? Scalar(1).to(b) : rng.scalar(0.5, 2, b);
  return Body::observer(frame_with_axes(a, o, unit, random_rotation(rng, b)));
}

inline Body random_photon(Rng& rng, const SpecRelModel& m) {
  Backend b = m.backend();
  Event beg = rng.event(3, b);
  Vec3 n = rng.unit_vector(b);
  Scalar len = rng.scalar(0.5, 3, b);
  return Body::photon(Signal(beg, beg + len * Event::from(Scalar(1), n)));
}

inline Body random_body(Rng& rng, const SpecRelModel& m) {
  return rng.coin() ? random_photon(rng, m) : random_observer(rng, m);
}

inline Quantity random_quantity(Rng& rng, const SpecRelModel& m, double range = 3) {
  Calibration c = calibration_of(random_observer(rng, m));
  return make_quantity(c, rng.scalar(-range, range, m.backend()));
}

inline std::array<Scalar, 4> random_coords(Rng& rng, Backend b, double range = 3) {
  return {rng.scalar(-range, range, b), rng.scalar(-range, range, b), rng.scalar(-range, range, b),
          rng.scalar(-range, range, b)};
}

// ---------------------------------------------------------------------------
// Axiom checkers

struct AxiomReport {
  std::string axiom;
  int samples = 0;
  int passes = 0;
  std::vector<nlohmann::json> failures;
  std::uint64_t seed = 0;

  bool ok() const { return samples > 0 && passes == samples; }
};

inline nlohmann::json to_json(const AxiomReport& r) {
  return {{"axiom", r.axiom}, {"samples", r.samples}, {"passes", r.passes}, {"failures", r.failures}, {"seed", r.seed}};
}

/// The listed failure witnesses are capped; the counts are not.
inline constexpr std::size_t kMaxWitnesses = 10;

namespace detail {

using Check = std::function<bool(Rng&, nlohmann::json&)>;

inline AxiomReport sample(const std::string& name, int samples, std::uint64_t seed, const Check& check) {
  AxiomReport r{name, samples, 0, {}, seed};
  for (int i = 0; i < samples; ++i) {
    Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(i));
    nlohmann::json w = nlohmann::json::object();
    bool ok = false;
    try {
      ok = check(rng, w);
    } catch (const Error& e) {
      w["error"] = e.what();
    }
    if (ok) {
      ++r.passes;
    } else if (r.failures.size() < kMaxWitnesses) {
      w["sample"] = i;
      r.failures.push_back(w);
    }
  }
  return r;
}

/// Square root, promoted to the approximate backend when it is irrational.
inline Scalar root(const Scalar& s) {
  try {
    return sqrt(s);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonConstructibleExact) throw;
    return sqrt(promote(s));
  }
}

inline nlohmann::json coords_json(const std::array<Scalar, 4>& c) {
  return {c[0].str(), c[1].str(), c[2].str(), c[3].str()};
}

inline Scalar spatial_distance(const std::array<Scalar, 4>& p, const std::array<Scalar, 4>& q) {
  Scalar dx = p[1] - q[1], dy = p[2] - q[2], dz = p[3] - q[3];
  return root(dx * dx + dy * dy + dz * dz);
}

inline std::array<Scalar, 4> lerp(const std::array<Scalar, 4>& p, const std::array<Scalar, 4>& q, const Scalar& s) {
  std::array<Scalar, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = p[i] + s * (q[i] - p[i]);
  return out;
}

/// Observer with m's worldline and axes but a different clock unit.
inline Frame rescaled(const Frame& f, const Scalar& k) {
  Frame g = f;
  g.u = f.o + k * (f.u - f.o);
  return g;
}

// Photon worldlines are exactly the slope-1 lines of m's coordinates.
inline bool ax_ph(const SpecRelModel& model, Rng& rng, nlohmann::json& w) {
  Backend b = model.backend();
  Body m = random_observer(rng, model);
  Body p = random_photon(rng, model);
  w["observer"] = to_json(m);
  w["photon"] = to_json(p);
  auto c1 = cord_values(m.frame(), p.signal().beg());
  auto c2 = cord_values(m.frame(), p.signal().end());
  if (!(spatial_distance(c1, c2) == abs(c2[0] - c1[0]))) {
    w["reason"] = "photon image is not of slope 1";
    return false;
  }
  Scalar s = rng.scalar(-2, 3, b);
  auto on = lerp(c1, c2, s);
  auto off = on;
  off[1] = off[1] + rng.scalar(0.25, 1, b);
  if (!w_holds(m, p, on) || w_holds(m, p, off)) {
    w["reason"] = "membership of the slope-1 line";
    w["coords"] = coords_json(on);
    return false;
  }
  // Converse: a slope-1 line in m's coordinates is a photon worldline.
  auto c0 = random_coords(rng, b);
  Vec3 n = rng.unit_vector(b);
  Scalar len = rng.scalar(0.5, 2, b);
  std::array<Scalar, 4> c3{c0[0] + len, c0[1] + len * n.x, c0[2] + len * n.y, c0[3] + len * n.z};
  Body q = Body::photon(Signal(poincare_from_frame(m.frame(), c0), poincare_from_frame(m.frame(), c3)));
  auto probe = lerp(c0, c3, rng.scalar(-2, 3, b));
  if (!w_holds(m, q, probe)) {
    w["reason"] = "slope-1 line without a photon";
    w["coords"] = coords_json(probe);
    return false;
  }
  return true;
}

// Two observers see the same events: the coordinates in k of the event m
// sees at c carry exactly the same bodies.
inline bool ax_ev(const SpecRelModel& model, Rng& rng, nlohmann::json& w) {
  Backend b = model.backend();
  Body m = random_observer(rng, model), k = random_observer(rng, model);
  auto c = random_coords(rng, b);
  Event e = w_event(m, c);
  auto ck = cord_values(k.frame(), e);
  w["m"] = to_json(m);
  w["k"] = to_json(k);
  w["coords"] = coords_json(c);
  Vec3 n = rng.unit_vector(b);
  std::vector<Body> bodies{
      Body::photon(Signal(e, e + Event::from(Scalar(1), n))),
      Body::observer(standard_frame(Particle::make(e, random_velocity(rng, b)), e, Scalar(1).to(b))),
      random_photon(rng, model), random_observer(rng, model)};
  for (const Body& body : bodies) {
    if (w_holds(m, body, c) != w_holds(k, body, ck)) {
      w["body"] = to_json(body);
      return false;
    }
  }
  return true;
}

// The owner sits at its spatial origin: W(m, m, t, x, y, z) iff x = y = z = 0,
// with the coordinates given by quantities from unrelated calibrations.
inline bool ax_self(const SpecRelModel& model, Rng& rng, nlohmann::json& w) {
  Backend b = model.backend();
  Body m = random_observer(rng, model);
  Calibration c = calibration_of(m);
  auto foreign = [&](const Scalar& v) {
    Calibration other = calibration_of(random_observer(rng, model));
    return quantity_at(iso(other, field_point(c, v)));
  };
  Scalar t = rng.scalar(-3, 3, b);
  bool at_origin = rng.coin();
  Scalar zero = Scalar(0).to(b);
  Scalar x = at_origin ? zero : rng.scalar(0.25, 2, b);
  Scalar y = at_origin ? zero : rng.scalar(-2, 2, b);
  w["observer"] = to_json(m);
  w["coords"] = coords_json({t, x, y, zero});
  return w_holds(m, m, foreign(t), foreign(x), foreign(y), foreign(zero)) == at_origin;
}

// The quantities form a Euclidean ordered field.
inline bool ax_fd(const SpecRelModel& model, Rng& rng, nlohmann::json& w) {
  Backend b = model.backend();
  Quantity p = random_quantity(rng, model), q = random_quantity(rng, model), r = random_quantity(rng, model);
  Quantity zero = random_quantity(rng, model, 0);
  Calibration oc = calibration_of(random_observer(rng, model));
  Quantity one = make_quantity(oc, Scalar(1).to(b));
  w["values"] = {p.canonical.str(), q.canonical.str(), r.canonical.str()};
  auto fail = [&](const char* law) {
    w["law"] = law;
    return false;
  };
  if (!quantity_eq(q_plus(p, q), q_plus(q, p))) return fail("commutative addition");
  if (!quantity_eq(q_times(p, q), q_times(q, p))) return fail("commutative multiplication");
  if (!quantity_eq(q_plus(q_plus(p, q), r), q_plus(p, q_plus(q, r)))) return fail("associative addition");
  if (!quantity_eq(q_times(q_times(p, q), r), q_times(p, q_times(q, r)))) return fail("associative multiplication");
  if (!quantity_eq(q_times(p, q_plus(q, r)), q_plus(q_times(p, q), q_times(p, r)))) return fail("distributivity");
  if (!quantity_eq(q_plus(p, zero), p)) return fail("additive identity");
  if (!quantity_eq(q_times(p, one), p)) return fail("multiplicative identity");
  if (!quantity_eq(q_plus(p, q_neg(p)), zero)) return fail("additive inverse");
  if (!p.canonical.is_zero() && !quantity_eq(q_times(p, q_inverse(p)), one)) return fail("multiplicative inverse");
  if (!q_leq(p, q) && !q_leq(q, p)) return fail("total order");
  if (q_leq(p, q) && !q_leq(q_plus(p, r), q_plus(q, r))) return fail("order and addition");
  if (q_leq(zero, p) && q_leq(zero, q) && !q_leq(zero, q_times(p, q))) return fail("order and multiplication");
  Quantity pos = q_leq(zero, p) ? p : q_neg(p);
  Quantity r2 = make_quantity(calibration_of(random_observer(rng, model)), root(pos.canonical));
  if (!q_leq(zero, r2) || !quantity_eq(q_times(r2, r2), pos)) return fail("square roots");
  return true;
}

// Observers with equal units agree on the spatial distance of events that
// are simultaneous for both.
inline bool ax_sym(const SpecRelModel& model, Rng& rng, nlohmann::json& w) {
  Backend b = model.backend();
  Body m = random_observer(rng, model), k = random_observer(rng, model);
  Event e1 = rng.event(3, b);
  Event dir = orthogonal_to(m.frame().a.direction(), k.frame().a.direction());
  Event e2 = e1 + rng.scalar(0.5, 2, b) * dir;
  auto m1 = cord_values(m.frame(), e1), m2 = cord_values(m.frame(), e2);
  auto k1 = cord_values(k.frame(), e1), k2 = cord_values(k.frame(), e2);
  if (!(m1[0] == m2[0]) || !(k1[0] == k2[0])) throw Error(ErrorKind::CalibrationFailure, "pair is not simultaneous");
  Scalar dm = spatial_distance(m1, m2), dk = spatial_distance(k1, k2);
  w["m"] = to_json(m);
  w["k"] = to_json(k);
  w["e1"] = to_json(e1);
  w["e2"] = to_json(e2);
  w["distance_m"] = dm.str();
  w["distance_k"] = dk.str();
  return dm == dk;
}

// From each point, in each direction, with each sub-light speed, there is an
// observer.
inline bool ax_th_ex(const SpecRelModel& model, Rng& rng, nlohmann::json& w) {
  Backend b = model.backend();
  Body m = random_observer(rng, model);
  auto c = random_coords(rng, b);
  Vec3 v = random_velocity(rng, b);
  std::array<Scalar, 4> c2{c[0] + Scalar(1), c[1] + v.x, c[2] + v.y, c[3] + v.z};
  Event e = poincare_from_frame(m.frame(), c), e2 = poincare_from_frame(m.frame(), c2);
  Body k = Body::observer(standard_frame(Particle::through(e, e2), e, Scalar(1).to(b)));
  w["observer"] = to_json(m);
  w["coords"] = coords_json(c);
  w["velocity"] = to_json(v);
  return w_holds(m, k, c) && w_holds(m, k, c2);
}

// Each observer can re-coordinatize with a spatial isometry: rotating the
// axes keeps times and spatial distances.
inline bool ax_coord(const SpecRelModel& model, Rng& rng, nlohmann::json& w) {
  Backend b = model.backend();
  Body m = random_observer(rng, model);
  const Frame& f = m.frame();
  Scalar unit = root(mdot(f.u - f.o, f.u - f.o));
  Body k = Body::observer(frame_with_axes(f.a, f.o, unit, random_rotation(rng, b)));
  Event e1 = rng.event(3, b), e2 = rng.event(3, b);
  auto m1 = cord_values(f, e1), m2 = cord_values(f, e2);
  auto k1 = cord_values(k.frame(), e1), k2 = cord_values(k.frame(), e2);
  std::array<Scalar, 4> zero{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  w["observer"] = to_json(m);
  w["rotated"] = to_json(k);
  return m1[0] == k1[0] && m2[0] == k2[0] && spatial_distance(m1, zero) == spatial_distance(k1, zero) &&
         spatial_distance(m1, m2) == spatial_distance(k1, k2);
}

// Each observer can set its clock unit arbitrarily: the coordinates scale by
// the inverse factor.
inline bool ax_clock(const SpecRelModel& model, Rng& rng, nlohmann::json& w) {
  Backend b = model.backend();
  Body m = random_observer(rng, model);
  Scalar k = rng.scalar(0.25, 4, b);
  Body n = Body::observer(rescaled(m.frame(), k));
  Event e = rng.event(3, b);
  auto cm = cord_values(m.frame(), e), cn = cord_values(n.frame(), e);
  w["observer"] = to_json(m);
  w["factor"] = k.str();
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(cn[i] * k == cm[i])) return false;
  }
  return true;
}

// Observers with the same coordinate map are equal; a different unit gives a
// different observer.
inline bool ax_ext_ob(const SpecRelModel& model, Rng& rng, nlohmann::json& w) {
  Backend b = model.backend();
  Body m = random_observer(rng, model);
  Frame g = m.frame();
  Scalar s = rng.scalar(0.5, 3, b);
  g.ax = g.a.parallel_through(g.o + s * (g.ax.base() - g.a.base()));
  Body same = Body::observer(g);
  Body other = Body::observer(rescaled(m.frame(), Scalar(2)));
  Event e = rng.event(3, b);
  w["observer"] = to_json(m);
  return cord_values(m.frame(), e) == cord_values(same.frame(), e) && body_eq(m, same) && !body_eq(m, other);
}

// At most one photon through two distinct events: photons sharing a
// light-like line are equal and are seen identically.
inline bool ax_ext_ph(const SpecRelModel& model, Rng& rng, nlohmann::json& w) {
  Backend b = model.backend();
  Body p = random_photon(rng, model);
  Event d = p.signal().end() - p.signal().beg();
  Scalar s1 = rng.scalar(-2, 1, b);
  Scalar s2 = s1 + rng.scalar(0.5, 2, b);
  Body q = Body::photon(Signal(p.signal().beg() + s1 * d, p.signal().beg() + s2 * d));
  Body m = random_observer(rng, model);
  auto c1 = cord_values(m.frame(), p.signal().beg()), c2 = cord_values(m.frame(), p.signal().end());
  auto probe = lerp(c1, c2, rng.scalar(-2, 3, b));
  w["photon"] = to_json(p);
  w["other"] = to_json(q);
  return body_eq(p, q) && body_eq(q, p) && w_holds(m, p, probe) == w_holds(m, q, probe);
}

// Every body is a photon or an observer, never both; events and invalid
// parameter tuples are neither.
inline bool ax_nobody(const SpecRelModel& model, Rng& rng, nlohmann::json& w) {
  Body x = random_body(rng, model);
  w["body"] = to_json(x);
  if (x.is_photon() == x.is_observer()) return false;
  Event e = rng.event(3, model.backend());
  Particle a = Particle::make(e, random_velocity(rng, model.backend()));
  auto rejects = [](const std::function<void()>& make) {
    try {
      make();
    } catch (const Error&) {
      return true;
    }
    return false;
  };
  return rejects([&] { Body::photon(Signal::event(e)); }) &&
         rejects([&] { Body::observer(Frame{a, e, e, a, a, a}); });
}

// Each observer's time coordinate increases toward the future of its
// worldline.
inline bool ax_up(const SpecRelModel& model, Rng& rng, nlohmann::json& w) {
  Backend b = model.backend();
  Body m = random_observer(rng, model);
  Scalar t1 = rng.scalar(-3, 3, b);
  Scalar t2 = t1 + rng.scalar(0.25, 2, b);
  const Particle& a = m.frame().a;
  w["observer"] = to_json(m);
  return cord_values(m.frame(), a.at(t1))[0] < cord_values(m.frame(), a.at(t2))[0];
}

}  // namespace detail

inline const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names{"AxPh",    "AxEv",    "AxSelf",  "AxFd",     "AxSym", "AxThEx",
                                              "AxCoord", "AxClock", "AxExtOb", "AxExtPh", "AxNobody", "AxUp"};
  return names;
}

/// Sampled semantic check of one axiom over tr(M).
inline AxiomReport check_axiom(const SpecRelModel& model, const std::string& axiom, int samples, std::uint64_t seed) {
  using Fn = bool (*)(const SpecRelModel&, Rng&, nlohmann::json&);
  static const std::vector<std::pair<std::string, Fn>> table{
      {"AxPh", detail::ax_ph},         {"AxEv", detail::ax_ev},         {"AxSelf", detail::ax_self},
      {"AxFd", detail::ax_fd},         {"AxSym", detail::ax_sym},       {"AxThEx", detail::ax_th_ex},
      {"AxCoord", detail::ax_coord},   {"AxClock", detail::ax_clock},   {"AxExtOb", detail::ax_ext_ob},
      {"AxExtPh", detail::ax_ext_ph},  {"AxNobody", detail::ax_nobody}, {"AxUp", detail::ax_up}};
  auto it = std::find_if(table.begin(), table.end(), [&](const auto& entry) { return entry.first == axiom; });
  if (it == table.end()) throw Error(ErrorKind::UnknownAxiom, "no checker for axiom '" + axiom + "'");
  Fn fn = it->second;
  return detail::sample(axiom, samples, seed, [&](Rng& rng, nlohmann::json& w) { return fn(model, rng, w); });
}

/// Each observer's worldline, seen in another observer's coordinates, is a
/// straight line of slope below 1.
inline AxiomReport observer_worldline_check(const SpecRelModel& model, int samples, std::uint64_t seed) {
  return detail::sample("ObserverWorldline", samples, seed, [&](Rng& rng, nlohmann::json& w) {
    Backend b = model.backend();
    Body m = random_observer(rng, model), k = random_observer(rng, model);
    const Particle& a = k.frame().a;
    Scalar t1 = rng.scalar(-3, 3, b);
    Scalar t2 = t1 + rng.scalar(0.5, 2, b);
    Scalar t3 = t2 + rng.scalar(0.5, 2, b);
    auto c1 = cord_values(m.frame(), a.at(t1));
    auto c2 = cord_values(m.frame(), a.at(t2));
    auto c3 = cord_values(m.frame(), a.at(t3));
    w["m"] = to_json(m);
    w["k"] = to_json(k);
    Scalar dt = c2[0] - c1[0];
    if (dt.sign() <= 0) return false;
    // Collinear: c3 - c1 is a multiple of c2 - c1.
    Scalar s = (c3[0] - c1[0]) / dt;
    for (std::size_t i = 1; i < 4; ++i) {
      if (!(c3[i] - c1[i] == s * (c2[i] - c1[i]))) return false;
    }
    return detail::spatial_distance(c1, c2) < dt;
  });
}

}  // namespace sigrel
