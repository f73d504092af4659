// SPDX-License-Identifier: Apache-2.0
// Semantic side of the interpretations: Tr read over M(F), the round trip
// between particles/signals and observers/photons, the dilation witness
// separating SigTh+ from SigTh, the AxSym bridge, and a finite fixture on
// which translated SpecRel0 axioms are evaluated.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigrel/interp/specs.hpp"
#include "sigrel/specrel.hpp"

namespace sigrel::interp {

/// Named checks run together.
struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<AxiomReport> parts;

  bool ok() const {
    for (const auto& p : parts)
      if (!p.ok()) return false;
    return !parts.empty();
  }
};

inline nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : r.parts) parts.push_back(sigrel::to_json(p));
  return {{"suite", r.name}, {"seed", r.seed}, {"ok", r.ok()}, {"checks", parts}};
}

// ---------------------------------------------------------------------------
// Tr over M(F)

/// A signal of Tr: the photon carrying it and the observers meeting it at
/// the beginning and at the end.
struct SignalRep {
  Body b;
  Body p;
  Body e;
};

/// The event where an observer's worldline crosses a photon's light-like
/// line, if they cross.
inline std::optional<Event> crossing(const Body& obs, const Body& photon) {
  const Particle& a = obs.frame().a;
  const Signal& s = photon.signal();
  Event d = s.end() - s.beg();
  // a.base + t (1, v) = beg + k d, eliminating t = beg.t + k d.t.
  Vec3 w = d.space() - d.t * a.velocity();
  Vec3 rhs = a.base().space() + s.beg().t * a.velocity() - s.beg().space();
  Scalar k;
  if (!w.x.is_zero()) {
    k = rhs.x / w.x;
  } else if (!w.y.is_zero()) {
    k = rhs.y / w.y;
  } else {
    k = rhs.z / w.z;
  }
  Event e = s.beg() + k * d;
  if (!a.contains(e)) return std::nullopt;
  return e;
}

/// Whether a body's worldline contains the event.
inline bool on_worldline(const Body& b, const Event& e) {
  return b.is_photon() ? wl(e, b.signal()) : b.frame().a.contains(e);
}

/// meet(a, p, e): the three worldlines share an event. Each triple used by
/// Tr has an observer and a photon among its first two places.
inline bool meet3(const Body& a, const Body& p, const Body& e) {
  std::optional<Event> x;
  if (a.is_observer() && p.is_photon()) {
    x = crossing(a, p);
  } else if (a.is_photon() && p.is_observer()) {
    x = crossing(p, a);
  } else if (a.is_observer() && e.is_photon()) {
    x = crossing(a, e);
    return x && on_worldline(p, *x);
  } else {
    return false;
  }
  return x && on_worldline(e, *x);
}

/// The particle Tr assigns to an observer: its worldline.
inline Particle Tr_particle(const Body& obs) { return obs.frame().a; }

/// a = a' of Tr: the same worldline.
inline bool Tr_particle_eq(const Body& a, const Body& a2) { return Tr_particle(a) == Tr_particle(a2); }

/// Sig(s) of Tr: a photon met first by the begin observer, then by the end
/// observer, as timed by the begin observer.
inline bool Tr_signal_domain(const SignalRep& s) {
  if (!s.p.is_photon() || !s.b.is_observer() || !s.e.is_observer()) return false;
  std::optional<Event> x = crossing(s.b, s.p), y = crossing(s.e, s.p);
  if (!x || !y) return false;
  return poincare_to_frame(s.b.frame(), *x)[0] <= poincare_to_frame(s.b.frame(), *y)[0];
}

/// The signal of M(F) a representative stands for.
inline Signal Tr_signal(const SignalRep& s) { return Signal(*crossing(s.b, s.p), *crossing(s.e, s.p)); }

inline bool Tr_T(const Body& a, const SignalRep& s) { return meet3(a, s.b, s.p); }
inline bool Tr_R(const Body& a, const SignalRep& s) { return meet3(a, s.e, s.p); }

/// s = s' of Tr: same endpoints, and the same photon unless the signal has
/// length zero.
inline bool Tr_signal_eq(const SignalRep& s, const SignalRep& s2) {
  return meet3(s.b, s2.b, s.p) && meet3(s.e, s2.e, s.p) && (meet3(s.b, s.p, s.e) || body_eq(s.p, s2.p));
}

/// The observer at rest in the standard frame through e, with o = e.
inline Body rest_observer_at(const Event& e, const Scalar& unit) {
  Scalar z = like(e.t, Scalar(0));
  return Body::observer(standard_frame(Particle::make(e, {z, z, z}), e, like(e.t, unit)));
}

/// A representative of a signal of M(F): its own photon, or one along x for
/// a zero-length signal, bracketed by rest observers through its endpoints.
inline SignalRep Tr_representative(const Signal& s) {
  Body p = s.is_event() ? Body::photon(Signal(s.beg(), s.beg() + Event{like(s.beg().t, Scalar(1)), like(s.beg().t, Scalar(1)),
                                                                       like(s.beg().t, Scalar(0)), like(s.beg().t, Scalar(0))}))
                        : Body::photon(s);
  return {rest_observer_at(s.beg(), Scalar(1)), p, rest_observer_at(s.end(), Scalar(1))};
}

// ---------------------------------------------------------------------------
// Round trip

namespace detail {

inline Particle random_particle(Rng& rng, Backend b) { return Particle::make(rng.event(3, b), random_velocity(rng, b)); }

inline Body observer_on(Rng& rng, const Particle& a, const SpecRelModel& m) {
  Backend b = m.backend();
  Scalar unit = m.base.tu ? Scalar(1).to(b) : rng.scalar(0.5, 2, b);
  return Body::observer(frame_with_axes(a, a.at(rng.scalar(-2, 2, b)), unit, random_rotation(rng, b)));
}

inline Signal random_signal(Rng& rng, Backend b, bool allow_event = true) {
  Event beg = rng.event(3, b);
  if (allow_event && rng.uniform_int(0, 3) == 0) return Signal(beg, beg);
  Scalar len = rng.scalar(0.5, 3, b);
  return Signal(beg, beg + len * Event::from(like(beg.t, Scalar(1)), rng.unit_vector(b)));
}

}  // namespace detail

/// Particle -> observer -> particle, signal -> (photon, observers) ->
/// signal, and the symmetric composites on the SpecRel side, each confirmed
/// on worldlines and endpoints.
inline SuiteReport roundtrip_check(const SignallingModel& base, int samples, std::uint64_t seed) {
  SpecRelModel m{base};
  Backend b = m.backend();
  SuiteReport r{"roundtrip", seed, {}};

  r.parts.push_back(sigrel::detail::sample("particle", samples, seed, [&](Rng& rng, nlohmann::json& w) {
    Particle p = detail::random_particle(rng, b);
    Body o1 = detail::observer_on(rng, p, m), o2 = detail::observer_on(rng, p, m);
    w["particle"] = to_json(p);
    if (!(Tr_particle(o1) == p) || !Tr_particle_eq(o1, o2)) return false;
    // The defining formula of particle equality, at sample coordinates.
    Scalar t = rng.scalar(-3, 3, b), x = rng.scalar(0.5, 3, b), zero = like(t, Scalar(0));
    return w_holds(o1, o2, {t, zero, zero, zero}) && !w_holds(o1, o2, {t, x, zero, zero});
  }));

  r.parts.push_back(sigrel::detail::sample("signal", samples, seed + 1, [&](Rng& rng, nlohmann::json& w) {
    Signal s = detail::random_signal(rng, b);
    w["signal"] = to_json(s);
    SignalRep rep = Tr_representative(s);
    if (!Tr_signal_domain(rep)) return false;
    Signal back = Tr_signal(rep);
    if (!(back.beg() == s.beg()) || !(back.end() == s.end())) return false;
    // T and R survive, for a random particle and for one through each endpoint.
    for (const Particle& a : {detail::random_particle(rng, b), Particle::make(s.beg(), random_velocity(rng, b)),
                              Particle::make(s.end(), random_velocity(rng, b))}) {
      Body obs = detail::observer_on(rng, a, m);
      if (transmits(a, s) != Tr_T(obs, rep) || receives(a, s) != Tr_R(obs, rep)) return false;
    }
    return true;
  }));

  r.parts.push_back(sigrel::detail::sample("observer", samples, seed + 2, [&](Rng& rng, nlohmann::json& w) {
    Body obs = random_observer(rng, m);
    Body again = detail::observer_on(rng, Tr_particle(obs), m);
    Body viewer = random_observer(rng, m);
    w["observer"] = to_json(obs);
    Event on = Tr_particle(obs).at(rng.scalar(-3, 3, b));
    Event off = on + Event{like(on.t, Scalar(0)), rng.scalar(0.5, 2, b), like(on.t, Scalar(0)), like(on.t, Scalar(0))};
    auto c_on = cord_values(viewer.frame(), on), c_off = cord_values(viewer.frame(), off);
    return w_holds(viewer, obs, c_on) && w_holds(viewer, again, c_on) && !w_holds(viewer, obs, c_off) &&
           !w_holds(viewer, again, c_off);
  }));

  r.parts.push_back(sigrel::detail::sample("photon", samples, seed + 3, [&](Rng& rng, nlohmann::json& w) {
    Body ph = random_photon(rng, m);
    w["photon"] = to_json(ph);
    const Signal& s = ph.signal();
    Event d = s.end() - s.beg();
    Scalar k1 = rng.scalar(-2, 0, b), k2 = rng.scalar(0.5, 2, b);
    SignalRep rep{rest_observer_at(s.beg() + k1 * d, Scalar(1)), ph, rest_observer_at(s.beg() + k2 * d, Scalar(1))};
    if (!Tr_signal_domain(rep)) return false;
    return body_eq(ph, Body::photon(Tr_signal(rep)));
  }));
  return r;
}

// ---------------------------------------------------------------------------
// SigTh+ against SigTh

/// The dilation e -> 2e keeps transmission and reception but breaks Tu,
/// while unit-calibrated Poincare maps keep Tu.
inline SuiteReport tu_separation(std::uint64_t seed, int samples, Backend b = Backend::exact) {
  SignallingModel plus{b, kDefaultEps, true};
  SpecRelModel unit{plus};
  Scalar two = Scalar(2).to(b);
  SuiteReport r{"tu-separation", seed, {}};

  r.parts.push_back(sigrel::detail::sample("unit pair", 1, seed, [&](Rng&, nlohmann::json& w) {
    Scalar z = Scalar(0).to(b), one = Scalar(1).to(b);
    Event e1{z, z, z, z}, e2{one, z, z, z};
    bool before = tu_holds(plus, e1, e2), after = tu_holds(plus, dilate(e1, two), dilate(e2, two));
    w["before"] = before;
    w["after"] = after;
    return before && !after;
  }));

  r.parts.push_back(sigrel::detail::sample("dilation keeps T and R", samples, seed + 1, [&](Rng& rng, nlohmann::json& w) {
    Signal s = detail::random_signal(rng, b);
    w["signal"] = to_json(s);
    for (const Particle& a : {detail::random_particle(rng, b), Particle::make(s.beg(), random_velocity(rng, b)),
                              Particle::make(s.end(), random_velocity(rng, b))}) {
      if (transmits(a, s) != transmits(dilate(a, two), dilate(s, two))) return false;
      if (receives(a, s) != receives(dilate(a, two), dilate(s, two))) return false;
    }
    return true;
  }));

  r.parts.push_back(sigrel::detail::sample("dilation breaks Tu", samples, seed + 2, [&](Rng& rng, nlohmann::json& w) {
    Particle a = detail::random_particle(rng, b);
    Event e1 = a.at(rng.scalar(-2, 2, b));
    Scalar gamma = Scalar(1) / sigrel::detail::root(Scalar(1) - a.velocity().norm2());
    Event e2 = e1 + gamma * a.direction();
    w["e1"] = to_json(e1);
    w["e2"] = to_json(e2);
    return tu_holds(plus, e1, e2) && !tu_holds(plus, dilate(e1, two), dilate(e2, two));
  }));

  r.parts.push_back(sigrel::detail::sample("Poincare keeps Tu", samples, seed + 3, [&](Rng& rng, nlohmann::json& w) {
    Frame f = random_observer(rng, unit).frame();
    auto map = [&](const Event& e) {
      auto c = poincare_to_frame(f, e);
      return Event{c[0], c[1], c[2], c[3]};
    };
    Particle a = detail::random_particle(rng, b);
    Event e1 = a.at(rng.scalar(-2, 2, b));
    Scalar gamma = Scalar(1) / sigrel::detail::root(Scalar(1) - a.velocity().norm2());
    Event e2 = e1 + gamma * a.direction();
    Event e3 = rng.event(3, b);
    w["frame"] = to_json(f);
    if (!tu_holds(plus, map(e1), map(e2))) return false;
    if (tu_holds(plus, e1, e3) != tu_holds(plus, map(e1), map(e3))) return false;
    Signal s = detail::random_signal(rng, b);
    Signal ms(map(s.beg()), map(s.end()));
    Particle ma = Particle::through(map(a.at(Scalar(0).to(b))), map(a.at(Scalar(1).to(b))));
    return transmits(a, s) == transmits(ma, ms) && receives(a, s) == receives(ma, ms);
  }));

  r.parts.push_back(sigrel::detail::sample("identity", samples, seed + 4, [&](Rng& rng, nlohmann::json&) {
    Event e1 = rng.event(3, b), e2 = rng.event(3, b);
    Signal s = detail::random_signal(rng, b);
    Particle a = detail::random_particle(rng, b);
    return tu_holds(plus, e1, e2) == tu_holds(plus, e1, e2) && transmits(a, s) == transmits(a, s);
  }));
  return r;
}

/// AxSym holds among unit-calibrated observers and fails among arbitrary
/// ones: the axiom is what the time unit adds.
struct BridgeReport {
  AxiomReport unit;   // tr over M(F)+
  AxiomReport plain;  // tr over M(F)

  bool ok() const { return unit.ok() && !plain.failures.empty(); }
};

inline nlohmann::json to_json(const BridgeReport& r) {
  return {{"suite", "axsym-bridge"}, {"ok", r.ok()}, {"unit", sigrel::to_json(r.unit)}, {"plain", sigrel::to_json(r.plain)}};
}

inline BridgeReport axsym_bridge_check(int samples, std::uint64_t seed, Backend b = Backend::approx) {
  SpecRelModel unit{SignallingModel{b, kDefaultEps, true}};
  SpecRelModel plain{SignallingModel{b, kDefaultEps, false}};
  return {check_axiom(unit, "AxSym", samples, seed), check_axiom(plain, "AxSym", samples, seed)};
}

// ---------------------------------------------------------------------------
// A finite fixture for translated formulas

/// A finite piece of M(F): an observer at rest with its axis particles, a
/// moving particle, a grid of events with the values -1 and 2 on the time
/// axis and on the x-axis particle, and two photons. The target relations
/// of tr are decided geometrically on it.
struct Fixture {
  folkit::FiniteModel model;
  std::vector<Particle> particles;  // a, ax, ay, az, moving
  std::vector<Signal> signals;

  int signal_index(const Event& e) const { return signal_index(Signal(e, e)); }
  int signal_index(const Signal& s) const {
    for (std::size_t i = 0; i < signals.size(); ++i)
      if (signals[i] == s) return static_cast<int>(i);
    throw Error(ErrorKind::ConfigError, "event is not in the fixture");
  }
};

inline Fixture signalling_fixture() {
  Fixture fx;
  Scalar z(0), one(1);
  auto ev = [](long long t, long long x, long long y, long long zz) {
    return Event{Scalar(t), Scalar(x), Scalar(y), Scalar(zz)};
  };
  Vec3 rest{z, z, z};
  fx.particles = {Particle::make(ev(0, 0, 0, 0), rest), Particle::make(ev(0, 1, 0, 0), rest),
                  Particle::make(ev(0, 0, 1, 0), rest), Particle::make(ev(0, 0, 0, 1), rest),
                  Particle::make(ev(0, 0, 0, 0), Vec3{Scalar::ratio(3, 5), z, z})};
  for (long long t : {-1, 2, 3}) fx.signals.emplace_back(ev(t, 0, 0, 0), ev(t, 0, 0, 0));
  for (long long t : {-1, 2}) fx.signals.emplace_back(ev(t, 1, 0, 0), ev(t, 1, 0, 0));
  for (int i = 0; i < 16; ++i) {
    Event e = ev(i >> 3 & 1, i >> 2 & 1, i >> 1 & 1, i & 1);
    fx.signals.emplace_back(e, e);
  }
  fx.signals.emplace_back(ev(0, 0, 0, 0), ev(1, 1, 0, 0));
  fx.signals.emplace_back(ev(0, 0, 0, 0), ev(1, 0, 1, 0));

  folkit::FiniteModel& m = fx.model;
  m.sig = tr_spec().target;
  for (const char* n : {"a", "ax", "ay", "az", "moving"}) m.carriers["Par"].push_back(n);
  for (const auto& s : fx.signals) {
    std::string name = s.is_event() ? "e" : "photon";
    name += to_json(s.beg()).dump();
    if (!s.is_event()) name += "->" + to_json(s.end()).dump();
    m.carriers["Sig"].push_back(name);
  }

  // Closures below share the fixture's element lists by value.
  auto P = fx.particles;
  auto S = fx.signals;
  auto is_ev = [S](int i) { return S[i].is_event(); };
  auto at = [S](int i) { return S[i].beg(); };
  auto fp = [P, S](int a, int o, int u) {
    return S[o].is_event() && S[u].is_event() && P[a].contains(S[o].beg()) && P[a].contains(S[u].beg()) &&
           S[o].beg().t < S[u].beg().t;
  };
  auto frame = [P, S](const std::vector<int>& t, std::size_t k) {
    return Frame{P[t[k]], S[t[k + 1]].beg(), S[t[k + 2]].beg(), P[t[k + 3]], P[t[k + 4]], P[t[k + 5]]};
  };
  auto op = [fp, frame](const std::vector<int>& t, std::size_t k) {
    return fp(t[k], t[k + 1], t[k + 2]) && frame_validate(frame(t, k));
  };
  auto value = [P, S](int x, int a, int o, int u) {
    return field_value(FieldPoint{S[x].beg(), Calibration{P[a], S[o].beg(), S[u].beg()}});
  };

  m.compute("T", [P, S](const std::vector<int>& t) { return transmits(P[t[0]], S[t[1]]); });
  m.compute("R", [P, S](const std::vector<int>& t) { return receives(P[t[0]], S[t[1]]); });
  m.compute("Ev", [is_ev](const std::vector<int>& t) { return is_ev(t[0]); });
  m.compute("Beg", [S](const std::vector<int>& t) { return S[t[0]].beg() == S[t[1]].beg(); });
  m.compute("End", [S](const std::vector<int>& t) { return S[t[0]].end() == S[t[1]].end(); });
  m.compute("Prec", [is_ev, at](const std::vector<int>& t) {
    return is_ev(t[0]) && is_ev(t[1]) && causal_leq_oracle(at(t[0]), at(t[1]));
  });
  m.compute("Parallel", [P](const std::vector<int>& t) { return motionless(P[t[0]], P[t[1]]); });
  m.compute("Ort", [P](const std::vector<int>& t) {
    if (!(P[t[0]] == P[t[2]])) return false;
    try {
      const Particle& a = P[t[0]];
      return ort_oracle(Location::make(a, a), Location::make(a, P[t[1]]), Location::make(a, P[t[3]]));
    } catch (const Error&) {
      return false;
    }
  });
  m.compute("Fp", [fp](const std::vector<int>& t) { return fp(t[0], t[1], t[2]); });
  m.compute("Op", [op](const std::vector<int>& t) { return op(t, 0); });
  m.compute("Iso", [P, S, fp, is_ev](const std::vector<int>& t) {
    if (!is_ev(t[0]) || !is_ev(t[1]) || !fp(t[2], t[3], t[4]) || !fp(t[5], t[6], t[7])) return false;
    if (!P[t[2]].contains(S[t[0]].beg()) || !P[t[5]].contains(S[t[1]].beg())) return false;
    Calibration from{P[t[2]], S[t[3]].beg(), S[t[4]].beg()}, to{P[t[5]], S[t[6]].beg(), S[t[7]].beg()};
    return iso(to, FieldPoint{S[t[0]].beg(), from}).carrier == S[t[1]].beg();
  });
  m.compute("Plus", [P, S, is_ev](const std::vector<int>& t) {
    for (int k : {0, 1, 2, 4})
      if (!is_ev(t[k]) || !P[t[3]].contains(S[t[k]].beg())) return false;
    return S[t[0]].beg() == S[t[1]].beg() + S[t[2]].beg() - S[t[4]].beg();
  });
  m.compute("Times", [P, S, fp, value](const std::vector<int>& t) {
    if (!fp(t[3], t[4], t[5])) return false;
    for (int k : {0, 1, 2})
      if (!S[t[k]].is_event() || !P[t[3]].contains(S[t[k]].beg())) return false;
    return value(t[0], t[3], t[4], t[5]) == value(t[1], t[3], t[4], t[5]) * value(t[2], t[3], t[4], t[5]);
  });
  m.compute("Cord", [P, S, op, frame, value](const std::vector<int>& t) {
    if (!S[t[0]].is_event() || !op(t, 5)) return false;
    for (int k : {1, 2, 3, 4})
      if (!S[t[k]].is_event() || !P[t[5]].contains(S[t[k]].beg())) return false;
    auto c = cord_values(frame(t, 5), S[t[0]].beg());
    for (int k = 0; k < 4; ++k)
      if (!(c[k] == value(t[k + 1], t[5], t[6], t[7]))) return false;
    return true;
  });
  m.compute("CordEq", [S, op, frame](const std::vector<int>& t) {
    if (!S[t[0]].is_event() || !op(t, 1) || !op(t, 7)) return false;
    return cord_values(frame(t, 1), S[t[0]].beg()) == cord_values(frame(t, 7), S[t[0]].beg());
  });
  m.compute("lambda", [is_ev, at](const std::vector<int>& t) {
    return is_ev(t[0]) && is_ev(t[1]) && is_ev(t[2]) && lightlike_collinear(at(t[0]), at(t[1]), at(t[2]));
  });
  m.compute("wl", [S](const std::vector<int>& t) { return S[t[0]].is_event() && wl(S[t[0]].beg(), S[t[1]]); });
  return fx;
}

/// An instance report for a translated formula on the fixture.
struct BoundedReport {
  std::string formula;
  int instances = 0;
  int holds = 0;
  int premises = 0;  // instances whose left side holds, so the check is not vacuous
  std::vector<nlohmann::json> failures;

  bool ok() const { return instances > 0 && holds == instances && premises > 0; }
};

inline nlohmann::json to_json(const BoundedReport& r) {
  return {{"formula", r.formula}, {"instances", r.instances}, {"holds", r.holds}, {"premises", r.premises},
          {"failures", r.failures}};
}

/// Evaluates tr of the matrix of AxSelf or AxPh on the fixture: the observer
/// is the one at rest, the photon the one along x, and the quantities range
/// over the values 0 and 1 represented in the observer's field and in the
/// field of the x-axis particle.
inline BoundedReport tr_bounded_check(const std::string& axiom) {
  Fixture fx = signalling_fixture();
  InterpretationSpec spec = tr_spec();
  std::string text;
  for (const auto& [name, t] : specrel0_axioms())
    if (name == axiom) text = t;
  if (text.empty() || (axiom != "AxSelf" && axiom != "AxPh")) {
    throw Error(ErrorKind::ConfigError, "bounded check covers AxSelf and AxPh, not '" + axiom + "'");
  }
  Formula f = folkit::parse(text, spec.source);
  // Strip the outer quantifiers: AxSelf is forall m (Obs m -> forall t,x,y,z M),
  // AxPh is forall m,p,t,...,z' M.
  Formula matrix = axiom == "AxSelf" ? f->kids[0]->kids[1]->kids[0] : f->kids[0];
  folkit::SortMap ctx;
  for (const char* q : {"t", "x", "y", "z", "t'", "x'", "y'", "z'"}) ctx[q] = "Q";
  ctx["m"] = "B";
  ctx["p"] = "B";
  folkit::SortMap used;
  for (const auto& v : folkit::free_vars(matrix)) used[v] = ctx.at(v);
  Formula translated = folkit::translate(spec, matrix, used);
  Formula premise = folkit::translate(spec, matrix->kids[0], used);
  auto names = folkit::free_matching(spec, matrix, used);

  auto ev = [](long long t, long long x) { return Event{Scalar(t), Scalar(x), Scalar(0), Scalar(0)}; };
  int O = fx.signal_index(ev(0, 0)), U = fx.signal_index(ev(1, 0));
  std::vector<int> observer{O, 0, O, U, 1, 2, 3};
  std::vector<int> photon{fx.signal_index(Signal(ev(0, 0), ev(1, 1))), 0, O, U, 1, 2, 3};
  int XO = fx.signal_index(ev(0, 1)), XU = fx.signal_index(ev(1, 1));
  // Values 0 and 1 in the observer's field, then in the x-axis particle's field.
  std::vector<std::vector<int>> quantities{{O, 0, O, U}, {U, 0, O, U}, {XO, 1, XO, XU}, {XU, 1, XO, XU}};
  std::vector<std::string> qs;
  for (const char* q : {"t", "x", "y", "z", "t'", "x'", "y'", "z'"})
    if (used.count(q)) qs.push_back(q);

  BoundedReport r{"tr(" + axiom + ")", 0, 0, 0, {}};
  std::vector<std::size_t> pick(qs.size(), 0);
  for (;;) {
    folkit::Assignment k;
    auto bind = [&](const std::string& v, const std::vector<int>& tuple) {
      for (std::size_t i = 0; i < tuple.size(); ++i) k[names.at(v)[i]] = tuple[i];
    };
    bind("m", observer);
    if (used.count("p")) bind("p", photon);
    nlohmann::json values = nlohmann::json::object();
    for (std::size_t i = 0; i < qs.size(); ++i) {
      bind(qs[i], quantities[pick[i]]);
      values[qs[i]] = fx.model.carriers.at("Sig")[quantities[pick[i]][0]] + " in field of " +
                      fx.model.carriers.at("Par")[quantities[pick[i]][1]];
    }
    ++r.instances;
    if (folkit::eval(fx.model, premise, k)) ++r.premises;
    if (folkit::eval(fx.model, translated, k)) {
      ++r.holds;
    } else if (r.failures.size() < kMaxWitnesses) {
      r.failures.push_back(values);
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == quantities.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return r;
}

/// Compares a macro of tr with the relation decided geometrically on the
/// fixture, over every tuple. Ev agrees. Beg and End quantify over the five
/// particles, which cannot tell apart two events on one worldline, and the
/// longer macros need signals the fixture lacks; those disagree here.
inline BoundedReport macro_agreement(const Fixture& fx, const std::string& name) {
  InterpretationSpec spec = tr_spec();
  auto it = spec.macros.find(name);
  if (it == spec.macros.end()) throw Error(ErrorKind::ConfigError, "'" + name + "' is not a macro of tr");
  std::vector<std::string> params;
  for (const auto& b : it->second.params) params.push_back(b.var);
  Formula expanded = folkit::expand_macros(spec, folkit::atom(name, params));
  const auto& rel = fx.model.relations.at(name);
  BoundedReport r{"macro " + name, 0, 0, 0, {}};
  std::vector<int> tuple(params.size(), 0);
  std::vector<std::size_t> size;
  for (const auto& b : it->second.params) size.push_back(fx.model.carriers.at(b.sort).size());
  for (;;) {
    folkit::Assignment k;
    for (std::size_t i = 0; i < params.size(); ++i) k[params[i]] = tuple[i];
    bool geometric = rel.holds(tuple);
    ++r.instances;
    if (geometric) ++r.premises;
    if (folkit::eval(fx.model, expanded, k) == geometric) {
      ++r.holds;
    } else if (r.failures.size() < kMaxWitnesses) {
      nlohmann::json w = nlohmann::json::array();
      for (std::size_t i = 0; i < params.size(); ++i) {
        w.push_back(fx.model.carriers.at(it->second.params[i].sort)[static_cast<std::size_t>(tuple[i])]);
      }
      r.failures.push_back(w);
    }
    std::size_t i = 0;
    while (i < tuple.size() && static_cast<std::size_t>(++tuple[i]) == size[i]) tuple[i++] = 0;
    if (i == tuple.size()) break;
  }
  return r;
}

}  // namespace sigrel::interp
