// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sigrel/minkowski.hpp"
#include "sigrel/random.hpp"

namespace sigrel {

/// A timelike straight worldline, stored canonically as the point at t = 0
/// plus the 3-velocity. Two particles are equal iff they are the same line.
class Particle {
 public:
  /// The particle through `p` with velocity `v`; requires v.v < 1.
  static Particle make(const Event& p, const Vec3& v) {
    if (!(v.norm2() < Scalar(1))) {
      throw Error(ErrorKind::SuperluminalError, "particle speed must be below light speed (v.v = " + v.norm2().str() + ")");
    }
    Particle a;
    a.base_ = Event::from(Scalar(0), p.space() - p.t * v);
    a.velocity_ = v;
    return a;
  }

  /// The particle through two distinct timelike-separated events.
  static Particle through(const Event& e1, const Event& e2) {
    Event d = e2 - e1;
    if (d.t.is_zero()) throw Error(ErrorKind::NotTimelike, "events are not timelike separated");
    return make(e1, (Scalar(1) / d.t) * d.space());
  }

  static Particle time_axis(Backend b = Backend::exact) {
    Scalar z = Scalar(0).to(b);
    return make({z, z, z, z}, {z, z, z});
  }

  const Event& base() const { return base_; }
  const Vec3& velocity() const { return velocity_; }

  /// Tangent (1, v); future-directed and timelike.
  Event direction() const { return Event::from(Scalar(1), velocity_); }

  /// The event on the worldline at coordinate time t.
  Event at(const Scalar& t) const { return base_ + t * direction(); }

  bool contains(const Event& e) const {
    return e.x == base_.x + velocity_.x * e.t && e.y == base_.y + velocity_.y * e.t &&
           e.z == base_.z + velocity_.z * e.t;
  }

  /// The parallel particle through `e`.
  Particle parallel_through(const Event& e) const { return make(e, velocity_); }

  friend bool operator==(const Particle& a, const Particle& b) {
    return a.base_ == b.base_ && a.velocity_ == b.velocity_;
  }

 private:
  Particle() = default;
  Event base_;
  Vec3 velocity_;
};

/// A directed lightlike segment, possibly of length zero.
class Signal {
 public:
  Signal(const Event& beg, const Event& end) : beg_(beg), end_(end) {
    Separation s = separation(beg, end);
    if (s != Separation::equal && s != Separation::lightlike_future) {
      throw Error(ErrorKind::InvalidSignal, "signal endpoints must be lightlike-future separated or equal");
    }
  }
  static Signal event(const Event& e) { return Signal(e, e); }

  const Event& beg() const { return beg_; }
  const Event& end() const { return end_; }
  bool is_event() const { return beg_ == end_; }

  friend bool operator==(const Signal& a, const Signal& b) { return a.beg_ == b.beg_ && a.end_ == b.end_; }

 private:
  Event beg_, end_;
};

inline bool transmits(const Particle& a, const Signal& s) { return a.contains(s.beg()); }
inline bool receives(const Particle& a, const Signal& s) { return a.contains(s.end()); }

/// Zero-length signals are the events.
inline bool ev(const Signal& s) { return s.is_event(); }

/// The standard model M(F), or its expansion M(F)+ when `tu` is set.
struct SignallingModel {
  Backend backend = Backend::approx;
  double eps = kDefaultEps;
  bool tu = false;
};

/// Time-unit relation of M(F)+: the events are at Minkowski distance 1.
inline bool tu_holds(const SignallingModel& m, const Event& e1, const Event& e2) {
  if (!m.tu) throw Error(ErrorKind::FeatureDisabled, "Tu is only available in the expanded model");
  return interval2(e1, e2) == Scalar(1);
}

/// A finite sub-model of M(F).
struct Scenario {
  SignallingModel model;
  std::vector<Particle> particles;
  std::vector<Signal> signals;

  void add_particle(const Particle& p) {
    for (const auto& q : particles)
      if (q == p) return;
    particles.push_back(p);
  }
  void add_signal(const Signal& s) {
    for (const auto& q : signals)
      if (q == s) return;
    signals.push_back(s);
  }
};

/// Ev read as its quantified definition over the scenario's particles:
/// every particle transmitting s also receives it.
inline bool ev_quantified(const Scenario& sc, const Signal& s) {
  for (const auto& a : sc.particles)
    if (transmits(a, s) && !receives(a, s)) return false;
  return true;
}

struct ScenarioCounts {
  int particles = 3;
  int signals = 5;
};

/// Deterministic pseudo-random finite sub-model. With `with_witnesses`, the
/// scenario also contains a rest particle and a zero-length signal at every
/// signal endpoint, so quantified definitions over it agree with their
/// intended meaning.
inline Scenario scenario_restrict(std::uint64_t seed, ScenarioCounts counts, SignallingModel model = {},
                                  bool with_witnesses = false) {
  Rng rng(seed);
  Scenario sc;
  sc.model = model;
  auto lift = [&](const Scalar& s) { return model.backend == Backend::exact ? s : s.to(Backend::approx, model.eps); };
  auto lift_event = [&](const Event& e) { return Event{lift(e.t), lift(e.x), lift(e.y), lift(e.z)}; };
  auto rational_event = [&] {
    return Event{rng.rational(-4, 4, 4), rng.rational(-4, 4, 4), rng.rational(-4, 4, 4), rng.rational(-4, 4, 4)};
  };
  while (static_cast<int>(sc.particles.size()) < counts.particles) {
    Vec3 v{rng.rational(-1, 1, 8), rng.rational(-1, 1, 8), rng.rational(-1, 1, 8)};
    if (!(v.norm2() < Scalar(1))) continue;
    sc.add_particle(Particle::make(lift_event(rational_event()), {lift(v.x), lift(v.y), lift(v.z)}));
  }
  while (static_cast<int>(sc.signals.size()) < counts.signals) {
    Event beg = rational_event();
    Vec3 n = rng.unit_vector(Backend::exact);
    Scalar len = rng.coin(1, 8) ? Scalar(0) : rng.rational(0, 4, 4);
    Event end = beg + len * Event::from(Scalar(1), n);
    sc.add_signal(Signal(lift_event(beg), lift_event(end)));
  }
  if (with_witnesses) {
    std::vector<Signal> original = sc.signals;
    Scalar zero = lift(Scalar(0));
    for (const auto& s : original) {
      for (const Event& e : {s.beg(), s.end()}) {
        sc.add_particle(Particle::make(e, {zero, zero, zero}));
        sc.add_signal(Signal::event(e));
      }
    }
  }
  return sc;
}

// JSON encoding: scalars as strings, events as 4-element arrays.

inline nlohmann::json to_json(const Scalar& s) { return s.str(); }
inline nlohmann::json to_json(const Event& e) { return {e.t.str(), e.x.str(), e.y.str(), e.z.str()}; }
inline nlohmann::json to_json(const Vec3& v) { return {v.x.str(), v.y.str(), v.z.str()}; }
inline nlohmann::json to_json(const Particle& p) {
  return {{"base", to_json(p.base())}, {"velocity", to_json(p.velocity())}};
}
inline nlohmann::json to_json(const Signal& s) { return {{"beg", to_json(s.beg())}, {"end", to_json(s.end())}}; }

inline Scalar scalar_from_json(const nlohmann::json& j, Backend b, double eps = kDefaultEps) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), b, eps);
  if (j.is_number_integer()) return make_scalar(Rational(j.get<long long>()), b, eps);
  if (j.is_number()) return Scalar::parse(j.dump(), b, eps);
  throw Error(ErrorKind::ConfigError, "expected a scalar, got " + j.dump());
}

inline Event event_from_json(const nlohmann::json& j, Backend b, double eps = kDefaultEps) {
  if (!j.is_array() || j.size() != 4) throw Error(ErrorKind::ConfigError, "event must be a 4-element array");
  return {scalar_from_json(j[0], b, eps), scalar_from_json(j[1], b, eps), scalar_from_json(j[2], b, eps),
          scalar_from_json(j[3], b, eps)};
}

inline Vec3 vec3_from_json(const nlohmann::json& j, Backend b, double eps = kDefaultEps) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorKind::ConfigError, "velocity must be a 3-element array");
  return {scalar_from_json(j[0], b, eps), scalar_from_json(j[1], b, eps), scalar_from_json(j[2], b, eps)};
}

inline Particle particle_from_json(const nlohmann::json& j, Backend b, double eps = kDefaultEps) {
  return Particle::make(event_from_json(j.at("base"), b, eps), vec3_from_json(j.at("velocity"), b, eps));
}

inline Signal signal_from_json(const nlohmann::json& j, Backend b, double eps = kDefaultEps) {
  return Signal(event_from_json(j.at("beg"), b, eps), event_from_json(j.at("end"), b, eps));
}

inline nlohmann::json to_json(const Scenario& sc) {
  nlohmann::json j;
  j["field"] = std::string(to_string(sc.model.backend));
  j["tu"] = sc.model.tu;
  j["particles"] = nlohmann::json::array();
  for (const auto& p : sc.particles) j["particles"].push_back(to_json(p));
  j["signals"] = nlohmann::json::array();
  for (const auto& s : sc.signals) j["signals"].push_back(to_json(s));
  return j;
}

inline Scenario scenario_from_json(const nlohmann::json& j, double eps = kDefaultEps) {
  Scenario sc;
  try {
    sc.model.backend = parse_backend(j.at("field").get<std::string>());
    sc.model.tu = j.value("tu", false);
    sc.model.eps = eps;
    for (const auto& p : j.at("particles")) sc.particles.push_back(particle_from_json(p, sc.model.backend, eps));
    for (const auto& s : j.at("signals")) sc.signals.push_back(signal_from_json(s, sc.model.backend, eps));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ConfigError, std::string("malformed scenario: ") + e.what());
  }
  return sc;
}

/// The dilation e -> k e, an automorphism of the T/R structure for k > 0.
inline Event dilate(const Event& e, const Scalar& k) { return k * e; }
inline Particle dilate(const Particle& a, const Scalar& k) { return Particle::make(k * a.base(), a.velocity()); }
inline Signal dilate(const Signal& s, const Scalar& k) { return Signal(k * s.beg(), k * s.end()); }

}  // namespace sigrel
