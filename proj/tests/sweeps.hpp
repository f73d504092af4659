// SPDX-License-Identifier: Apache-2.0
// Oracle-equivalence sweeps for the witness constructions. Each sweep draws
// seeded instances, runs the construction and its closed-form oracle, and
// counts agreements.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"

namespace sigrel::sweeps {

struct Tally {
  std::string name;
  int total = 0;
  int agree = 0;
  std::vector<std::string> failures;

  bool ok() const { return total > 0 && agree == total; }
  void record(bool same, const std::string& what) {
    ++total;
    if (same) {
      ++agree;
    } else if (failures.size() < 5) {
      failures.push_back(what);
    }
  }
};

using fixtures::random_calibration;
using fixtures::random_location;
using fixtures::random_particle;
using fixtures::random_point;
using fixtures::random_rest_vector;
using fixtures::random_timelike;

/// Runs `body` for `n` instances, each with its own seeded generator.
/// Construction errors count as disagreements.
inline Tally run(const std::string& name, int n, std::uint64_t seed, const std::function<bool(Rng&, int)>& body) {
  Tally t{name, 0, 0, {}};
  for (int i = 0; i < n; ++i) {
    Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(i));
    bool same = false;
    std::string why = "instance " + std::to_string(i);
    try {
      same = body(rng, i);
    } catch (const Error& e) {
      why += std::string(": ") + e.what();
    }
    t.record(same, why);
  }
  return t;
}

inline Tally desargues(int n, std::uint64_t seed) {
  return run("desargues_experiment", n, seed, [](Rng& rng, int i) {
    Particle a = random_particle(rng);
    Particle b = a;
    switch (i % 3) {
      case 0: b = a.parallel_through(a.base() + random_rest_vector(rng, a)); break;
      case 1: b = Particle::make(a.at(rng.scalar(-3, 3, Backend::approx)), rng.velocity(Backend::approx, 0.6)); break;
      default: b = random_particle(rng); break;
    }
    return desargues_experiment(a, b, rng.next()) == motionless(a, b);
  });
}

inline Tally simultaneity(int n, std::uint64_t seed) {
  return run("simultaneous", n, seed, [](Rng& rng, int i) {
    Particle a = random_particle(rng);
    Event e1 = rng.event(4, Backend::approx);
    Event e2 = i % 2 == 0 ? e1 + random_rest_vector(rng, a) : rng.event(4, Backend::approx);
    return simultaneous(a, e1, e2) == simultaneous_oracle(a, e1, e2);
  });
}

inline Tally time_equidistance(int n, std::uint64_t seed) {
  return run("ted", n, seed, [](Rng& rng, int i) {
    Particle a = random_particle(rng);
    auto pick = [&] { return a.at(rng.scalar(-4, 4, Backend::approx)); };
    Event e1 = pick(), e2 = pick(), e3 = pick();
    Event e4 = i % 2 == 0 ? e3 + (e2 - e1) : pick();
    return ted(a, e1, e2, e3, e4) == ted_oracle(e1, e2, e3, e4);
  });
}

inline Tally addition(int n, std::uint64_t seed) {
  return run("plus", n, seed, [](Rng& rng, int) {
    Calibration c = random_calibration(rng);
    FieldPoint x = random_point(rng, c), y = random_point(rng, c);
    return field_value(plus(x, y)) == field_value(x) + field_value(y);
  });
}

inline Tally multiplication(int n, std::uint64_t seed) {
  return run("times", n, seed, [](Rng& rng, int) {
    Calibration c = random_calibration(rng);
    FieldPoint x = random_point(rng, c), y = random_point(rng, c);
    return field_value(times(x, y)) == field_value(x) * field_value(y);
  });
}

inline Tally collinearity(int n, std::uint64_t seed) {
  return run("col", n, seed, [](Rng& rng, int i) {
    Particle a = random_particle(rng);
    Location l1 = random_location(rng, a), l2 = random_location(rng, a);
    Location l3 = random_location(rng, a);
    if (i % 2 == 0) {
      Scalar s = rng.scalar(-2, 3, Backend::approx);
      l3 = Location::at(a, l1.position() + s * (l2.position() - l1.position()));
    }
    return col(l1, l2, l3) == col_oracle(l1, l2, l3);
  });
}

inline Tally orthogonality(int n, std::uint64_t seed) {
  return run("ort", n, seed, [](Rng& rng, int i) {
    Particle a = random_particle(rng);
    Location la = random_location(rng, a), lb = random_location(rng, a);
    Location lc = random_location(rng, a);
    if (i % 2 == 0) {
      Event u = lb.position() - la.position();
      Event w = lc.position() - la.position();
      w = w - (sdot(w, u) / sdot(u, u)) * u;
      lc = Location::at(a, la.position() + w);
    }
    return ort(la, lb, lc) == ort_oracle(la, lb, lc);
  });
}

inline Tally distance(int n, std::uint64_t seed) {
  return run("dd", n, seed, [](Rng& rng, int) {
    Calibration c = random_calibration(rng);
    Location b1 = random_location(rng, c.a), b2 = random_location(rng, c.a);
    return field_value(dd(c, b1, b2)) == dd_oracle(c, b1, b2);
  });
}

inline Tally coordinates(int n, std::uint64_t seed) {
  return run("cord", n, seed, [](Rng& rng, int) {
    Frame f = fixtures::random_frame(rng);
    Event e = rng.event(5, Backend::approx);
    auto got = cord_values(f, e);
    auto want = poincare_to_frame(f, e);
    return got == want;
  });
}

inline Tally relativistic_distance(int n, std::uint64_t seed) {
  return run("mu", n, seed, [](Rng& rng, int i) {
    Particle a = random_particle(rng);
    Event o = a.at(rng.scalar(-2, 2, Backend::approx));
    Event e1 = rng.event(4, Backend::approx);
    Event d = random_timelike(rng);
    Event e2 = i % 2 == 0 ? e1 + d : e1 - d;
    return mu_oracle(o, e1, e2, mu(a, o, e1, e2));
  });
}

inline Tally minkowski_equidistance(int n, std::uint64_t seed) {
  return run("med", n, seed, [](Rng& rng, int i) {
    Particle a = random_particle(rng);
    Event o = a.at(rng.scalar(-2, 2, Backend::approx));
    Event e1 = rng.event(4, Backend::approx), e3 = rng.event(4, Backend::approx);
    Event d = random_timelike(rng);
    Event e2 = e1 + d;
    Event e4 = i % 2 == 0 ? e3 + fixtures::lorentz_image(rng, d) : e3 + random_timelike(rng);
    return med(e1, e2, e3, e4, a, o) == med_oracle(e1, e2, e3, e4);
  });
}

inline Tally isomorphism(int n, std::uint64_t seed) {
  return run("iso", n, seed, [](Rng& rng, int) {
    Calibration from = random_calibration(rng), to = random_calibration(rng);
    FieldPoint x = random_point(rng, from);
    return field_value(iso(to, x)) == field_value(x);
  });
}

inline constexpr int kCount = 12;

inline Tally by_index(int i, int n, std::uint64_t seed) {
  switch (i) {
    case 0: return desargues(n, seed);
    case 1: return simultaneity(n, seed);
    case 2: return time_equidistance(n, seed);
    case 3: return addition(n, seed);
    case 4: return multiplication(n, seed);
    case 5: return collinearity(n, seed);
    case 6: return orthogonality(n, seed);
    case 7: return distance(n, seed);
    case 8: return coordinates(n, seed);
    case 9: return relativistic_distance(n, seed);
    case 10: return minkowski_equidistance(n, seed);
    default: return isomorphism(n, seed);
  }
}

/// All twelve sweeps, in a fixed order.
inline std::vector<Tally> all(int n, std::uint64_t seed) {
  std::vector<Tally> out;
  for (int i = 0; i < kCount; ++i) out.push_back(by_index(i, n, seed));
  return out;
}

}  // namespace sigrel::sweeps
