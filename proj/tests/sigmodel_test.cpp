// SPDX-License-Identifier: Apache-2.0
#include "sigrel/sigmodel.hpp"

#include <gtest/gtest.h>

namespace sigrel {
namespace {

Event ev4(long long t, long long x, long long y, long long z) { return {Scalar(t), Scalar(x), Scalar(y), Scalar(z)}; }
const Vec3 kRest{Scalar(0), Scalar(0), Scalar(0)};

TEST(Particle, Canonicalization) {
  Particle a = Particle::make(ev4(0, 0, 0, 0), kRest);
  Particle b = Particle::make(ev4(1, 0, 0, 0), kRest);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, Particle::time_axis());
  Vec3 v{Scalar::ratio(1, 2), Scalar(0), Scalar(0)};
  EXPECT_EQ(Particle::make(ev4(0, 0, 0, 0), v), Particle::make(ev4(2, 1, 0, 0), v));
  EXPECT_FALSE(Particle::make(ev4(0, 0, 0, 0), v) == Particle::make(ev4(2, 0, 0, 0), v));
}

TEST(Particle, Superluminal) {
  try {
    (void)Particle::make(ev4(0, 0, 0, 0), {Scalar(1), Scalar(0), Scalar(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SuperluminalError);
  }
  EXPECT_THROW(Particle::make(ev4(0, 0, 0, 0), {Scalar::ratio(3, 5), Scalar::ratio(4, 5), Scalar(0)}), Error);
}

TEST(Particle, EqualityIsExtensional) {
  // Equal values denote the same point set: sample points of one lie on the other.
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    Vec3 v = rng.velocity(Backend::exact, 0.9);
    Event p = rng.event(4, Backend::exact);
    Particle a = Particle::make(p, v);
    Event q = a.at(rng.rational(-5, 5, 3));
    Particle b = Particle::make(q, v);
    ASSERT_EQ(a, b);
    for (int k = 0; k < 5; ++k) ASSERT_TRUE(a.contains(b.at(rng.rational(-9, 9, 5))));
    Particle c = Particle::make(q + Event{Scalar(0), Scalar(1), Scalar(0), Scalar(0)}, v);
    ASSERT_FALSE(a == c);
    ASSERT_FALSE(a.contains(c.at(Scalar(0))));
  }
}

TEST(Signal, TransmitReceive) {
  Particle axis = Particle::time_axis();
  Signal s(ev4(0, 0, 0, 0), ev4(1, 1, 0, 0));
  EXPECT_TRUE(transmits(axis, s));
  EXPECT_FALSE(receives(axis, s));
  Signal z = Signal::event(ev4(2, 0, 0, 0));
  EXPECT_TRUE(transmits(axis, z));
  EXPECT_TRUE(receives(axis, z));
  Particle off = Particle::make(ev4(0, 1, 0, 0), kRest);
  EXPECT_FALSE(transmits(off, s));
  EXPECT_TRUE(receives(off, s));
  EXPECT_THROW(Signal(ev4(0, 0, 0, 0), ev4(2, 1, 0, 0)), Error);
  EXPECT_THROW(Signal(ev4(1, 1, 0, 0), ev4(0, 0, 0, 0)), Error);
}

TEST(Signal, Ev) {
  EXPECT_TRUE(ev(Signal::event(ev4(3, 1, 4, 1))));
  EXPECT_FALSE(ev(Signal(ev4(0, 0, 0, 0), ev4(1, 1, 0, 0))));
}

TEST(Signal, EvAgreesWithQuantifiedDefinition) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Scenario sc = scenario_restrict(seed, {4, 8}, {Backend::exact}, true);
    for (const auto& s : sc.signals) ASSERT_EQ(ev(s), ev_quantified(sc, s)) << "seed " << seed;
  }
}

TEST(Tu, UnitPairs) {
  SignallingModel plus{Backend::exact, kDefaultEps, true};
  EXPECT_TRUE(tu_holds(plus, ev4(0, 0, 0, 0), ev4(1, 0, 0, 0)));
  EXPECT_FALSE(tu_holds(plus, ev4(0, 0, 0, 0), ev4(2, 0, 0, 0)));
  EXPECT_FALSE(tu_holds(plus, ev4(0, 0, 0, 0), ev4(5, 3, 0, 0)));
  SignallingModel plain{Backend::exact, kDefaultEps, false};
  try {
    (void)tu_holds(plain, ev4(0, 0, 0, 0), ev4(1, 0, 0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FeatureDisabled);
  }
}

TEST(Scenario, DeterministicAndValid) {
  Scenario a = scenario_restrict(0, {3, 5}, {Backend::exact});
  Scenario b = scenario_restrict(0, {3, 5}, {Backend::exact});
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_EQ(a.particles.size(), 3u);
  EXPECT_EQ(a.signals.size(), 5u);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (Backend bk : {Backend::exact, Backend::approx}) {
      Scenario sc = scenario_restrict(seed, {6, 10}, {bk});
      for (const auto& p : sc.particles) ASSERT_LT(p.velocity().norm2(), Scalar(1));
      for (const auto& s : sc.signals) {
        ASSERT_EQ(interval2(s.beg(), s.end()), Scalar(0));
        ASSERT_GE(s.end().t, s.beg().t);
      }
    }
  }
}

TEST(Scenario, JsonRoundTrip) {
  for (Backend bk : {Backend::exact, Backend::approx}) {
    Scenario sc = scenario_restrict(9, {3, 4}, {bk, kDefaultEps, true}, true);
    auto j = to_json(sc);
    EXPECT_EQ(j["field"], std::string(to_string(bk)));
    Scenario back = scenario_from_json(j);
    EXPECT_EQ(to_json(back).dump(), j.dump());
  }
  EXPECT_THROW(scenario_from_json(nlohmann::json::parse(R"({"field":"exact"})")), Error);
}

TEST(Dilation, PreservesTransmitReceive) {
  Rng rng(77);
  Scalar two(2);
  for (int i = 0; i < 1000; ++i) {
    Scenario sc = scenario_restrict(rng.next(), {1, 1}, {Backend::exact});
    const Particle& a = sc.particles[0];
    const Signal& s = sc.signals[0];
    // Also pair a particle that genuinely transmits.
    Particle b = Particle::make(s.beg(), a.velocity());
    ASSERT_EQ(transmits(a, s), transmits(dilate(a, two), dilate(s, two)));
    ASSERT_EQ(receives(a, s), receives(dilate(a, two), dilate(s, two)));
    ASSERT_TRUE(transmits(dilate(b, two), dilate(s, two)));
    ASSERT_EQ(receives(b, s), receives(dilate(b, two), dilate(s, two)));
  }
}

}  // namespace
}  // namespace sigrel
