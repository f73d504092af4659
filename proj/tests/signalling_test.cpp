// SPDX-License-Identifier: Apache-2.0
#include "sigrel/coords.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sweeps.hpp"

namespace sigrel {
namespace {

using fixtures::ev;
using fixtures::q;

const Vec3 kRest{Scalar(0), Scalar(0), Scalar(0)};

Particle axis() { return Particle::time_axis(); }
Particle moving(Scalar vx) { return Particle::make(ev(0, 0, 0, 0), {vx, Scalar(0), Scalar(0)}); }
Calibration unit_axis() { return {axis(), ev(0, 0, 0, 0), ev(1, 0, 0, 0)}; }
Location rest(long long x, long long y, long long z) { return rest_location(axis(), q(x), q(y), q(z)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ConfigError;
}

TEST(SignalBetween, Examples) {
  EXPECT_TRUE(signal_between(ev(0, 0, 0, 0), ev(1, 1, 0, 0)).has_value());
  EXPECT_FALSE(signal_between(ev(0, 0, 0, 0), ev(2, 1, 0, 0)).has_value());
  auto z = signal_between(ev(3, 1, 2, 0), ev(3, 1, 2, 0));
  ASSERT_TRUE(z.has_value());
  EXPECT_TRUE(ev(*z));
  EXPECT_FALSE(signal_between(ev(1, 1, 0, 0), ev(0, 0, 0, 0)).has_value());
}

TEST(Motionless, Examples) {
  EXPECT_TRUE(motionless(axis(), Particle::make(ev(0, 1, 0, 0), kRest)));
  EXPECT_FALSE(motionless(axis(), moving(q(1, 2))));
  EXPECT_TRUE(motionless(moving(q(1, 3)), moving(q(1, 3))));
}

TEST(Desargues, Examples) {
  Trace tr;
  EXPECT_TRUE(desargues_experiment(axis(), Particle::make(ev(0, 2, 0, 0), kRest), 7, &tr));
  EXPECT_TRUE(tr.contains("b3"));
  EXPECT_FALSE(desargues_experiment(axis(), moving(q(1, 2)), 7));
  EXPECT_FALSE(desargues_experiment(axis(), Particle::make(ev(0, 0, 3, 1), {q(1, 2), Scalar(0), Scalar(0)}), 3));
}

TEST(Desargues, DeterministicPerSeed) {
  Trace t1, t2;
  Particle b = Particle::make(ev(0, 1, 1, 0), kRest);
  (void)desargues_experiment(axis(), b, 11, &t1);
  (void)desargues_experiment(axis(), b, 11, &t2);
  EXPECT_EQ(t1.dump(), t2.dump());
}

TEST(Simultaneous, Examples) {
  EXPECT_TRUE(simultaneous(axis(), ev(0, 1, 0, 0), ev(0, 0, 1, 0)));
  EXPECT_TRUE(simultaneous(moving(q(1, 2)), ev(0, 0, 0, 0), {q(1, 2), q(1), q(0), q(0)}));
  EXPECT_FALSE(simultaneous(axis(), ev(0, 0, 0, 0), ev(1, 0, 0, 0)));
}

TEST(Simultaneous, EquivalenceAndVelocityDependence) {
  Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    Particle a = fixtures::random_particle(rng);
    Particle a2 = a.parallel_through(rng.event(4, Backend::approx));
    Event e1 = rng.event(3, Backend::approx);
    Event e2 = e1 + fixtures::random_rest_vector(rng, a);
    Event e3 = e2 + fixtures::random_rest_vector(rng, a);
    ASSERT_TRUE(simultaneous(a, e1, e1));
    ASSERT_TRUE(simultaneous(a, e2, e1));
    ASSERT_TRUE(simultaneous(a, e1, e3));
    Event f = rng.event(3, Backend::approx);
    ASSERT_EQ(simultaneous(a, e1, f), simultaneous(a2, e1, f));
  }
}

TEST(Causal, Examples) {
  Trace tr;
  auto w = causal_leq(ev(0, 0, 0, 0), ev(2, 1, 0, 0), &tr);
  ASSERT_TRUE(w.holds);
  EXPECT_EQ(*w.mid, (Event{q(3, 2), q(3, 2), q(0), q(0)}));
  EXPECT_TRUE(causal_leq(ev(0, 0, 0, 0), ev(0, 0, 0, 0)).holds);
  EXPECT_FALSE(strictly_earlier(ev(0, 0, 0, 0), ev(0, 0, 0, 0)));
  EXPECT_FALSE(causal_leq(ev(0, 0, 0, 0), ev(0, 1, 0, 0)).holds);
}

TEST(Causal, StrictPartialOrder) {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    Event a = rng.event(3, Backend::exact), b = rng.event(3, Backend::exact), c = rng.event(3, Backend::exact);
    ASSERT_EQ(causal_leq(a, b).holds, causal_leq_oracle(a, b));
    ASSERT_FALSE(strictly_earlier(a, a));
    if (strictly_earlier(a, b)) {
      ASSERT_FALSE(strictly_earlier(b, a));
      if (strictly_earlier(b, c)) {
        ASSERT_TRUE(strictly_earlier(a, c));
      }
    }
    auto w = causal_leq(a, b);
    if (w.holds) {
      ASSERT_TRUE(signal_between(a, *w.mid).has_value());
      ASSERT_TRUE(signal_between(*w.mid, b).has_value());
    }
  }
}

TEST(Ted, Examples) {
  Trace tr;
  EXPECT_TRUE(ted(axis(), ev(0, 0, 0, 0), ev(2, 0, 0, 0), ev(6, 0, 0, 0), ev(8, 0, 0, 0), &tr));
  EXPECT_EQ(tr["e"], to_json(ev(3, 3, 0, 0)));
  EXPECT_FALSE(ted(axis(), ev(0, 0, 0, 0), ev(2, 0, 0, 0), ev(6, 0, 0, 0), ev(9, 0, 0, 0)));
  EXPECT_TRUE(ted(axis(), ev(1, 0, 0, 0), ev(4, 0, 0, 0), ev(1, 0, 0, 0), ev(4, 0, 0, 0)));
  EXPECT_TRUE(ted(axis(), ev(6, 0, 0, 0), ev(8, 0, 0, 0), ev(0, 0, 0, 0), ev(2, 0, 0, 0)));
  EXPECT_EQ(kind_of([] { (void)ted(axis(), ev(0, 1, 0, 0), ev(1, 0, 0, 0), ev(2, 0, 0, 0), ev(3, 0, 0, 0)); }),
            ErrorKind::NotOnWorldline);
}

TEST(Field, PlusExamples) {
  Calibration c = unit_axis();
  auto at = [&](long long t) { return at_event(c, ev(t, 0, 0, 0)); };
  EXPECT_EQ(plus(at(2), at(3)).carrier, ev(5, 0, 0, 0));
  EXPECT_EQ(plus(at(2), at(0)).carrier, ev(2, 0, 0, 0));
  EXPECT_EQ(plus(at(-4), at(3)).carrier, ev(-1, 0, 0, 0));
  EXPECT_EQ(plus(at(3), at(-7)).carrier, plus(at(-7), at(3)).carrier);
}

TEST(Field, TimesExamples) {
  Calibration c = unit_axis();
  auto at = [&](long long t) { return at_event(c, ev(t, 0, 0, 0)); };
  Trace tr;
  EXPECT_EQ(times(at(2), at(3), &tr).carrier, ev(6, 0, 0, 0));
  EXPECT_EQ(tr["case"], "defined case");
  EXPECT_TRUE(tr.contains("p") && tr.contains("q"));
  EXPECT_EQ(times(at(1), at(3)).carrier, ev(3, 0, 0, 0));
  Trace ext;
  EXPECT_EQ(times(at(-2), at(3), &ext).carrier, ev(-6, 0, 0, 0));
  EXPECT_NE(ext["case"].get<std::string>().find("extended"), std::string::npos);
  EXPECT_EQ(times(at_event(c, {q(1, 2), q(0), q(0), q(0)}), at(-4)).carrier, ev(-2, 0, 0, 0));
  EXPECT_EQ(div(at(6), at(3)).carrier, ev(2, 0, 0, 0));
  EXPECT_EQ(kind_of([&] { (void)div(at(6), at(0)); }), ErrorKind::DivisionByZero);
}

TEST(Field, TimesOnMovingExperimenter) {
  Particle a = moving(q(3, 5));
  Calibration c{a, a.at(q(1)), a.at(q(3))};
  FieldPoint x = field_point(c, q(5, 2)), y = field_point(c, q(-3, 4));
  EXPECT_EQ(field_value(times(x, y)), q(-15, 8));
  EXPECT_EQ(field_value(plus(x, y)), q(7, 4));
}

TEST(Field, OrderedFieldLaws) {
  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    Calibration c = fixtures::random_calibration(rng);
    FieldPoint x = fixtures::random_point(rng, c), y = fixtures::random_point(rng, c);
    FieldPoint z = fixtures::random_point(rng, c);
    ASSERT_EQ(plus(x, y).carrier, plus(y, x).carrier);
    ASSERT_EQ(plus(plus(x, y), z).carrier, plus(x, plus(y, z)).carrier);
    ASSERT_EQ(times(x, y).carrier, times(y, x).carrier);
    ASSERT_EQ(times(x, plus(y, z)).carrier, plus(times(x, y), times(x, z)).carrier);
  }
}

TEST(Space, ColExamples) {
  Trace tr;
  EXPECT_TRUE(col(rest(0, 0, 0), rest(1, 0, 0), rest(2, 0, 0), &tr));
  EXPECT_TRUE(tr.contains("order"));
  EXPECT_FALSE(col(rest(0, 0, 0), rest(1, 0, 0), rest(1, 1, 0)));
  EXPECT_TRUE(col(rest(3, 4, 0), rest(3, 4, 0), rest(-1, 7, 2)));
  EXPECT_TRUE(col(rest(2, 0, 0), rest(0, 0, 0), rest(1, 0, 0)));
  Location other = Location::at(moving(q(1, 2)), ev(0, 0, 0, 0));
  EXPECT_EQ(kind_of([&] { (void)col(rest(0, 0, 0), rest(1, 0, 0), other); }), ErrorKind::AnchorMismatch);
}

TEST(Space, BwEdExamples) {
  EXPECT_TRUE(bw(rest(0, 0, 0), rest(1, 0, 0), rest(2, 0, 0)));
  EXPECT_FALSE(bw(rest(0, 0, 0), rest(2, 0, 0), rest(1, 0, 0)));
  EXPECT_TRUE(bw(rest(1, 1, 1), rest(1, 1, 1), rest(1, 1, 1)));
  EXPECT_TRUE(ed(rest(0, 0, 0), rest(1, 0, 0), rest(0, 1, 0), rest(1, 1, 0)));
  EXPECT_FALSE(ed(rest(0, 0, 0), rest(1, 0, 0), rest(0, 0, 0), rest(1, 1, 0)));
}

TEST(Space, PaExamples) {
  EXPECT_TRUE(pa(rest(0, 0, 0), rest(1, 0, 0), rest(0, 2, 0), rest(3, 2, 0)));
  EXPECT_FALSE(pa(rest(0, 0, 0), rest(1, 0, 0), rest(0, 0, 0), rest(0, 1, 0)));
  EXPECT_TRUE(pa(rest(1, 2, 3), rest(2, 0, 1), rest(1, 2, 3), rest(2, 0, 1)));
  EXPECT_EQ(kind_of([] { (void)pa(rest(1, 0, 0), rest(1, 0, 0), rest(0, 0, 0), rest(0, 1, 0)); }),
            ErrorKind::DegenerateLine);
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    Particle a = fixtures::random_particle(rng);
    Location l1 = fixtures::random_location(rng, a), l2 = fixtures::random_location(rng, a);
    Location l3 = fixtures::random_location(rng, a);
    Location l4 = i % 2 ? fixtures::random_location(rng, a)
                        : Location::at(a, l3.position() + rng.scalar(0.5, 2, Backend::approx) * (l2.position() - l1.position()));
    ASSERT_EQ(pa(l1, l2, l3, l4), pa_oracle(l1, l2, l3, l4));
  }
}

TEST(Space, DdExamples) {
  Calibration c = unit_axis();
  Trace tr;
  EXPECT_EQ(dd(c, Location::origin(axis()), rest(3, 4, 0), &tr).carrier, ev(5, 0, 0, 0));
  EXPECT_FALSE(tr.contains("promoted"));
  EXPECT_EQ(dd(c, rest(1, 1, 1), rest(1, 1, 1)).carrier, ev(0, 0, 0, 0));
  EXPECT_EQ(dd(c, rest(1, 2, 0), rest(4, 6, 0)).carrier, ev(5, 0, 0, 0));
  EXPECT_EQ(dd(c, rest(4, 6, 0), rest(1, 2, 0)).carrier, ev(5, 0, 0, 0));
  Calibration slow{axis(), ev(1, 0, 0, 0), ev(3, 0, 0, 0)};
  EXPECT_EQ(field_value(dd(slow, Location::origin(axis()), rest(3, 4, 0))), q(5, 2));
  // Irrational distances fall back to the approximate backend.
  Trace tr2;
  FieldPoint r2 = dd(c, rest(0, 0, 0), rest(1, 1, 0), &tr2);
  EXPECT_TRUE(tr2.value("promoted", false));
  EXPECT_EQ(field_value(r2), Scalar::approx(sqrt(Real(2))));
}

TEST(Space, DdSymmetry) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    Calibration c = fixtures::random_calibration(rng);
    Location b1 = fixtures::random_location(rng, c.a), b2 = fixtures::random_location(rng, c.a);
    ASSERT_EQ(dd(c, b1, b2).carrier, dd(c, b2, b1).carrier);
  }
}

TEST(Space, OrtExamples) {
  Trace tr;
  EXPECT_TRUE(ort(rest(0, 0, 0), rest(1, 0, 0), rest(0, 1, 0), &tr));
  EXPECT_EQ(tr["b'"], to_json(rest(-1, 0, 0).place));
  EXPECT_FALSE(ort(rest(0, 0, 0), rest(1, 0, 0), rest(1, 1, 0)));
  Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    Particle a = fixtures::random_particle(rng);
    Location la = fixtures::random_location(rng, a), lb = fixtures::random_location(rng, a);
    Location lc = fixtures::random_location(rng, a);
    ASSERT_EQ(ort(la, lb, lc), ort(la, lc, lb));
  }
}

TEST(TimeCoord, Examples) {
  Calibration c = unit_axis();
  EXPECT_EQ(time_coord(c, ev(3, 7, 0, 0)).carrier, ev(3, 0, 0, 0));
  EXPECT_EQ(time_coord(c, ev(-2, 0, 0, 0)).carrier, ev(-2, 0, 0, 0));
  Particle a = moving(q(3, 5));
  Calibration b{a, ev(0, 0, 0, 0), a.at(q(5, 4))};
  FieldPoint t = time_coord(b, ev(5, 3, 0, 0));
  EXPECT_EQ(field_value(t), q(4));
}

Frame identity_frame() {
  Particle a = axis();
  return {a, ev(0, 0, 0, 0), ev(1, 0, 0, 0), Particle::make(ev(0, 1, 0, 0), kRest),
          Particle::make(ev(0, 0, 1, 0), kRest), Particle::make(ev(0, 0, 0, 1), kRest)};
}

TEST(Cord, Examples) {
  auto id = cord_values(identity_frame(), ev(2, 3, 4, 0));
  EXPECT_EQ(id, (std::array<Scalar, 4>{q(2), q(3), q(4), q(0)}));
  auto neg = cord_values(identity_frame(), ev(2, -3, 4, -1));
  EXPECT_EQ(neg, (std::array<Scalar, 4>{q(2), q(-3), q(4), q(-1)}));
  Frame boosted = standard_frame(moving(q(3, 5)), ev(0, 0, 0, 0), q(1));
  Trace tr;
  auto b = cord_values(boosted, ev(5, 3, 0, 0), &tr);
  EXPECT_EQ(b, (std::array<Scalar, 4>{q(4), q(0), q(0), q(0)}));
  for (const auto& s : b) EXPECT_TRUE(s.is_exact());
  EXPECT_FALSE(tr.contains("promoted"));
  auto o = cord_values(boosted, ev(0, 0, 0, 0));
  EXPECT_EQ(o, (std::array<Scalar, 4>{q(0), q(0), q(0), q(0)}));
}

TEST(Cord, MatchesPoincareOnRationalBoost) {
  Particle a = moving(q(3, 5));
  Frame f = standard_frame(a, a.at(q(1)), q(2));
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    Event e = rng.event(4, Backend::exact);
    ASSERT_EQ(cord_values(f, e), poincare_to_frame(f, e));
  }
}

TEST(Mu, Examples) {
  Particle a = axis();
  EXPECT_EQ(mu(a, ev(0, 0, 0, 0), ev(0, 0, 0, 0), ev(5, 3, 0, 0)), ev(4, 0, 0, 0));
  EXPECT_EQ(mu(a, ev(0, 0, 0, 0), ev(2, 1, 1, 1), ev(2, 1, 1, 1)), ev(0, 0, 0, 0));
  EXPECT_EQ(mu(a, ev(0, 0, 0, 0), ev(5, 3, 0, 0), ev(0, 0, 0, 0)), ev(-4, 0, 0, 0));
  EXPECT_EQ(kind_of([&] { (void)mu(a, ev(0, 0, 0, 0), ev(0, 0, 0, 0), ev(1, 1, 0, 0)); }), ErrorKind::NotTimelike);
  EXPECT_EQ(kind_of([&] { (void)mu(a, ev(0, 0, 0, 0), ev(0, 0, 0, 0), ev(0, 2, 0, 0)); }), ErrorKind::NotTimelike);
}

TEST(Med, Examples) {
  EXPECT_TRUE(med(ev(0, 0, 0, 0), ev(5, 3, 0, 0), ev(0, 0, 0, 0), ev(4, 0, 0, 0)));
  EXPECT_FALSE(med(ev(0, 0, 0, 0), ev(2, 0, 0, 0), ev(0, 0, 0, 0), ev(3, 0, 0, 0)));
  EXPECT_TRUE(med(ev(1, 2, 3, 4), ev(7, 2, 3, 4), ev(1, 2, 3, 4), ev(7, 2, 3, 4)));
}

TEST(Iso, Examples) {
  Calibration from = unit_axis();
  Calibration to{axis(), ev(0, 0, 0, 0), ev(2, 0, 0, 0)};
  EXPECT_EQ(iso(to, at_event(from, ev(3, 0, 0, 0))).carrier, ev(6, 0, 0, 0));
  EXPECT_EQ(iso(to, at_event(from, from.o)).carrier, to.o);
  EXPECT_EQ(iso(to, at_event(from, from.u)).carrier, to.u);
}

class Sweep : public ::testing::TestWithParam<int> {};

TEST_P(Sweep, AgreesWithOracle) {
  auto t = sweeps::by_index(GetParam(), 200, 1);
  EXPECT_EQ(t.agree, t.total) << t.name << (t.failures.empty() ? "" : ": " + t.failures.front());
  EXPECT_GE(t.total, 200);
}

INSTANTIATE_TEST_SUITE_P(Signalling, Sweep, ::testing::Range(0, 12));

}  // namespace
}  // namespace sigrel
