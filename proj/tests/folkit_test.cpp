// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "formulas.hpp"
#include "sigrel/folkit.hpp"

namespace sigrel::folkit {
namespace {

Signature sigth() {
  return {{"Par", "Sig"}, {{"T", {"Par", "Sig"}}, {"R", {"Par", "Sig"}}}};
}

Signature lines_source() { return lines_spec().source; }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ConfigError;
}

// Parsing and sorts

TEST(Parse, EventDefinitionBody) {
  Formula f = parse("(forall (a Par) (-> (T a s) (R a s)))", sigth());
  EXPECT_EQ(f->op, Op::forall);
  EXPECT_EQ(f->binders[0].sort, "Par");
  EXPECT_EQ(to_text(f), "∀a (T(a,s) → R(a,s))");
  EXPECT_EQ(typecheck(sigth(), f).free.at("s"), "Sig");
}

TEST(Parse, ExistsWithEquality) {
  Signature sig = points_signature();
  Formula f = parse("(exists (x Points) (= x x))", sig);
  EXPECT_EQ(f->kids[0]->op, Op::eq);
  EXPECT_EQ(f->kids[0]->sort, "Points");
}

TEST(Parse, SwappedSortsAreRejected) {
  EXPECT_EQ(kind_of([] { parse("(T s a)", sigth(), {{"s", "Sig"}, {"a", "Par"}}); }), ErrorKind::SortError);
}

TEST(Parse, InconsistentUseIsRejected) {
  EXPECT_EQ(kind_of([] { parse("(and (T a s) (T s a))", sigth()); }), ErrorKind::SortError);
}

TEST(Parse, BoundVariableSortIsEnforced) {
  EXPECT_EQ(kind_of([] { parse("(exists (a Sig) (T a s))", sigth()); }), ErrorKind::SortError);
}

TEST(Parse, UnknownRelationAndArity) {
  EXPECT_EQ(kind_of([] { parse("(Q a)", sigth()); }), ErrorKind::SortError);
  EXPECT_EQ(kind_of([] { parse("(T a)", sigth()); }), ErrorKind::SortError);
}

TEST(Parse, SyntaxErrorsCarryPositions) {
  try {
    parse_raw("(and (T a s)\n  (R a s)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
    EXPECT_NE(std::string(e.what()).find("1:1"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([] { parse_raw("(T a s))"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse_raw("(exists x (T x s))"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse_raw(""); }), ErrorKind::SyntaxError);
}

TEST(Parse, CommentsAndMultiBinders) {
  Formula f = parse("; two points\n(forall ((x Points) (y Points)) (Col x y y))", points_signature());
  EXPECT_EQ(f->binders.size(), 2u);
}

TEST(Parse, PrintedFormRoundTrips) {
  const char* texts[] = {
      "(forall (a Par) (-> (T a s) (R a s)))",
      "(exists ((a Par) (b Par)) (and (not (= a b)) (T a s) (T b s)))",
      "(<-> (or (T a s) false) (R a s))",
  };
  for (const char* t : texts) EXPECT_EQ(to_sexpr(parse(t, sigth())), t);
}

TEST(Formula, ConjunctionsFlatten) {
  Formula f = conj({atom("R", {"a"}), conj({atom("R", {"b"}), atom("R", {"c"})})});
  EXPECT_EQ(f->kids.size(), 3u);
}

TEST(Formula, AlphaEquivalence) {
  Signature sig = points_signature();
  EXPECT_TRUE(alpha_equivalent(parse("(exists (x Points) (Col x y z))", sig), parse("(exists (w Points) (Col w y z))", sig)));
  EXPECT_FALSE(alpha_equivalent(parse("(exists (x Points) (Col x y z))", sig), parse("(exists (y Points) (Col y y z))", sig)));
}

// Translation

TEST(Translate, Incidence) {
  Formula f = translate(lines_spec(), parse("(I x l)", lines_source()));
  EXPECT_EQ(to_text(f), "Col(x,l_p,l_q)");
}

TEST(Translate, LineEquality) {
  Formula f = translate(lines_spec(), parse("(= l h)", lines_source(), {{"l", "Lines"}, {"h", "Lines"}}));
  EXPECT_EQ(to_text(f), "Col(l_p,h_p,h_q), Col(l_q,h_p,h_q)");
}

TEST(Translate, ExistentialOverLines) {
  Formula f = translate(lines_spec(), parse("(exists (l Lines) (I x l))", lines_source()));
  EXPECT_EQ(to_text(f), "∃l_p,l_q (l_p ≠ l_q, Col(x,l_p,l_q))");
  EXPECT_EQ(to_sexpr(f), "(exists ((l_p Points) (l_q Points)) (and (not (= l_p l_q)) (Col x l_p l_q)))");
}

TEST(Translate, UniversalOverLinesIsGuarded) {
  Formula f = translate(lines_spec(), parse("(forall (l Lines) (I x l))", lines_source()));
  EXPECT_EQ(to_text(f), "∀l_p,l_q (l_p ≠ l_q → Col(x,l_p,l_q))");
}

TEST(Translate, GeneratedNamesAvoidCapture) {
  // A point variable already named l_p: the matched names of l must differ.
  Formula f = translate(lines_spec(), parse("(exists (l_p Points) (I l_p l))", lines_source()));
  EXPECT_EQ(to_text(f), "∃l_p Col(l_p,l_p1,l_q)");
  EXPECT_EQ(free_matching(lines_spec(), parse("(exists (l_p Points) (I l_p l))", lines_source())).at("l"),
            (std::vector<std::string>{"l_p1", "l_q"}));
}

TEST(Translate, ShadowedLineVariables) {
  Formula f = translate(lines_spec(), parse("(and (I x l) (exists (l Lines) (I y l)))", lines_source()));
  EXPECT_EQ(to_text(f), "Col(x,l_p,l_q), (∃l_p1,l_q1 (l_p1 ≠ l_q1, Col(y,l_p1,l_q1)))");
}

TEST(Translate, IsStructural) {
  InterpretationSpec spec = lines_spec();
  Signature src = lines_source();
  Formula a = parse("(I x l)", src), b = parse("(= l h)", src, {{"l", "Lines"}, {"h", "Lines"}});
  EXPECT_TRUE(alpha_equivalent(translate(spec, neg(a)), neg(translate(spec, a))));
  Formula both = translate(spec, conj({a, b}));
  EXPECT_TRUE(alpha_equivalent(both, conj({translate(spec, a), translate(spec, b)})));
  EXPECT_TRUE(typecheck(spec.target, both).free.size() == 5);
}

TEST(Translate, RenamedBoundVariablesGiveAlphaEquivalentResults) {
  InterpretationSpec spec = lines_spec();
  Formula a = translate(spec, parse("(forall (x Points) (exists (l Lines) (I x l)))", lines_source()));
  Formula b = translate(spec, parse("(forall (z Points) (exists (k Lines) (I z k)))", lines_source()));
  EXPECT_TRUE(alpha_equivalent(a, b));
}

TEST(Translate, MissingDefinition) {
  InterpretationSpec spec = lines_spec();
  spec.relations.clear();
  EXPECT_EQ(kind_of([&] { translate(spec, parse("(I x l)", spec.source)); }), ErrorKind::MissingDefinition);
}

TEST(Spec, JsonRoundTrip) {
  InterpretationSpec spec = lines_spec();
  nlohmann::json j = to_json(spec);
  InterpretationSpec back = spec_from_json(j);
  EXPECT_EQ(to_json(back), j);
}

TEST(Spec, DefinitionsAreValidated) {
  nlohmann::json j = nlohmann::json::parse(kLinesSpecJson);
  j["relations"]["I"]["formula"] = "(Col p l_p z)";
  EXPECT_EQ(kind_of([&] { spec_from_json(j); }), ErrorKind::SortError);
}

// Definitional extension

TEST(Delta, LinesSentencesMatchThePrintedOnes) {
  auto ds = delta_sentences(lines_spec());
  ASSERT_EQ(ds.size(), 4u);
  EXPECT_EQ(to_text(ds[0]), "(∃p,q (pi_Lines(p,q,l), pi_Lines(p,q,l'))) ↔ l = l'");
  EXPECT_EQ(to_text(ds[1]), "(∃l (pi_Lines(p,q,l), pi_Lines(p',q',l))) ↔ (Col(p',p,q), Col(q',p,q))");
  EXPECT_EQ(to_text(ds[2]), "(∃l pi_Lines(p,q,l)) ↔ p ≠ q");
  EXPECT_EQ(to_text(ds[3]), "I(p,l) ↔ (∃p',q' (pi_Lines(p',q',l), Col(p,p',q')))");
}

TEST(Delta, GuardedSentences) {
  auto ds = delta_sentences(lines_spec(), DeltaForm::guarded);
  ASSERT_EQ(ds.size(), 4u);
  EXPECT_EQ(to_text(ds[1]),
            "∀p,p',q,q' ((p ≠ q, p' ≠ q') → ((∃l (pi_Lines(p,q,l), pi_Lines(p',q',l))) ↔ (Col(p',p,q), Col(q',p,q))))");
}

TEST(Delta, NoNewSortsGivesOnlyBiconditionals) {
  nlohmann::json j = {{"name", "copy"},
                      {"source", {{"sorts", {"Points"}}, {"relations", {{"C", {"Points", "Points", "Points"}}}}}},
                      {"target", to_json(points_signature())},
                      {"sorts", {{"Points", {{"target", "Points"}}}}},
                      {"relations", {{"C", {{"params", {"a", "b", "c"}}, {"formula", "(Col a b c)"}}}}}};
  auto ds = delta_sentences(spec_from_json(j), DeltaForm::guarded);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(to_text(ds[0]), "∀a,b,c (C(a,b,c) ↔ Col(a,b,c))");
}

TEST(Delta, GuardedSentencesHoldInTheJointModel) {
  for (int q : {2, 3}) {
    InterpretationSpec spec = lines_spec();
    FiniteModel m = affine_plane(q);
    FiniteModel j = joint_model(spec, m, build_translated_model(spec, m));
    for (const auto& s : delta_sentences(spec, DeltaForm::guarded)) EXPECT_TRUE(eval(j, s)) << to_text(s);
  }
}

TEST(Delta, PrintedEqualityClauseFailsOffTheDomain) {
  // With p = q no line is coded, yet Col(p',p,p) holds for every p'.
  InterpretationSpec spec = lines_spec();
  FiniteModel m = affine_plane(3);
  FiniteModel j = joint_model(spec, m, build_translated_model(spec, m));
  auto ds = delta_sentences(spec);
  Signature joint = joint_signature(spec);
  EXPECT_TRUE(eval(j, universal_closure(joint, ds[0])));
  EXPECT_FALSE(eval(j, universal_closure(joint, ds[1])));
  EXPECT_TRUE(eval(j, universal_closure(joint, ds[2])));
  EXPECT_TRUE(eval(j, universal_closure(joint, ds[3])));
  EXPECT_FALSE(eval(j, ds[1], {{"p", 0}, {"q", 0}, {"p'", 1}, {"q'", 2}}));
}

// Evaluation and tr(M)

TEST(Eval, KnownCollinearTriple) {
  FiniteModel m = affine_plane(3);
  Formula f = parse("(Col a b c)", points_signature());
  // Points are numbered 3x + y: (0,0), (1,1), (2,2).
  EXPECT_TRUE(eval(m, f, {{"a", 0}, {"b", 4}, {"c", 8}}));
  EXPECT_FALSE(eval(m, f, {{"a", 0}, {"b", 4}, {"c", 5}}));
}

TEST(Eval, EqualityIsReflexive) {
  FiniteModel m = affine_plane(2);
  Formula f = parse("(= x x)", points_signature(), {{"x", "Points"}});
  for (int i = 0; i < 4; ++i) EXPECT_TRUE(eval(m, f, {{"x", i}}));
}

TEST(Eval, EmptyCarrier) {
  FiniteModel m;
  m.sig = {{"S"}, {}};
  m.carriers["S"] = {};
  EXPECT_FALSE(eval(m, parse("(exists (x S) (= x x))", m.sig)));
  EXPECT_TRUE(eval(m, parse("(forall (x S) (not (= x x)))", m.sig)));
}

TEST(Eval, UnassignedVariable) {
  FiniteModel m = affine_plane(2);
  EXPECT_EQ(kind_of([&] { eval(m, parse("(Col a b c)", points_signature()), {{"a", 0}}); }),
            ErrorKind::UnassignedVariable);
}

TEST(TranslatedModel, AffinePlaneLineCounts) {
  InterpretationSpec spec = lines_spec();
  TranslatedModel t3 = build_translated_model(spec, affine_plane(3));
  TranslatedModel t2 = build_translated_model(spec, affine_plane(2));
  EXPECT_EQ(t3.model.size("Lines"), 12u);
  EXPECT_EQ(t2.model.size("Lines"), 6u);
  // Every line of AG(2,3) has three points.
  for (int l = 0; l < 12; ++l) {
    int n = 0;
    for (int p = 0; p < 9; ++p) n += t3.model.relations.at("I").holds({p, l});
    EXPECT_EQ(n, 3);
  }
}

TEST(TranslatedModel, NonEquivalenceIsRejected) {
  nlohmann::json j = nlohmann::json::parse(kLinesSpecJson);
  j["sorts"]["Lines"]["equality"]["formula"] = "(Col l_p h_p h_q)";  // not symmetric
  EXPECT_EQ(kind_of([&] { build_translated_model(spec_from_json(j), affine_plane(3)); }), ErrorKind::NotEquivalence);
}

// Meaning preservation

using fixtures::lines_formulas;

TEST(Meaning, CommonLineOnAG23) {
  auto f = parse("(exists (l Lines) (and (I x l) (I y l)))", lines_source());
  MeaningReport r = meaning_preservation_check(lines_spec(), affine_plane(3), {f}, 100, 1);
  EXPECT_EQ(r.checks, 100);
  EXPECT_EQ(r.mismatches, 0);
}

TEST(Meaning, AtomicExhaustiveOnAG22) {
  auto f = parse("(I x l)", lines_source());
  MeaningReport r = meaning_preservation_exhaustive(lines_spec(), affine_plane(2), {f});
  EXPECT_EQ(r.checks, 4 * 6 * 2);
  EXPECT_EQ(r.mismatches, 0);
}

TEST(Meaning, ShallowFormulasExhaustive) {
  for (int q : {2, 3}) {
    auto fs = lines_formulas();
    for (const auto& f : fs) EXPECT_LE(quantifier_depth(f), 3);
    MeaningReport r = meaning_preservation_exhaustive(lines_spec(), affine_plane(q), fs);
    EXPECT_TRUE(r.ok()) << to_json(r).dump(2);
  }
}

TEST(Meaning, CorruptedSpecIsCaught) {
  auto fs = lines_formulas();
  MeaningReport exhaustive = meaning_preservation_exhaustive(corrupted_lines_spec(), affine_plane(3), fs);
  EXPECT_GT(exhaustive.mismatches, 0);
  MeaningReport sampled = meaning_preservation_check(corrupted_lines_spec(), affine_plane(3), fs, 50, 2);
  EXPECT_GT(sampled.mismatches, 0);
  ASSERT_FALSE(sampled.witnesses.empty());
  EXPECT_TRUE(sampled.witnesses[0].contains("tr_k"));
}

TEST(Meaning, SquareCommutesForSentences) {
  InterpretationSpec spec = lines_spec();
  FiniteModel m = affine_plane(3);
  TranslatedModel tm = build_translated_model(spec, m);
  for (const auto& f : lines_formulas()) {
    if (!free_vars(f).empty()) continue;
    EXPECT_EQ(eval(tm.model, f), eval(m, translate(spec, f))) << to_text(f);
  }
}

}  // namespace
}  // namespace sigrel::folkit
