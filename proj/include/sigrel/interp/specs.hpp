// SPDX-License-Identifier: Apache-2.0
// The two concrete interpretations as data: tr defines the quantities and
// bodies of SpecRel over signalling theory, Tr defines particles and signals
// over SpecRel. Also the formula sets kept as golden files.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sigrel/folkit.hpp"

namespace sigrel::interp {

using folkit::Formula;
using folkit::InterpretationSpec;

/// tr: SpecRel0 into signalling theory. The target is the language of
/// signalling theory together with the predicates of the coordinatization
/// algorithm. The short ones are macros over T and R. The field operations,
/// the field isomorphism, the coordinate relation, parallelism and
/// orthogonality are primitive here and interpreted geometrically. Variables
/// standing for events carry an explicit Ev guard.
inline constexpr const char* kTrSpecJson = R"json({
  "name": "tr",
  "source": {
    "sorts": ["Q", "B"],
    "relations": {
      "+": ["Q", "Q", "Q"],
      "*": ["Q", "Q", "Q"],
      "Ph": ["B"],
      "Obs": ["B"],
      "W": ["B", "B", "Q", "Q", "Q", "Q"]
    }
  },
  "target": {
    "sorts": ["Par", "Sig"],
    "relations": {
      "T": ["Par", "Sig"],
      "R": ["Par", "Sig"],
      "Ev": ["Sig"],
      "Beg": ["Sig", "Sig"],
      "End": ["Sig", "Sig"],
      "Prec": ["Sig", "Sig"],
      "Parallel": ["Par", "Par"],
      "Ort": ["Par", "Par", "Par", "Par"],
      "Fp": ["Par", "Sig", "Sig"],
      "Op": ["Par", "Sig", "Sig", "Par", "Par", "Par"],
      "Iso": ["Sig", "Sig", "Par", "Sig", "Sig", "Par", "Sig", "Sig"],
      "Plus": ["Sig", "Sig", "Sig", "Par", "Sig"],
      "Times": ["Sig", "Sig", "Sig", "Par", "Sig", "Sig"],
      "Cord": ["Sig", "Sig", "Sig", "Sig", "Sig", "Par", "Sig", "Sig", "Par", "Par", "Par"],
      "CordEq": ["Sig", "Par", "Sig", "Sig", "Par", "Par", "Par", "Par", "Sig", "Sig", "Par", "Par", "Par"],
      "lambda": ["Sig", "Sig", "Sig"],
      "wl": ["Sig", "Sig"]
    }
  },
  "macros": {
    "Ev": {"params": [["e", "Sig"]], "formula": "(forall (a Par) (-> (T a e) (R a e)))"},
    "Beg": {"params": [["s", "Sig"], ["e", "Sig"]], "formula": "(forall (b Par) (-> (T b s) (T b e)))"},
    "End": {"params": [["s", "Sig"], ["e", "Sig"]], "formula": "(forall (b Par) (-> (R b s) (R b e)))"},
    "Prec": {"params": [["e", "Sig"], ["e'", "Sig"]],
             "formula": "(exists ((e'' Sig) (s1 Sig) (s2 Sig)) (and (Ev e'') (Beg s1 e) (End s1 e'') (Beg s2 e'') (End s2 e')))"},
    "Fp": {"params": [["a", "Par"], ["o", "Sig"], ["u", "Sig"]],
           "formula": "(and (Ev o) (Ev u) (!= o u) (Prec o u) (T a o) (T a u))"},
    "Op": {"params": [["a", "Par"], ["o", "Sig"], ["u", "Sig"], ["ax", "Par"], ["ay", "Par"], ["az", "Par"]],
           "formula": "(and (Fp a o u) (Parallel a ax) (Parallel a ay) (Parallel a az) (Ort a ax a ay) (Ort a ax a az) (Ort a ay a az))"},
    "CordEq": {"params": [["e", "Sig"], ["a", "Par"], ["o", "Sig"], ["u", "Sig"], ["ax", "Par"], ["ay", "Par"], ["az", "Par"],
                          ["a'", "Par"], ["o'", "Sig"], ["u'", "Sig"], ["ax'", "Par"], ["ay'", "Par"], ["az'", "Par"]],
               "formula": "(exists ((t Sig) (x Sig) (y Sig) (z Sig) (t' Sig) (x' Sig) (y' Sig) (z' Sig)) (and (Cord e t x y z a o u ax ay az) (Cord e t' x' y' z' a' o' u' ax' ay' az') (Iso t t' a o u a' o' u') (Iso x x' a o u a' o' u') (Iso y y' a o u a' o' u') (Iso z z' a o u a' o' u')))"},
    "lambda": {"params": [["e1", "Sig"], ["e2", "Sig"], ["e3", "Sig"]],
               "formula": "(and (exists (s Sig) (and (Beg s e1) (End s e1))) (exists (s Sig) (or (and (Beg s e1) (End s e2)) (and (Beg s e2) (End s e1)))) (exists (s Sig) (or (and (Beg s e1) (End s e3)) (and (Beg s e3) (End s e1)))) (exists (s Sig) (and (Beg s e2) (End s e2))) (exists (s Sig) (or (and (Beg s e2) (End s e3)) (and (Beg s e3) (End s e2)))) (exists (s Sig) (and (Beg s e3) (End s e3))))"},
    "wl": {"params": [["e", "Sig"], ["s", "Sig"]],
           "formula": "(exists ((e1 Sig) (e2 Sig)) (and (Ev e1) (Ev e2) (lambda e e1 e2) (Beg s e1) (End s e2)))"}
  },
  "sorts": {
    "Q": {
      "matching": [["x", "Sig"], ["a", "Par"], ["o", "Sig"], ["u", "Sig"]],
      "domain": {"params": ["q"], "formula": "(and (T q_a q_x) (Ev q_x) (Fp q_a q_o q_u))"},
      "equality": {"params": ["q", "q'"], "formula": "(Iso q_x q'_x q_a q_o q_u q'_a q'_o q'_u)"}
    },
    "B": {
      "matching": [["s", "Sig"], ["a", "Par"], ["o", "Sig"], ["u", "Sig"], ["x", "Par"], ["y", "Par"], ["z", "Par"]],
      "domain": {"params": ["b"], "formula": "(or (not (Ev b_s)) (and (Ev b_s) (Op b_a b_o b_u b_x b_y b_z)))"},
      "equality": {"params": ["b", "b'"],
                   "formula": "(or (and (not (Ev b_s)) (not (Ev b'_s)) (forall (e Sig) (-> (Ev e) (<-> (wl e b_s) (wl e b'_s))))) (and (Ev b_s) (Ev b'_s) (forall (e Sig) (-> (Ev e) (CordEq e b_a b_o b_u b_x b_y b_z b'_a b'_o b'_u b'_x b'_y b'_z)))))"}
    }
  },
  "relations": {
    "+": {"params": ["q", "q1", "q2"],
          "formula": "(exists ((r1 Sig) (r2 Sig)) (and (Iso r1 q1_x q_a q_o q_u q1_a q1_o q1_u) (Iso r2 q2_x q_a q_o q_u q2_a q2_o q2_u) (Plus q_x r1 r2 q_a q_o)))"},
    "*": {"params": ["q", "q1", "q2"],
          "formula": "(exists ((r1 Sig) (r2 Sig)) (and (Iso r1 q1_x q_a q_o q_u q1_a q1_o q1_u) (Iso r2 q2_x q_a q_o q_u q2_a q2_o q2_u) (Times q_x r1 r2 q_a q_o q_u)))"},
    "Ph": {"params": ["b"], "formula": "(not (Ev b_s))"},
    "Obs": {"params": ["b"], "formula": "(and (Ev b_s) (Op b_a b_o b_u b_x b_y b_z))"},
    "W": {"params": ["m", "b", "t", "x", "y", "z"],
          "formula": "(exists ((e Sig) (mt Sig) (mx Sig) (my Sig) (mz Sig)) (and (Iso mt t_x m_a m_o m_u t_a t_o t_u) (Iso mx x_x m_a m_o m_u x_a x_o x_u) (Iso my y_x m_a m_o m_u y_a y_o y_u) (Iso mz z_x m_a m_o m_u z_a z_o z_u) (Cord e mt mx my mz m_a m_o m_u m_x m_y m_z) (-> (not (Ev b_s)) (wl e b_s)) (-> (Ev b_s) (T b_a e)) (Ev m_s)))"}
  }
})json";

/// Tr: signalling theory into SpecRel0 with the completeness axioms. Zero
/// and the ordering are the field's definable ones; Meet and meet are the
/// abbreviations used for signals.
inline constexpr const char* kTrInverseSpecJson = R"json({
  "name": "Tr",
  "source": {
    "sorts": ["Par", "Sig"],
    "relations": {"T": ["Par", "Sig"], "R": ["Par", "Sig"]}
  },
  "target": {
    "sorts": ["Q", "B"],
    "relations": {
      "+": ["Q", "Q", "Q"],
      "*": ["Q", "Q", "Q"],
      "Ph": ["B"],
      "Obs": ["B"],
      "W": ["B", "B", "Q", "Q", "Q", "Q"],
      "Zero": ["Q"],
      "Leq": ["Q", "Q"],
      "Meet": ["B", "B", "B", "Q"],
      "meet": ["B", "B", "B"]
    }
  },
  "macros": {
    "Zero": {"params": [["q", "Q"]], "formula": "(+ q q q)"},
    "Leq": {"params": [["t", "Q"], ["t'", "Q"]], "formula": "(exists ((d Q) (s Q)) (and (* s d d) (+ t' t s)))"},
    "Meet": {"params": [["b", "B"], ["p", "B"], ["a", "B"], ["t", "Q"]],
             "formula": "(exists ((x Q) (y Q) (z Q)) (and (W b p t x y z) (W b a t x y z)))"},
    "meet": {"params": [["a", "B"], ["p", "B"], ["e", "B"]],
             "formula": "(exists ((b B) (t Q)) (and (Meet b a p t) (Meet b a e t)))"}
  },
  "sorts": {
    "Par": {
      "matching": [["b", "B"]],
      "domain": {"params": ["a"], "formula": "(Obs a_b)"},
      "equality": {"params": ["a", "a'"],
                   "formula": "(forall ((t Q) (x Q) (y Q) (z Q)) (<-> (W a_b a'_b t x y z) (and (Zero x) (Zero y) (Zero z))))"}
    },
    "Sig": {
      "matching": [["b", "B"], ["p", "B"], ["e", "B"]],
      "domain": {"params": ["s"],
                 "formula": "(and (Ph s_p) (Obs s_b) (Obs s_e) (exists ((t Q) (t' Q)) (and (Leq t t') (Meet s_b s_p s_b t) (Meet s_b s_p s_e t'))))"},
      "equality": {"params": ["s", "s'"],
                   "formula": "(and (meet s_b s'_b s_p) (meet s_e s'_e s_p) (-> (not (meet s_b s_p s_e)) (= s_p s'_p)))"}
    }
  },
  "relations": {
    "T": {"params": ["a", "s"], "formula": "(meet a_b s_b s_p)"},
    "R": {"params": ["a", "s"], "formula": "(meet a_b s_e s_p)"}
  }
})json";

inline InterpretationSpec tr_spec() { return folkit::spec_from_json(nlohmann::json::parse(kTrSpecJson)); }
inline InterpretationSpec Tr_spec() { return folkit::spec_from_json(nlohmann::json::parse(kTrInverseSpecJson)); }

/// The axioms of SpecRel0 in the source language of tr. AxFd is represented
/// by commutativity of addition and the existence of square roots.
inline std::vector<std::pair<std::string, std::string>> specrel0_axioms() {
  return {
      {"AxPh",
       "(forall ((m B) (p B) (t Q) (x Q) (y Q) (z Q) (t' Q) (x' Q) (y' Q) (z' Q)) "
       "(-> (and (Obs m) (Ph p) (W m p t x y z) (W m p t' x' y' z')) "
       "(exists ((dt Q) (dx Q) (dy Q) (dz Q) (st Q) (sx Q) (sy Q) (sz Q) (s1 Q)) "
       "(and (+ t' t dt) (+ x' x dx) (+ y' y dy) (+ z' z dz) (* st dt dt) (* sx dx dx) (* sy dy dy) (* sz dz dz) "
       "(+ s1 sx sy) (+ st s1 sz)))))"},
      {"AxEv",
       "(forall ((m B) (k B)) (-> (and (Obs m) (Obs k)) (forall ((t Q) (x Q) (y Q) (z Q)) "
       "(exists ((t' Q) (x' Q) (y' Q) (z' Q)) (forall (b B) (<-> (W m b t x y z) (W k b t' x' y' z')))))))"},
      {"AxSelf",
       "(forall (m B) (-> (Obs m) (forall ((t Q) (x Q) (y Q) (z Q)) "
       "(<-> (W m m t x y z) (exists (o Q) (and (+ o o o) (= x o) (= y o) (= z o)))))))"},
      {"AxFd.comm", "(forall ((q Q) (r Q) (s Q)) (<-> (+ s q r) (+ s r q)))"},
      {"AxFd.sqrt",
       "(forall (q Q) (exists ((r Q) (n Q) (o Q)) (and (+ o o o) (+ o q n) (or (* q r r) (* n r r)))))"},
  };
}

// ---------------------------------------------------------------------------
// Golden formula sets

using GoldenSet = std::vector<std::pair<std::string, std::string>>;

/// Renders each definition of a spec as "head :<=> body".
inline GoldenSet definition_lines(const InterpretationSpec& spec) {
  GoldenSet out;
  auto head = [](const std::string& r, const std::vector<std::string>& ps) {
    std::string s = r + "(";
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + ps[i];
    return s + ")";
  };
  for (const auto& d : spec.sorts) {
    if (!d.is_new()) continue;
    out.push_back({d.name + "(" + d.domain.params[0] + ")", folkit::to_text(d.domain.formula)});
    out.push_back({d.equality.params[0] + " = " + d.equality.params[1], folkit::to_text(d.equality.formula)});
  }
  for (const auto& [r, def] : spec.relations) out.push_back({head(r, def.params), folkit::to_text(def.formula)});
  for (const auto& [r, mac] : spec.macros) {
    std::vector<std::string> ps;
    for (const auto& b : mac.params) ps.push_back(b.var);
    out.push_back({head(r, ps), folkit::to_text(mac.formula)});
  }
  return out;
}

/// The three translation clauses of the affine-plane example.
inline GoldenSet lines_clauses() {
  InterpretationSpec spec = folkit::lines_spec();
  auto line = [&](const char* text, folkit::SortMap ctx = {}) {
    return folkit::to_text(folkit::translate(spec, folkit::parse(text, spec.source, ctx), ctx));
  };
  return {
      {"tr(exists l I(x,l))", line("(exists (l Lines) (I x l))")},
      {"tr(l = h)", line("(= l h)", {{"l", "Lines"}, {"h", "Lines"}})},
      {"tr(I(x,l))", line("(I x l)")},
  };
}

/// Delta(Lines, pi) and Delta(I) in the printed form.
inline GoldenSet lines_delta() {
  GoldenSet out;
  int i = 0;
  for (const auto& f : folkit::delta_sentences(folkit::lines_spec())) {
    out.push_back({"delta." + std::to_string(++i), folkit::to_text(f)});
  }
  return out;
}

/// tr applied to the SpecRel0 axioms.
inline GoldenSet tr_axioms() {
  InterpretationSpec spec = tr_spec();
  GoldenSet out;
  for (const auto& [name, text] : specrel0_axioms()) {
    out.push_back({"tr(" + name + ")", folkit::to_text(folkit::translate(spec, folkit::parse(text, spec.source)))});
  }
  return out;
}

inline std::vector<std::string> golden_names() { return {"lines_clauses", "lines_delta", "specrel_in_sigth", "sigth_in_specrel", "specrel_in_sigth_axioms"}; }

inline GoldenSet golden_set(const std::string& name) {
  if (name == "lines_clauses") return lines_clauses();
  if (name == "lines_delta") return lines_delta();
  if (name == "specrel_in_sigth") return definition_lines(tr_spec());
  if (name == "sigth_in_specrel") return definition_lines(Tr_spec());
  if (name == "specrel_in_sigth_axioms") return tr_axioms();
  throw Error(ErrorKind::ConfigError, "unknown golden set '" + name + "'");
}

/// One "key: text" line per entry.
inline std::string render(const GoldenSet& set) {
  std::string s;
  for (const auto& [k, v] : set) s += k + ": " + v + "\n";
  return s;
}

/// Line-by-line differences between a stored golden file and the current output.
inline std::vector<std::string> golden_diff(const std::string& expected, const std::string& actual) {
  auto lines = [](const std::string& s) {
    std::vector<std::string> out;
    std::size_t at = 0;
    while (at < s.size()) {
      std::size_t nl = s.find('\n', at);
      if (nl == std::string::npos) nl = s.size();
      out.push_back(s.substr(at, nl - at));
      at = nl + 1;
    }
    return out;
  };
  std::vector<std::string> e = lines(expected), a = lines(actual), out;
  for (std::size_t i = 0; i < std::max(e.size(), a.size()); ++i) {
    std::string el = i < e.size() ? e[i] : "<missing>";
    std::string al = i < a.size() ? a[i] : "<missing>";
    if (el != al) out.push_back("line " + std::to_string(i + 1) + ": expected '" + el + "', got '" + al + "'");
  }
  return out;
}

}  // namespace sigrel::interp
