// SPDX-License-Identifier: Apache-2.0
// Finite models: Tarskian evaluation by exhaustive quantification, the
// quotient model tr(M) of an interpretation, and meaning-preservation checks
// comparing tr(M) |= psi[k] with M |= tr(psi)[tr(k)].
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sigrel/folkit/interpretation.hpp"

namespace sigrel::folkit {

/// Extension of one relation: a dense truth table over the carriers, or a
/// predicate evaluated on demand and remembered.
struct Relation {
  using Predicate = std::function<bool(const std::vector<int>&)>;

  std::vector<std::size_t> dims;
  std::vector<char> table;
  Predicate predicate;
  std::shared_ptr<std::map<std::vector<int>, bool>> memo;

  std::size_t index(const std::vector<int>& t) const {
    std::size_t i = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) i = i * dims[k] + static_cast<std::size_t>(t[k]);
    return i;
  }
  bool holds(const std::vector<int>& t) const {
    if (!predicate) return table[index(t)] != 0;
    auto it = memo->find(t);
    if (it != memo->end()) return it->second;
    bool v = predicate(t);
    memo->emplace(t, v);
    return v;
  }
  void set(const std::vector<int>& t, bool v = true) { table[index(t)] = v ? 1 : 0; }
};

struct FiniteModel {
  Signature sig;
  std::map<std::string, std::vector<std::string>> carriers;  // element names per sort
  std::map<std::string, Relation> relations;

  std::size_t size(const std::string& sort) const { return carriers.at(sort).size(); }

  /// An empty extension for r, sized from the signature and carriers.
  Relation& declare(const std::string& r) {
    Relation rel;
    std::size_t total = 1;
    for (const auto& s : sig.relations.at(r)) {
      rel.dims.push_back(size(s));
      total *= size(s);
    }
    rel.table.assign(total, 0);
    return relations[r] = rel;
  }

  /// An extension for r decided by `p` on demand.
  Relation& compute(const std::string& r, Relation::Predicate p) {
    Relation rel;
    for (const auto& s : sig.relations.at(r)) rel.dims.push_back(size(s));
    rel.predicate = std::move(p);
    rel.memo = std::make_shared<std::map<std::vector<int>, bool>>();
    return relations[r] = rel;
  }
};

using Assignment = std::map<std::string, int>;

namespace detail {

struct Env {
  std::vector<std::pair<std::string, int>> vars;

  int get(const std::string& v) const {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      if (it->first == v) return it->second;
    throw Error(ErrorKind::UnassignedVariable, "no value for variable '" + v + "'");
  }
};

inline bool eval_quantifier(const FiniteModel& m, const Formula& f, Env& env);

inline bool eval(const FiniteModel& m, const Formula& f, Env& env) {
  switch (f->op) {
    case Op::atom: {
      auto it = m.relations.find(f->rel);
      if (it == m.relations.end()) throw Error(ErrorKind::MissingDefinition, "model lacks relation '" + f->rel + "'");
      std::vector<int> t;
      t.reserve(f->args.size());
      for (const auto& a : f->args) t.push_back(env.get(a));
      return it->second.holds(t);
    }
    case Op::eq: return env.get(f->args[0]) == env.get(f->args[1]);
    case Op::truth: return true;
    case Op::falsity: return false;
    case Op::neg: return !eval(m, f->kids[0], env);
    case Op::conj:
      for (const auto& k : f->kids)
        if (!eval(m, k, env)) return false;
      return true;
    case Op::disj:
      for (const auto& k : f->kids)
        if (eval(m, k, env)) return true;
      return false;
    case Op::implies: return !eval(m, f->kids[0], env) || eval(m, f->kids[1], env);
    case Op::iff: return eval(m, f->kids[0], env) == eval(m, f->kids[1], env);
    case Op::exists:
    case Op::forall: return eval_quantifier(m, f, env);
  }
  return false;
}

/// A quantifier is decided by searching for a witness: for exists one making
/// the body true, for forall one making it false. Conjuncts that must hold
/// on the way (the conjuncts of an existential body, or of the antecedent of
/// a universal implication) are tested as soon as their variables are bound,
/// which prunes the search without changing its outcome.
struct SearchPlan {
  std::vector<std::vector<Formula>> guards;  // by the binder after which they are decidable
  std::vector<Formula> early;                // decidable before any binder
  Formula final_;                            // tested at the leaves
  bool final_value = true;                   // the value of final_ that completes a witness
};

inline SearchPlan plan_search(const Formula& f) {
  SearchPlan p;
  p.guards.resize(f->binders.size());
  std::vector<Formula> parts;
  const Formula& body = f->kids[0];
  if (f->op == Op::exists) {
    parts = body->op == Op::conj ? body->kids : std::vector<Formula>{body};
    p.final_ = truth();
  } else if (body->op == Op::implies) {
    const Formula& ante = body->kids[0];
    parts = ante->op == Op::conj ? ante->kids : std::vector<Formula>{ante};
    p.final_ = body->kids[1];
    p.final_value = false;
  } else {
    p.final_ = body;
    p.final_value = false;
  }
  for (const auto& c : parts) {
    int level = -1;
    std::vector<std::string> fv = free_vars(c);
    for (std::size_t i = 0; i < f->binders.size(); ++i)
      if (std::find(fv.begin(), fv.end(), f->binders[i].var) != fv.end()) level = static_cast<int>(i);  // the last binder of a name wins
    if (level < 0) {
      p.early.push_back(c);
    } else {
      p.guards[static_cast<std::size_t>(level)].push_back(c);
    }
  }
  return p;
}

inline const SearchPlan& search_plan(const Formula& f) {
  struct Entry {
    std::weak_ptr<const Node> node;
    SearchPlan plan;
  };
  thread_local std::map<const Node*, Entry> cache;
  auto it = cache.find(f.get());
  if (it == cache.end() || it->second.node.lock() != f) {
    it = cache.insert_or_assign(f.get(), Entry{f, plan_search(f)}).first;
  }
  return it->second.plan;
}

inline bool eval_quantifier(const FiniteModel& m, const Formula& f, Env& env) {
  const SearchPlan& plan = search_plan(f);
  bool is_exists = f->op == Op::exists;
  std::size_t base = env.vars.size();
  // Conjuncts free of the binders are decided in the outer assignment.
  for (const auto& c : plan.early) {
    if (!eval(m, c, env)) return !is_exists;
  }
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == f->binders.size()) return eval(m, plan.final_, env) == plan.final_value;
    std::size_t n = m.size(f->binders[i].sort);
    env.vars.emplace_back(f->binders[i].var, 0);
    for (std::size_t e = 0; e < n; ++e) {
      env.vars.back().second = static_cast<int>(e);
      bool ok = true;
      for (const auto& c : plan.guards[i]) {
        if (!eval(m, c, env)) {
          ok = false;
          break;
        }
      }
      if (ok && go(i + 1)) {
        env.vars.resize(base + i);
        return true;
      }
    }
    env.vars.resize(base + i);
    return false;
  };
  bool found = go(0);
  env.vars.resize(base);
  return is_exists ? found : !found;
}

}  // namespace detail

/// M |= f[k], quantifiers ranging over the finite carriers.
inline bool eval(const FiniteModel& m, const Formula& f, const Assignment& k = {}) {
  detail::Env env;
  for (const auto& [v, e] : k) env.vars.emplace_back(v, e);
  return detail::eval(m, f, env);
}

// ---------------------------------------------------------------------------
// tr(M)

/// The source-language model defined inside a target model, together with
/// the representative tuples of every element of a new sort.
struct TranslatedModel {
  FiniteModel model;
  std::map<std::string, std::vector<std::vector<std::vector<int>>>> classes;  // sort -> element -> tuples
};

namespace detail {

inline void product(const std::vector<std::size_t>& dims, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> t(dims.size(), 0);
  for (std::size_t d : dims)
    if (d == 0) return;
  for (;;) {
    visit(t);
    std::size_t i = dims.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (static_cast<std::size_t>(++t[i]) < dims[i]) break;
      t[i] = 0;
    }
  }
}

inline Assignment bind_def(const InterpretationSpec& spec, const Definition& def, const std::vector<std::string>& sorts,
                           const std::vector<std::vector<int>>& values) {
  Assignment k;
  for (std::size_t i = 0; i < def.params.size(); ++i) {
    const SortDef& d = spec.sort(sorts[i]);
    if (!d.is_new()) {
      k[def.params[i]] = values[i][0];
    } else {
      for (std::size_t j = 0; j < d.matching.size(); ++j) k[matched_name(def.params[i], d.matching[j].var)] = values[i][j];
    }
  }
  return k;
}

inline std::string tuple_name(const FiniteModel& m, const std::vector<Binder>& matching, const std::vector<int>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    s += (i ? "," : "") + m.carriers.at(matching[i].sort)[static_cast<std::size_t>(t[i])];
  }
  return s + "]";
}

}  // namespace detail

/// Builds tr(M): new sorts are the domain tuples modulo the equality
/// formula; a source relation holds when its definition holds for some
/// choice of representatives.
inline TranslatedModel build_translated_model(const InterpretationSpec& spec, const FiniteModel& m) {
  TranslatedModel out;
  out.model.sig = spec.source;
  for (const auto& d : spec.sorts) {
    if (!d.is_new()) {
      out.model.carriers[d.name] = m.carriers.at(d.target);
      continue;
    }
    std::vector<std::size_t> dims;
    for (const auto& b : d.matching) dims.push_back(m.size(b.sort));
    std::vector<std::vector<int>> u;
    detail::product(dims, [&](const std::vector<int>& t) {
      if (eval(m, d.domain.formula, detail::bind_def(spec, d.domain, {d.name}, {t}))) u.push_back(t);
    });
    std::size_t n = u.size();
    std::vector<char> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        e[i * n + j] = eval(m, d.equality.formula, detail::bind_def(spec, d.equality, {d.name, d.name}, {u[i], u[j]}));
    for (std::size_t i = 0; i < n; ++i) {
      if (!e[i * n + i]) throw Error(ErrorKind::NotEquivalence, d.name + " equality is not reflexive");
      for (std::size_t j = 0; j < n; ++j) {
        if (e[i * n + j] != e[j * n + i]) throw Error(ErrorKind::NotEquivalence, d.name + " equality is not symmetric");
        if (!e[i * n + j]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (e[j * n + k] && !e[i * n + k]) {
            throw Error(ErrorKind::NotEquivalence, d.name + " equality is not transitive");
          }
        }
      }
    }
    std::vector<int> cls(n, -1);
    auto& classes = out.classes[d.name];
    auto& names = out.model.carriers[d.name];
    for (std::size_t i = 0; i < n; ++i) {
      if (cls[i] >= 0) continue;
      int c = static_cast<int>(classes.size());
      classes.emplace_back();
      names.push_back(detail::tuple_name(m, d.matching, u[i]));
      for (std::size_t j = i; j < n; ++j) {
        if (e[i * n + j]) {
          cls[j] = c;
          classes.back().push_back(u[j]);
        }
      }
    }
  }
  for (const auto& [r, sorts] : spec.source.relations) {
    auto def = spec.relations.find(r);
    if (def == spec.relations.end()) throw Error(ErrorKind::MissingDefinition, "no definition for relation '" + r + "'");
    Relation& rel = out.model.declare(r);
    detail::product(rel.dims, [&](const std::vector<int>& t) {
      // Representative choices for every argument.
      std::vector<std::vector<std::vector<int>>> choices;
      std::vector<std::size_t> counts;
      for (std::size_t i = 0; i < t.size(); ++i) {
        const SortDef& d = spec.sort(sorts[i]);
        if (!d.is_new()) {
          choices.push_back({{t[i]}});
        } else {
          choices.push_back(out.classes.at(d.name)[static_cast<std::size_t>(t[i])]);
        }
        counts.push_back(choices.back().size());
      }
      bool holds = false;
      detail::product(counts, [&](const std::vector<int>& pick) {
        if (holds) return;
        std::vector<std::vector<int>> values;
        for (std::size_t i = 0; i < pick.size(); ++i) values.push_back(choices[i][static_cast<std::size_t>(pick[i])]);
        holds = eval(m, def->second.formula, detail::bind_def(spec, def->second, sorts, values));
      });
      if (holds) rel.set(t);
    });
  }
  return out;
}

/// The model of the joint language: M, the new sorts of tr(M), the source
/// relations, and each projection relating a class to its representatives.
inline FiniteModel joint_model(const InterpretationSpec& spec, const FiniteModel& m, const TranslatedModel& tm) {
  FiniteModel j;
  j.sig = joint_signature(spec);
  j.carriers = m.carriers;
  j.relations = m.relations;
  for (const auto& d : spec.sorts) {
    if (d.is_new()) j.carriers[d.name] = tm.model.carriers.at(d.name);
  }
  for (const auto& [r, rel] : tm.model.relations) j.relations[r] = rel;
  for (const auto& d : spec.sorts) {
    if (!d.is_new()) continue;
    Relation& pi = j.declare(projection_name(d.name));
    const auto& classes = tm.classes.at(d.name);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (auto t : classes[c]) {
        t.push_back(static_cast<int>(c));
        pi.set(t);
      }
    }
  }
  return j;
}

// ---------------------------------------------------------------------------
// Meaning preservation

struct MeaningReport {
  int checks = 0;
  int mismatches = 0;
  std::vector<nlohmann::json> witnesses;

  bool ok() const { return checks > 0 && mismatches == 0; }
};

inline nlohmann::json to_json(const MeaningReport& r) {
  return {{"checks", r.checks}, {"mismatches", r.mismatches}, {"witnesses", r.witnesses}};
}

namespace detail {

struct Prepared {
  Formula source;
  Formula target;
  SortMap free;
  std::map<std::string, std::vector<std::string>> matched;
  std::vector<std::string> vars;
};

inline Prepared prepare(const InterpretationSpec& spec, const Formula& f) {
  Typed t = typecheck(spec.source, f);
  return {t.formula, translate(spec, t.formula), t.free, free_matching(spec, t.formula), free_vars(t.formula)};
}

/// Compares both sides for one source assignment and one representative
/// choice per new-sort variable.
inline void compare(const InterpretationSpec& spec, const TranslatedModel& tm, const FiniteModel& m, const Prepared& p,
                    const Assignment& k, const std::map<std::string, std::size_t>& pick, MeaningReport& r) {
  Assignment tk;
  for (const auto& v : p.vars) {
    const SortDef& d = spec.sort(p.free.at(v));
    const auto& names = p.matched.at(v);
    if (!d.is_new()) {
      tk[names[0]] = k.at(v);
    } else {
      const auto& tuple = tm.classes.at(d.name)[static_cast<std::size_t>(k.at(v))][pick.at(v)];
      for (std::size_t i = 0; i < names.size(); ++i) tk[names[i]] = tuple[i];
    }
  }
  bool lhs = eval(tm.model, p.source, k);
  bool rhs = eval(m, p.target, tk);
  ++r.checks;
  if (lhs != rhs) {
    ++r.mismatches;
    if (r.witnesses.size() < 10) {
      nlohmann::json w{{"formula", to_sexpr(p.source)}, {"translated_model", lhs}, {"model", rhs}};
      for (const auto& [v, e] : k) w["k"][v] = tm.model.carriers.at(p.free.at(v))[static_cast<std::size_t>(e)];
      for (const auto& [v, e] : tk) w["tr_k"][v] = e;
      r.witnesses.push_back(w);
    }
  }
}

}  // namespace detail

/// Random assignments; the first trial uses the least representatives, the
/// others pick representatives at random.
inline MeaningReport meaning_preservation_check(const InterpretationSpec& spec, const FiniteModel& m,
                                                const std::vector<Formula>& formulas, int trials, std::uint64_t seed) {
  TranslatedModel tm = build_translated_model(spec, m);
  MeaningReport r;
  std::mt19937_64 gen(seed);
  auto below = [&](std::size_t n) { return static_cast<std::size_t>(gen() % n); };
  for (const auto& f : formulas) {
    detail::Prepared p = detail::prepare(spec, f);
    for (int t = 0; t < trials; ++t) {
      Assignment k;
      std::map<std::string, std::size_t> pick;
      for (const auto& v : p.vars) {
        const std::string& s = p.free.at(v);
        k[v] = static_cast<int>(below(tm.model.size(s)));
        const SortDef& d = spec.sort(s);
        pick[v] = d.is_new() && t > 0 ? below(tm.classes.at(d.name)[static_cast<std::size_t>(k[v])].size()) : 0;
      }
      detail::compare(spec, tm, m, p, k, pick, r);
    }
  }
  return r;
}

/// Every assignment of the free variables, each with every choice of
/// representatives.
inline MeaningReport meaning_preservation_exhaustive(const InterpretationSpec& spec, const FiniteModel& m,
                                                     const std::vector<Formula>& formulas) {
  TranslatedModel tm = build_translated_model(spec, m);
  MeaningReport r;
  for (const auto& f : formulas) {
    detail::Prepared p = detail::prepare(spec, f);
    std::vector<std::size_t> dims;
    for (const auto& v : p.vars) dims.push_back(tm.model.size(p.free.at(v)));
    if (p.vars.empty()) dims.clear();
    auto with_k = [&](const std::vector<int>& vals) {
      Assignment k;
      std::vector<std::size_t> reps;
      for (std::size_t i = 0; i < p.vars.size(); ++i) {
        k[p.vars[i]] = vals[i];
        const SortDef& d = spec.sort(p.free.at(p.vars[i]));
        reps.push_back(d.is_new() ? tm.classes.at(d.name)[static_cast<std::size_t>(vals[i])].size() : 1);
      }
      detail::product(reps, [&](const std::vector<int>& choice) {
        std::map<std::string, std::size_t> pick;
        for (std::size_t i = 0; i < p.vars.size(); ++i) pick[p.vars[i]] = static_cast<std::size_t>(choice[i]);
        detail::compare(spec, tm, m, p, k, pick, r);
      });
    };
    if (p.vars.empty()) {
      with_k({});
    } else {
      detail::product(dims, with_k);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Affine-plane fixtures

inline Signature points_signature() { return {{"Points"}, {{"Col", {"Points", "Points", "Points"}}}}; }

/// AG(2, q) for prime q as a model of the one-sorted language: points of
/// Z_q^2 with Col the collinearity of three points.
inline FiniteModel affine_plane(int q) {
  FiniteModel m;
  m.sig = points_signature();
  auto& pts = m.carriers["Points"];
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) pts.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
  Relation& col = m.declare("Col");
  int n = q * q;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int ux = b / q - a / q, uy = b % q - a % q, wx = c / q - a / q, wy = c % q - a % q;
        int det = ((ux * wy - uy * wx) % q + q) % q;
        if (det == 0) col.set({a, b, c});
      }
  return m;
}

/// The points-and-lines interpretation into the collinearity language.
inline const char* kLinesSpecJson = R"json({
  "name": "lines",
  "source": {"sorts": ["Points", "Lines"], "relations": {"I": ["Points", "Lines"]}},
  "target": {"sorts": ["Points"], "relations": {"Col": ["Points", "Points", "Points"]}},
  "sorts": {
    "Points": {"target": "Points"},
    "Lines": {
      "matching": [["p", "Points"], ["q", "Points"]],
      "domain": {"params": ["l"], "formula": "(!= l_p l_q)"},
      "equality": {"params": ["l", "h"], "formula": "(and (Col l_p h_p h_q) (Col l_q h_p h_q))"}
    }
  },
  "relations": {"I": {"params": ["p", "l"], "formula": "(Col p l_p l_q)"}}
})json";

inline InterpretationSpec lines_spec() { return spec_from_json(nlohmann::json::parse(kLinesSpecJson)); }

/// The same spec with a wrong equality formula: lines are identified when
/// their first points coincide, which is an equivalence but does not respect
/// incidence.
inline InterpretationSpec corrupted_lines_spec() {
  nlohmann::json j = nlohmann::json::parse(kLinesSpecJson);
  j["name"] = "lines-corrupted";
  j["sorts"]["Lines"]["equality"]["formula"] = "(= l_p h_p)";
  return spec_from_json(j);
}

}  // namespace sigrel::folkit
