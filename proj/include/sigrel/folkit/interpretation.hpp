// SPDX-License-Identifier: Apache-2.0
// Interpretations between many-sorted languages: new sorts defined by a
// variable matching, a domain formula and an equality formula; relations
// defined by target formulas. Provides the translation function and the
// definitional-extension sentences.
#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sigrel/folkit/parse.hpp"

namespace sigrel::folkit {

/// A target formula whose free variables are named after the parameters: an
/// old-sort parameter v appears as v, a new-sort parameter v as v_s for each
/// matching suffix s.
struct Definition {
  std::vector<std::string> params;
  Formula formula;
};

struct SortDef {
  std::string name;
  std::string target;              // set for a sort carried over unchanged
  std::vector<Binder> matching;    // suffix and target sort of each matched variable
  Definition domain;               // one parameter
  Definition equality;             // two parameters

  bool is_new() const { return target.empty(); }
};

/// A named target-language abbreviation with sorted parameters.
struct Macro {
  std::vector<Binder> params;
  Formula formula;
};

struct InterpretationSpec {
  std::string name;
  Signature source;
  Signature target;
  std::vector<SortDef> sorts;
  std::map<std::string, Definition> relations;
  std::map<std::string, Macro> macros;

  const SortDef& sort(const std::string& s) const {
    for (const auto& d : sorts)
      if (d.name == s) return d;
    throw Error(ErrorKind::MissingDefinition, "no definition for sort '" + s + "'");
  }
};

inline std::string matched_name(const std::string& var, const std::string& suffix) { return var + "_" + suffix; }

// ---------------------------------------------------------------------------
// Validation

/// Target-language sorts of the variables a definition may use.
inline SortMap definition_context(const InterpretationSpec& spec, const std::vector<std::string>& params,
                                  const std::vector<std::string>& sorts) {
  SortMap ctx;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const SortDef& d = spec.sort(sorts[i]);
    if (!d.is_new()) {
      ctx[params[i]] = d.target;
    } else {
      for (const auto& m : d.matching) ctx[matched_name(params[i], m.var)] = m.sort;
    }
  }
  return ctx;
}

inline Formula check_definition(const InterpretationSpec& spec, const std::string& what, const Definition& def,
                                const std::vector<std::string>& sorts) {
  if (def.params.size() != sorts.size()) {
    throw Error(ErrorKind::SortError, what + " needs " + std::to_string(sorts.size()) + " parameters");
  }
  SortMap ctx = definition_context(spec, def.params, sorts);
  for (const auto& v : free_vars(def.formula)) {
    if (!ctx.count(v)) throw Error(ErrorKind::SortError, what + " uses '" + v + "', which is not a parameter");
  }
  return typecheck(spec.target, def.formula, ctx).formula;
}

/// Checks every defining formula against the target signature, and returns
/// the spec with equalities sort-tagged.
inline InterpretationSpec validate(InterpretationSpec spec) {
  for (const auto& s : spec.source.sorts) spec.sort(s);
  for (auto& [name, m] : spec.macros) {
    auto it = spec.target.relations.find(name);
    if (it == spec.target.relations.end() || it->second.size() != m.params.size()) {
      throw Error(ErrorKind::SortError, "macro '" + name + "' is not declared in the target signature");
    }
    SortMap ctx;
    for (std::size_t i = 0; i < m.params.size(); ++i) {
      if (it->second[i] != m.params[i].sort) throw Error(ErrorKind::SortError, "macro '" + name + "' parameter sorts");
      ctx[m.params[i].var] = m.params[i].sort;
    }
    for (const auto& v : free_vars(m.formula)) {
      if (!ctx.count(v)) throw Error(ErrorKind::SortError, "macro '" + name + "' uses free '" + v + "'");
    }
    m.formula = typecheck(spec.target, m.formula, ctx).formula;
  }
  for (auto& d : spec.sorts) {
    if (!spec.source.has_sort(d.name)) throw Error(ErrorKind::SortError, "unknown source sort '" + d.name + "'");
    if (!d.is_new()) {
      if (!spec.target.has_sort(d.target)) throw Error(ErrorKind::SortError, "unknown target sort '" + d.target + "'");
      continue;
    }
    for (const auto& m : d.matching) {
      if (!spec.target.has_sort(m.sort)) throw Error(ErrorKind::SortError, "unknown target sort '" + m.sort + "'");
    }
    d.domain.formula = check_definition(spec, "domain of " + d.name, d.domain, {d.name});
    d.equality.formula = check_definition(spec, "equality of " + d.name, d.equality, {d.name, d.name});
  }
  for (const auto& [r, sorts] : spec.source.relations) {
    auto it = spec.relations.find(r);
    if (it == spec.relations.end()) continue;  // reported by translate when used
    it->second.formula = check_definition(spec, "definition of " + r, it->second, sorts);
  }
  return spec;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const Signature& s) { return {{"sorts", s.sorts}, {"relations", s.relations}}; }

inline Signature signature_from_json(const nlohmann::json& j) {
  Signature s;
  s.sorts = j.at("sorts").get<std::vector<std::string>>();
  s.relations = j.at("relations").get<std::map<std::string, std::vector<std::string>>>();
  return s;
}

inline nlohmann::json to_json(const Definition& d) { return {{"params", d.params}, {"formula", to_sexpr(d.formula)}}; }

inline Definition definition_from_json(const nlohmann::json& j) {
  return {j.at("params").get<std::vector<std::string>>(), parse_raw(j.at("formula").get<std::string>())};
}

inline nlohmann::json binders_json(const std::vector<Binder>& bs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& b : bs) out.push_back({b.var, b.sort});
  return out;
}

inline std::vector<Binder> binders_from_json(const nlohmann::json& j) {
  std::vector<Binder> out;
  for (const auto& b : j) out.push_back({b.at(0).get<std::string>(), b.at(1).get<std::string>()});
  return out;
}

inline nlohmann::json to_json(const InterpretationSpec& spec) {
  nlohmann::json sorts = nlohmann::json::object();
  for (const auto& d : spec.sorts) {
    if (!d.is_new()) {
      sorts[d.name] = {{"target", d.target}};
    } else {
      sorts[d.name] = {{"matching", binders_json(d.matching)},
                       {"domain", to_json(d.domain)},
                       {"equality", to_json(d.equality)}};
    }
  }
  nlohmann::json rels = nlohmann::json::object();
  for (const auto& [r, d] : spec.relations) rels[r] = to_json(d);
  nlohmann::json macros = nlohmann::json::object();
  for (const auto& [name, m] : spec.macros) {
    macros[name] = {{"params", binders_json(m.params)}, {"formula", to_sexpr(m.formula)}};
  }
  return {{"name", spec.name},     {"source", to_json(spec.source)}, {"target", to_json(spec.target)},
          {"sorts", sorts},        {"relations", rels},              {"macros", macros}};
}

/// Reads and validates a spec.
inline InterpretationSpec spec_from_json(const nlohmann::json& j) {
  InterpretationSpec spec;
  spec.name = j.value("name", "");
  spec.source = signature_from_json(j.at("source"));
  spec.target = signature_from_json(j.at("target"));
  for (const auto& s : spec.source.sorts) {
    const auto& d = j.at("sorts").at(s);
    SortDef def;
    def.name = s;
    if (d.contains("target")) {
      def.target = d.at("target").get<std::string>();
    } else {
      def.matching = binders_from_json(d.at("matching"));
      def.domain = definition_from_json(d.at("domain"));
      def.equality = definition_from_json(d.at("equality"));
    }
    spec.sorts.push_back(def);
  }
  if (j.contains("relations")) {
    for (const auto& [r, d] : j.at("relations").items()) spec.relations[r] = definition_from_json(d);
  }
  if (j.contains("macros")) {
    for (const auto& [name, m] : j.at("macros").items()) {
      spec.macros[name] = {binders_from_json(m.at("params")), parse_raw(m.at("formula").get<std::string>())};
    }
  }
  return validate(spec);
}

// ---------------------------------------------------------------------------
// Translation

namespace detail {

struct Slot {
  std::string source;               // source variable
  std::string sort;                 // its source sort
  std::vector<std::string> names;   // the target variables standing for it
};

class Translator {
 public:
  Translator(const InterpretationSpec& spec, const Formula& f) : spec_(spec) { all_vars(f, taken_); }

  void bind_free(const std::string& v, const std::string& sort) { scope_.push_back(slot(v, sort, true)); }

  Formula run(const Formula& f) {
    switch (f->op) {
      case Op::atom: {
        auto def = spec_.relations.find(f->rel);
        if (def == spec_.relations.end()) {
          throw Error(ErrorKind::MissingDefinition, "no definition for relation '" + f->rel + "'");
        }
        return instantiate(def->second, f->args, spec_.source.relations.at(f->rel));
      }
      case Op::eq: {
        const SortDef& d = spec_.sort(f->sort);
        if (!d.is_new()) return eq(find(f->args[0]).names[0], find(f->args[1]).names[0], d.target);
        return instantiate(d.equality, f->args, {f->sort, f->sort});
      }
      case Op::truth:
      case Op::falsity: return f;
      case Op::exists:
      case Op::forall: {
        std::vector<Binder> bs;
        std::vector<Formula> domains;
        for (const auto& b : f->binders) {
          const SortDef& d = spec_.sort(b.sort);
          Slot s = slot(b.var, b.sort, false);
          if (!d.is_new()) {
            bs.push_back({s.names[0], d.target});
          } else {
            for (std::size_t i = 0; i < d.matching.size(); ++i) bs.push_back({s.names[i], d.matching[i].sort});
          }
          scope_.push_back(s);
          if (d.is_new()) domains.push_back(instantiate(d.domain, {b.var}, {b.sort}));
        }
        Formula body = run(f->kids[0]);
        scope_.resize(scope_.size() - f->binders.size());
        if (f->op == Op::exists) {
          domains.push_back(body);
          return exists(bs, conj(domains));
        }
        return forall(bs, domains.empty() ? body : implies(conj(domains), body));
      }
      default: {
        Node n = *f;
        for (auto& k : n.kids) k = run(k);
        if (f->op == Op::conj) return conj(n.kids);
        if (f->op == Op::disj) return disj(n.kids);
        return make(std::move(n));
      }
    }
  }

 private:
  Slot slot(const std::string& v, const std::string& sort, bool free) {
    const SortDef& d = spec_.sort(sort);
    Slot s{v, sort, {}};
    if (!d.is_new()) {
      // Old-sort variables keep their names; generated names avoid them.
      s.names.push_back(v);
      taken_.insert(v);
      (void)free;
    } else {
      for (const auto& m : d.matching) s.names.push_back(fresh(matched_name(v, m.var), taken_));
    }
    return s;
  }

  const Slot& find(const std::string& v) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->source == v) return *it;
    throw Error(ErrorKind::SortError, "unbound variable '" + v + "'");
  }

  Formula instantiate(const Definition& def, const std::vector<std::string>& args, const std::vector<std::string>& sorts) {
    std::map<std::string, std::string> sub;
    for (std::size_t i = 0; i < def.params.size(); ++i) {
      const Slot& s = find(args[i]);
      const SortDef& d = spec_.sort(sorts[i]);
      if (!d.is_new()) {
        sub[def.params[i]] = s.names[0];
      } else {
        for (std::size_t k = 0; k < d.matching.size(); ++k) {
          sub[matched_name(def.params[i], d.matching[k].var)] = s.names[k];
        }
      }
    }
    return rename_free(def.formula, sub, taken_);
  }

  const InterpretationSpec& spec_;
  std::set<std::string> taken_;
  std::vector<Slot> scope_;
};

}  // namespace detail

/// tr(f): quantifiers over new sorts become quantifiers over the matched
/// variables guarded by the domain formula, equalities on new sorts become
/// the equality formula, and atoms their defining formulas. Generated names
/// never capture existing ones.
inline Formula translate(const InterpretationSpec& spec, const Formula& f, const SortMap& context = {}) {
  Typed t = typecheck(spec.source, f, context);
  detail::Translator tr(spec, t.formula);
  for (const auto& v : free_vars(t.formula)) tr.bind_free(v, t.free.at(v));
  return tr.run(t.formula);
}

/// Names of the target variables standing for a free source variable, in
/// the order translate assigns them.
inline std::map<std::string, std::vector<std::string>> free_matching(const InterpretationSpec& spec, const Formula& f,
                                                                     const SortMap& context = {}) {
  Typed t = typecheck(spec.source, f, context);
  std::set<std::string> taken;
  all_vars(t.formula, taken);
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& v : free_vars(t.formula)) {
    const SortDef& d = spec.sort(t.free.at(v));
    if (!d.is_new()) {
      out[v] = {v};
      taken.insert(v);
    } else {
      for (const auto& m : d.matching) out[v].push_back(fresh(matched_name(v, m.var), taken));
    }
  }
  return out;
}

/// Replaces macro atoms by their bodies until none remain.
inline Formula expand_macros(const InterpretationSpec& spec, const Formula& f, int depth = 0) {
  if (depth > 64) throw Error(ErrorKind::SortError, "macro expansion does not terminate");
  if (f->op == Op::atom) {
    auto it = spec.macros.find(f->rel);
    if (it == spec.macros.end()) return f;
    std::map<std::string, std::string> sub;
    for (std::size_t i = 0; i < it->second.params.size(); ++i) sub[it->second.params[i].var] = f->args[i];
    std::set<std::string> taken;
    all_vars(f, taken);
    return expand_macros(spec, rename_free(it->second.formula, sub, taken), depth + 1);
  }
  if (f->kids.empty()) return f;
  Node n = *f;
  for (auto& k : n.kids) k = expand_macros(spec, k, depth);
  if (f->op == Op::conj) return conj(n.kids);
  if (f->op == Op::disj) return disj(n.kids);
  return make(std::move(n));
}

// ---------------------------------------------------------------------------
// Definitional extension

inline std::string projection_name(const std::string& sort) { return "pi_" + sort; }

/// The joint language: target symbols, the new source sorts, one projection
/// relation per new sort, and the source relations over target sorts.
inline Signature joint_signature(const InterpretationSpec& spec) {
  Signature j = spec.target;
  auto joint_sort = [&](const std::string& s) {
    const SortDef& d = spec.sort(s);
    return d.is_new() ? s : d.target;
  };
  for (const auto& d : spec.sorts) {
    if (!d.is_new()) continue;
    j.sorts.push_back(d.name);
    std::vector<std::string> ps;
    for (const auto& m : d.matching) ps.push_back(m.sort);
    ps.push_back(d.name);
    j.relations[projection_name(d.name)] = ps;
  }
  for (const auto& [r, sorts] : spec.source.relations) {
    std::vector<std::string> js;
    for (const auto& s : sorts) js.push_back(joint_sort(s));
    j.relations[r] = js;
  }
  return j;
}

/// How delta_sentences presents the definitions.
enum class DeltaForm {
  printed,  // open formulas in the printed shape
  guarded,  // universally closed; the equality clause restricted to the domain
};

/// Delta: for each new sort the three formulas tying the projection to the
/// equality and domain formulas, then one biconditional per defined
/// relation.
///
/// In the printed form the equality clause is false at codes outside the
/// domain (no object is coded there, yet the equality formula may hold), so
/// the printed form is not valid in tr(M). The guarded form asserts that
/// clause for domain codes only and is the one to evaluate.
inline std::vector<Formula> delta_sentences(const InterpretationSpec& spec, DeltaForm form = DeltaForm::printed) {
  const bool guarded = form == DeltaForm::guarded;
  std::vector<Formula> out;
  for (const auto& d : spec.sorts) {
    if (!d.is_new()) continue;
    std::set<std::string> taken;
    std::string l = fresh(d.domain.params[0], taken);
    std::string l2 = fresh(l + "'", taken);
    std::vector<Binder> ps, ps2;
    std::vector<std::string> pn, pn2;
    for (const auto& m : d.matching) {
      ps.push_back({fresh(m.var, taken), m.sort});
      pn.push_back(ps.back().var);
    }
    for (const auto& m : d.matching) {
      ps2.push_back({fresh(m.var + "'", taken), m.sort});
      pn2.push_back(ps2.back().var);
    }
    auto pi = [&](std::vector<std::string> args, const std::string& line) {
      args.push_back(line);
      return atom(projection_name(d.name), args);
    };
    auto with = [&](const Definition& def, const std::vector<std::vector<std::string>>& names) {
      std::map<std::string, std::string> sub;
      for (std::size_t i = 0; i < def.params.size(); ++i)
        for (std::size_t k = 0; k < d.matching.size(); ++k)
          sub[matched_name(def.params[i], d.matching[k].var)] = names[i][k];
      std::set<std::string> t = taken;
      return rename_free(def.formula, sub, t);
    };
    out.push_back(iff(exists(ps, conj({pi(pn, l), pi(pn, l2)})), eq(l, l2, d.name)));
    // The equality formula reads its first parameter as the representative
    // being tested, so the primed copy goes first.
    Formula same = iff(exists({{l, d.name}}, conj({pi(pn, l), pi(pn2, l)})), with(d.equality, {pn2, pn}));
    if (guarded) same = implies(conj({with(d.domain, {pn}), with(d.domain, {pn2})}), same);
    out.push_back(same);
    out.push_back(iff(exists({{l, d.name}}, pi(pn, l)), with(d.domain, {pn})));
  }
  Signature joint = joint_signature(spec);
  for (const auto& [r, def] : spec.relations) {
    const auto& sorts = spec.source.relations.at(r);
    std::set<std::string> taken(def.params.begin(), def.params.end());
    all_vars(def.formula, taken);
    std::vector<Binder> matched;
    std::vector<Formula> parts;
    std::map<std::string, std::string> sub;
    for (std::size_t i = 0; i < def.params.size(); ++i) {
      const SortDef& d = spec.sort(sorts[i]);
      if (!d.is_new()) continue;
      std::vector<std::string> names;
      for (const auto& m : d.matching) {
        names.push_back(fresh(m.var + "'", taken));
        matched.push_back({names.back(), m.sort});
        sub[matched_name(def.params[i], m.var)] = names.back();
      }
      names.push_back(def.params[i]);
      parts.push_back(atom(projection_name(d.name), names));
    }
    parts.push_back(rename_free(def.formula, sub, taken));
    out.push_back(iff(atom(r, def.params), exists(matched, conj(parts))));
  }
  for (auto& f : out) f = guarded ? universal_closure(joint, f) : typecheck(joint, f).formula;
  return out;
}

}  // namespace sigrel::folkit
