// SPDX-License-Identifier: Apache-2.0
// Many-sorted first-order formulas: signatures, an immutable AST, sort
// checking with inference for free variables, printers, and alpha-equivalence.
// Terms are variables only; function symbols are encoded as relations.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sigrel/error.hpp"

namespace sigrel::folkit {

struct Signature {
  std::vector<std::string> sorts;
  std::map<std::string, std::vector<std::string>> relations;

  bool has_sort(const std::string& s) const { return std::find(sorts.begin(), sorts.end(), s) != sorts.end(); }
  bool has_relation(const std::string& r) const { return relations.count(r) > 0; }
};

enum class Op { atom, eq, truth, falsity, neg, conj, disj, implies, iff, exists, forall };

struct Binder {
  std::string var;
  std::string sort;
  friend bool operator==(const Binder&, const Binder&) = default;
};

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
  Op op = Op::truth;
  std::string rel;                // atom: relation name
  std::vector<std::string> args;  // atom arguments, or the two sides of eq
  std::string sort;               // eq: the sort of both sides, once checked
  std::vector<Formula> kids;
  std::vector<Binder> binders;    // quantifiers
};

using SortMap = std::map<std::string, std::string>;

// ---------------------------------------------------------------------------
// Builders

inline Formula make(Node n) { return std::make_shared<const Node>(std::move(n)); }

inline Formula atom(std::string rel, std::vector<std::string> args) {
  Node n;
  n.op = Op::atom;
  n.rel = std::move(rel);
  n.args = std::move(args);
  return make(std::move(n));
}

inline Formula eq(std::string a, std::string b, std::string sort = {}) {
  Node n;
  n.op = Op::eq;
  n.args = {std::move(a), std::move(b)};
  n.sort = std::move(sort);
  return make(std::move(n));
}

inline Formula truth() {
  Node n;
  n.op = Op::truth;
  return make(std::move(n));
}
inline Formula falsity() {
  Node n;
  n.op = Op::falsity;
  return make(std::move(n));
}

inline Formula neg(Formula f) {
  Node n;
  n.op = Op::neg;
  n.kids = {std::move(f)};
  return make(std::move(n));
}

/// n-ary connective; nested conjunctions (disjunctions) are flattened, the
/// empty conjunction is true and the empty disjunction false.
inline Formula nary(Op op, const std::vector<Formula>& parts) {
  Node n;
  n.op = op;
  for (const Formula& p : parts) {
    if (p->op == op) {
      n.kids.insert(n.kids.end(), p->kids.begin(), p->kids.end());
    } else {
      n.kids.push_back(p);
    }
  }
  if (n.kids.empty()) return op == Op::conj ? truth() : falsity();
  if (n.kids.size() == 1) return n.kids.front();
  return make(std::move(n));
}

inline Formula conj(const std::vector<Formula>& parts) { return nary(Op::conj, parts); }
inline Formula disj(const std::vector<Formula>& parts) { return nary(Op::disj, parts); }

inline Formula binary(Op op, Formula a, Formula b) {
  Node n;
  n.op = op;
  n.kids = {std::move(a), std::move(b)};
  return make(std::move(n));
}
inline Formula implies(Formula a, Formula b) { return binary(Op::implies, std::move(a), std::move(b)); }
inline Formula iff(Formula a, Formula b) { return binary(Op::iff, std::move(a), std::move(b)); }

inline Formula quantify(Op op, std::vector<Binder> bs, Formula body) {
  if (bs.empty()) return body;
  Node n;
  n.op = op;
  n.binders = std::move(bs);
  n.kids = {std::move(body)};
  return make(std::move(n));
}
inline Formula exists(std::vector<Binder> bs, Formula body) { return quantify(Op::exists, std::move(bs), std::move(body)); }
inline Formula forall(std::vector<Binder> bs, Formula body) { return quantify(Op::forall, std::move(bs), std::move(body)); }

inline bool is_quantifier(Op op) { return op == Op::exists || op == Op::forall; }

// ---------------------------------------------------------------------------
// Variables

inline void collect_free(const Formula& f, std::set<std::string> bound, std::vector<std::string>& out) {
  auto add = [&](const std::string& v) {
    if (!bound.count(v) && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  switch (f->op) {
    case Op::atom:
    case Op::eq:
      for (const auto& a : f->args) add(a);
      return;
    case Op::exists:
    case Op::forall:
      for (const auto& b : f->binders) bound.insert(b.var);
      collect_free(f->kids[0], bound, out);
      return;
    default:
      for (const auto& k : f->kids) collect_free(k, bound, out);
  }
}

/// Free variables in order of first occurrence.
inline std::vector<std::string> free_vars(const Formula& f) {
  std::vector<std::string> out;
  collect_free(f, {}, out);
  return out;
}

/// Every variable name occurring in f, free or bound.
inline void all_vars(const Formula& f, std::set<std::string>& out) {
  for (const auto& a : f->args) out.insert(a);
  for (const auto& b : f->binders) out.insert(b.var);
  for (const auto& k : f->kids) all_vars(k, out);
}

inline int quantifier_depth(const Formula& f) {
  int d = 0;
  for (const auto& k : f->kids) d = std::max(d, quantifier_depth(k));
  return d + (is_quantifier(f->op) ? static_cast<int>(f->binders.size()) : 0);
}

/// `base` if unused, else base with the least numeric suffix that is unused.
/// The chosen name is added to `taken`.
inline std::string fresh(const std::string& base, std::set<std::string>& taken) {
  std::string name = base;
  for (int i = 1; taken.count(name); ++i) name = base + std::to_string(i);
  taken.insert(name);
  return name;
}

/// Capture-avoiding renaming of free variables. Bound variables that would
/// capture a substituted name are renamed apart.
inline Formula rename_free(const Formula& f, const std::map<std::string, std::string>& sub,
                           std::set<std::string>& taken) {
  switch (f->op) {
    case Op::atom:
    case Op::eq: {
      Node n = *f;
      for (auto& a : n.args) {
        auto it = sub.find(a);
        if (it != sub.end()) a = it->second;
      }
      return make(std::move(n));
    }
    case Op::truth:
    case Op::falsity: return f;
    case Op::exists:
    case Op::forall: {
      std::map<std::string, std::string> inner = sub;
      std::set<std::string> targets;
      for (const auto& [from, to] : sub) targets.insert(to);
      Node n = *f;
      for (auto& b : n.binders) {
        inner.erase(b.var);
        if (targets.count(b.var) || taken.count(b.var)) {
          std::string nv = fresh(b.var, taken);
          inner[b.var] = nv;
          b.var = nv;
        } else {
          taken.insert(b.var);
        }
      }
      n.kids = {rename_free(f->kids[0], inner, taken)};
      return make(std::move(n));
    }
    default: {
      Node n = *f;
      for (auto& k : n.kids) k = rename_free(k, sub, taken);
      return make(std::move(n));
    }
  }
}

// ---------------------------------------------------------------------------
// Sort checking

namespace detail {

using Scope = std::vector<std::pair<std::string, std::string>>;

inline const std::string* lookup(const Scope& scope, const std::string& v) {
  for (auto it = scope.rbegin(); it != scope.rend(); ++it)
    if (it->first == v) return &it->second;
  return nullptr;
}

/// One inference sweep: assigns sorts to free variables from atom positions
/// and from equalities that are tagged or have one known side. Returns whether anything changed.
inline bool infer(const Signature& sig, const Formula& f, Scope& scope, SortMap& free) {
  auto sort_of = [&](const std::string& v) -> const std::string* {
    if (const std::string* s = lookup(scope, v)) return s;
    auto it = free.find(v);
    return it == free.end() ? nullptr : &it->second;
  };
  bool changed = false;
  switch (f->op) {
    case Op::atom: {
      auto rel = sig.relations.find(f->rel);
      if (rel == sig.relations.end()) throw Error(ErrorKind::SortError, "unknown relation '" + f->rel + "'");
      if (rel->second.size() != f->args.size()) {
        throw Error(ErrorKind::SortError, "relation '" + f->rel + "' expects " + std::to_string(rel->second.size()) +
                                              " arguments, got " + std::to_string(f->args.size()));
      }
      for (std::size_t i = 0; i < f->args.size(); ++i) {
        if (!sort_of(f->args[i])) {
          free[f->args[i]] = rel->second[i];
          changed = true;
        }
      }
      return changed;
    }
    case Op::eq: {
      const std::string* a = sort_of(f->args[0]);
      const std::string* b = sort_of(f->args[1]);
      if (!f->sort.empty()) {
        // A tagged equality fixes the sort of both sides.
        for (const auto& v : f->args)
          if (!sort_of(v)) free[v] = f->sort, changed = true;
        return changed;
      }
      if (a && !b) free[f->args[1]] = *a, changed = true;
      if (b && !a) free[f->args[0]] = *b, changed = true;
      return changed;
    }
    case Op::exists:
    case Op::forall: {
      for (const auto& b : f->binders) {
        if (!sig.has_sort(b.sort)) throw Error(ErrorKind::SortError, "unknown sort '" + b.sort + "'");
        scope.emplace_back(b.var, b.sort);
      }
      changed = infer(sig, f->kids[0], scope, free);
      scope.resize(scope.size() - f->binders.size());
      return changed;
    }
    default:
      for (const auto& k : f->kids) changed = infer(sig, k, scope, free) || changed;
      return changed;
  }
}

inline Formula check(const Signature& sig, const Formula& f, Scope& scope, const SortMap& free) {
  auto sort_of = [&](const std::string& v) -> std::string {
    if (const std::string* s = lookup(scope, v)) return *s;
    auto it = free.find(v);
    if (it == free.end()) throw Error(ErrorKind::SortError, "cannot determine the sort of '" + v + "'");
    return it->second;
  };
  switch (f->op) {
    case Op::atom: {
      const auto& want = sig.relations.at(f->rel);
      for (std::size_t i = 0; i < f->args.size(); ++i) {
        std::string got = sort_of(f->args[i]);
        if (got != want[i]) {
          throw Error(ErrorKind::SortError, "argument " + std::to_string(i + 1) + " of '" + f->rel + "' must be of sort " +
                                                want[i] + ", but '" + f->args[i] + "' is of sort " + got);
        }
      }
      return f;
    }
    case Op::eq: {
      std::string a = sort_of(f->args[0]), b = sort_of(f->args[1]);
      if (a != b) {
        throw Error(ErrorKind::SortError, "equality between sorts " + a + " and " + b);
      }
      if (!f->sort.empty() && f->sort != a) throw Error(ErrorKind::SortError, "equality tagged with the wrong sort");
      return eq(f->args[0], f->args[1], a);
    }
    case Op::truth:
    case Op::falsity: return f;
    case Op::exists:
    case Op::forall: {
      for (const auto& b : f->binders) scope.emplace_back(b.var, b.sort);
      Formula body = check(sig, f->kids[0], scope, free);
      scope.resize(scope.size() - f->binders.size());
      return quantify(f->op, f->binders, body);
    }
    default: {
      Node n = *f;
      for (auto& k : n.kids) k = check(sig, k, scope, free);
      return make(std::move(n));
    }
  }
}

}  // namespace detail

struct Typed {
  Formula formula;
  SortMap free;  // sorts of the free variables
};

/// Checks that f is well-sorted over sig. Free variables take their sort from
/// `context` when listed there, otherwise it is inferred from their uses.
/// Equalities come back tagged with their sort.
inline Typed typecheck(const Signature& sig, const Formula& f, const SortMap& context = {}) {
  SortMap free = context;
  for (const auto& [v, s] : context) {
    if (!sig.has_sort(s)) throw Error(ErrorKind::SortError, "unknown sort '" + s + "'");
  }
  detail::Scope scope;
  while (detail::infer(sig, f, scope, free)) {
  }
  Formula checked = detail::check(sig, f, scope, free);
  SortMap out;
  for (const auto& v : free_vars(checked)) out[v] = free.at(v);
  return {checked, out};
}

/// Universally closes f over its free variables, in name order.
inline Formula universal_closure(const Signature& sig, const Formula& f, const SortMap& context = {}) {
  Typed t = typecheck(sig, f, context);
  std::vector<Binder> bs;
  for (const auto& [v, s] : t.free) bs.push_back({v, s});
  return forall(bs, t.formula);
}

// ---------------------------------------------------------------------------
// Printing

/// S-expression form, the input syntax of the parser.
inline std::string to_sexpr(const Formula& f) {
  auto list = [](const std::string& head, const std::vector<Formula>& kids) {
    std::string s = "(" + head;
    for (const auto& k : kids) s += " " + to_sexpr(k);
    return s + ")";
  };
  switch (f->op) {
    case Op::atom: {
      std::string s = "(" + f->rel;
      for (const auto& a : f->args) s += " " + a;
      return s + ")";
    }
    case Op::eq: return "(= " + f->args[0] + " " + f->args[1] + ")";
    case Op::truth: return "true";
    case Op::falsity: return "false";
    case Op::neg: return list("not", f->kids);
    case Op::conj: return list("and", f->kids);
    case Op::disj: return list("or", f->kids);
    case Op::implies: return list("->", f->kids);
    case Op::iff: return list("<->", f->kids);
    case Op::exists:
    case Op::forall: {
      std::string s = std::string("(") + (f->op == Op::exists ? "exists" : "forall") + " ";
      if (f->binders.size() == 1) {
        s += "(" + f->binders[0].var + " " + f->binders[0].sort + ")";
      } else {
        s += "(";
        for (std::size_t i = 0; i < f->binders.size(); ++i) {
          s += (i ? " (" : "(") + f->binders[i].var + " " + f->binders[i].sort + ")";
        }
        s += ")";
      }
      return s + " " + to_sexpr(f->kids[0]) + ")";
    }
  }
  return {};
}

/// Infix rendering in the notation of the printed definitions: conjunction
/// by comma, quantifiers binding several variables at once.
inline std::string to_text(const Formula& f, bool nested = false) {
  auto wrap = [&](const std::string& s) { return nested ? "(" + s + ")" : s; };
  auto join = [](const std::vector<Formula>& kids, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < kids.size(); ++i) s += (i ? sep : "") + to_text(kids[i], true);
    return s;
  };
  switch (f->op) {
    case Op::atom: {
      std::string s = f->rel + "(";
      for (std::size_t i = 0; i < f->args.size(); ++i) s += (i ? "," : "") + f->args[i];
      return s + ")";
    }
    case Op::eq: return f->args[0] + " = " + f->args[1];
    case Op::truth: return "⊤";
    case Op::falsity: return "⊥";
    case Op::neg:
      if (f->kids[0]->op == Op::eq) return f->kids[0]->args[0] + " ≠ " + f->kids[0]->args[1];
      return "¬" + to_text(f->kids[0], true);
    case Op::conj: return wrap(join(f->kids, ", "));
    case Op::disj: return wrap(join(f->kids, " ∨ "));
    case Op::implies: return wrap(join(f->kids, " → "));
    case Op::iff: return wrap(join(f->kids, " ↔ "));
    case Op::exists:
    case Op::forall: {
      std::string s = f->op == Op::exists ? "∃" : "∀";
      for (std::size_t i = 0; i < f->binders.size(); ++i) s += (i ? "," : "") + f->binders[i].var;
      const Formula& body = f->kids[0];
      bool simple = body->op == Op::atom || body->op == Op::eq || body->op == Op::neg || is_quantifier(body->op);
      return wrap(s + " " + (simple ? to_text(body, true) : "(" + to_text(body, false) + ")"));
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Alpha-equivalence

namespace detail {

inline bool alpha(const Formula& f, const Formula& g, std::vector<std::pair<std::string, std::string>>& env) {
  if (f->op != g->op) return false;
  auto same_var = [&](const std::string& a, const std::string& b) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      if (it->first == a || it->second == b) return it->first == a && it->second == b;
    }
    return a == b;
  };
  switch (f->op) {
    case Op::atom:
    case Op::eq:
      if (f->rel != g->rel || f->args.size() != g->args.size()) return false;
      for (std::size_t i = 0; i < f->args.size(); ++i)
        if (!same_var(f->args[i], g->args[i])) return false;
      return true;
    case Op::exists:
    case Op::forall: {
      if (f->binders.size() != g->binders.size()) return false;
      for (std::size_t i = 0; i < f->binders.size(); ++i) {
        if (f->binders[i].sort != g->binders[i].sort) return false;
        env.emplace_back(f->binders[i].var, g->binders[i].var);
      }
      bool ok = alpha(f->kids[0], g->kids[0], env);
      env.resize(env.size() - f->binders.size());
      return ok;
    }
    default:
      if (f->kids.size() != g->kids.size()) return false;
      for (std::size_t i = 0; i < f->kids.size(); ++i)
        if (!alpha(f->kids[i], g->kids[i], env)) return false;
      return true;
  }
}

}  // namespace detail

/// Equal up to the names of bound variables.
inline bool alpha_equivalent(const Formula& f, const Formula& g) {
  std::vector<std::pair<std::string, std::string>> env;
  return detail::alpha(f, g, env);
}

}  // namespace sigrel::folkit
