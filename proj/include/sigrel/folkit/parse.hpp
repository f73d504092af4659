// SPDX-License-Identifier: Apache-2.0
// S-expression reader for formulas.
//
//   formula := true | false
//            | (R v1 ... vn)                 relation atom
//            | (= v w) | (!= v w)
//            | (not f) | (and f ...) | (or f ...) | (-> f g) | (<-> f g)
//            | (exists (v S) f) | (exists ((v S) (w T) ...) f)   likewise forall
//
// Comments run from ';' to the end of the line.
#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "sigrel/folkit/formula.hpp"

namespace sigrel::folkit {

namespace detail {

struct Sexpr {
  bool is_list = false;
  std::string atom;
  std::vector<Sexpr> items;
  std::size_t pos = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Sexpr read_all() {
    skip();
    if (at_ >= text_.size()) fail("empty input");
    Sexpr s = read();
    skip();
    if (at_ < text_.size()) fail("unexpected text after the formula");
    return s;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t pos = std::string::npos) const {
    throw Error(ErrorKind::SyntaxError, what + " at " + where(pos == std::string::npos ? at_ : pos));
  }

  std::string where(std::size_t pos) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return std::to_string(line) + ":" + std::to_string(col);
  }

 private:
  void skip() {
    while (at_ < text_.size()) {
      char c = text_[at_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++at_;
      } else if (c == ';') {
        while (at_ < text_.size() && text_[at_] != '\n') ++at_;
      } else {
        break;
      }
    }
  }

  Sexpr read() {
    skip();
    if (at_ >= text_.size()) fail("unexpected end of input");
    Sexpr s;
    s.pos = at_;
    char c = text_[at_];
    if (c == ')') fail("unexpected ')'");
    if (c == '(') {
      ++at_;
      s.is_list = true;
      for (;;) {
        skip();
        if (at_ >= text_.size()) fail("missing ')'", s.pos);
        if (text_[at_] == ')') {
          ++at_;
          return s;
        }
        s.items.push_back(read());
      }
    }
    while (at_ < text_.size()) {
      char d = text_[at_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';') break;
      s.atom.push_back(d);
      ++at_;
    }
    return s;
  }

  std::string_view text_;
  std::size_t at_ = 0;
};

inline Formula build(const Sexpr& s, const Reader& rd);

inline std::vector<Binder> binders(const Sexpr& s, const Reader& rd) {
  auto one = [&](const Sexpr& b) {
    if (!b.is_list || b.items.size() != 2 || b.items[0].is_list || b.items[1].is_list) {
      rd.fail("a binder is (variable Sort)", b.pos);
    }
    return Binder{b.items[0].atom, b.items[1].atom};
  };
  if (!s.is_list || s.items.empty()) rd.fail("expected binders", s.pos);
  if (!s.items[0].is_list) return {one(s)};
  std::vector<Binder> out;
  for (const auto& b : s.items) out.push_back(one(b));
  return out;
}

inline Formula build(const Sexpr& s, const Reader& rd) {
  if (!s.is_list) {
    if (s.atom == "true") return truth();
    if (s.atom == "false") return falsity();
    rd.fail("expected a formula, found '" + s.atom + "'", s.pos);
  }
  if (s.items.empty()) rd.fail("empty list", s.pos);
  if (s.items[0].is_list) rd.fail("expected an operator or relation name", s.pos);
  const std::string& head = s.items[0].atom;
  std::size_t n = s.items.size() - 1;
  auto kid = [&](std::size_t i) { return build(s.items[i], rd); };
  auto var = [&](std::size_t i) {
    if (s.items[i].is_list) rd.fail("expected a variable", s.items[i].pos);
    return s.items[i].atom;
  };
  auto arity = [&](std::size_t want) {
    if (n != want) rd.fail("'" + head + "' takes " + std::to_string(want) + " operands", s.pos);
  };
  if (head == "=" || head == "!=") {
    arity(2);
    Formula e = eq(var(1), var(2));
    return head == "=" ? e : neg(e);
  }
  if (head == "not") {
    arity(1);
    return neg(kid(1));
  }
  if (head == "and" || head == "or") {
    std::vector<Formula> parts;
    for (std::size_t i = 1; i <= n; ++i) parts.push_back(kid(i));
    return head == "and" ? conj(parts) : disj(parts);
  }
  if (head == "->" || head == "<->") {
    arity(2);
    return head == "->" ? implies(kid(1), kid(2)) : iff(kid(1), kid(2));
  }
  if (head == "exists" || head == "forall") {
    arity(2);
    std::vector<Binder> bs = binders(s.items[1], rd);
    return head == "exists" ? exists(bs, kid(2)) : forall(bs, kid(2));
  }
  std::vector<std::string> args;
  for (std::size_t i = 1; i <= n; ++i) args.push_back(var(i));
  return atom(head, args);
}

}  // namespace detail

/// Reads a formula without sort checking.
inline Formula parse_raw(std::string_view text) {
  detail::Reader rd(text);
  return detail::build(rd.read_all(), rd);
}

/// Reads and sort-checks a formula over sig.
inline Formula parse(std::string_view text, const Signature& sig, const SortMap& context = {}) {
  return typecheck(sig, parse_raw(text), context).formula;
}

}  // namespace sigrel::folkit
