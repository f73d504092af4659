// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "sigrel/error.hpp"

namespace sigrel {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

enum class Backend { exact, approx };

inline constexpr double kDefaultEps = 1e-12;

inline std::string_view to_string(Backend b) { return b == Backend::exact ? "exact" : "approx"; }

inline Backend parse_backend(std::string_view s) {
  if (s == "exact") return Backend::exact;
  if (s == "approx") return Backend::approx;
  throw Error(ErrorKind::ConfigError, "unknown field backend '" + std::string(s) + "'");
}

/// Element of the quantity field.
///
/// The exact backend holds an arbitrary-precision rational; every operation is
/// exact and equality is decidable. The approximate backend holds a 50-digit
/// binary float and compares with the mixed tolerance
/// |a - b| <= eps * max(1, |a|, |b|). Mixing the two promotes to approximate.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  static Scalar exact(Rational r) {
    Scalar s;
    s.value_ = std::move(r);
    return s;
  }
  static Scalar ratio(long long num, long long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    return exact(Rational(num, den));
  }
  static Scalar approx(Real r, double eps = kDefaultEps) {
    Scalar s;
    s.value_ = std::move(r);
    s.eps_ = eps;
    return s;
  }

  /// Parses "p", "p/q" or a decimal literal. Under the exact backend decimals
  /// are read as the rational they denote.
  static Scalar parse(std::string_view text, Backend backend, double eps = kDefaultEps) {
    std::string s(text);
    auto trim = [](std::string& str) {
      auto b = str.find_first_not_of(" \t\n\r");
      auto e = str.find_last_not_of(" \t\n\r");
      str = b == std::string::npos ? std::string() : str.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw Error(ErrorKind::ConfigError, "empty scalar literal");
    try {
      if (backend == Backend::approx) {
        if (auto slash = s.find('/'); slash != std::string::npos) {
          Real n(s.substr(0, slash));
          Real d(s.substr(slash + 1));
          if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
          return approx(n / d, eps);
        }
        return approx(Real(s), eps);
      }
      if (auto slash = s.find('/'); slash != std::string::npos) {
        Integer n(strip_zeros(s.substr(0, slash)));
        Integer d(strip_zeros(s.substr(slash + 1)));
        if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
        return exact(Rational(n, d));
      }
      return exact(parse_decimal(s));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(ErrorKind::ConfigError, "malformed scalar literal '" + s + "'");
    }
  }

  bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
  Backend backend() const noexcept { return is_exact() ? Backend::exact : Backend::approx; }
  double eps() const noexcept { return eps_; }

  const Rational& rational() const {
    if (!is_exact()) throw Error(ErrorKind::DomainError, "approximate scalar has no rational value");
    return std::get<Rational>(value_);
  }
  Real real() const {
    if (is_exact()) {
      const auto& r = std::get<Rational>(value_);
      return Real(numerator(r)) / Real(denominator(r));
    }
    return std::get<Real>(value_);
  }
  double to_double() const { return static_cast<double>(real()); }

  /// Re-expresses the value in the given backend.
  Scalar to(Backend b, double eps = kDefaultEps) const {
    if (b == Backend::exact) {
      if (!is_exact()) throw Error(ErrorKind::DomainError, "cannot convert approximate scalar to exact");
      return *this;
    }
    return approx(real(), is_exact() ? eps : eps_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
  }
  Scalar operator-() const {
    Scalar s = *this;
    std::visit([](auto& v) { v = -v; }, s.value_);
    return s;
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Three-way comparison; approximate values within tolerance compare equal.
  friend std::weak_ordering cmp(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) {
      const auto& x = std::get<Rational>(a.value_);
      const auto& y = std::get<Rational>(b.value_);
      if (x < y) return std::weak_ordering::less;
      if (y < x) return std::weak_ordering::greater;
      return std::weak_ordering::equivalent;
    }
    Real x = a.real();
    Real y = b.real();
    Real scale = std::max({Real(1), abs(x), abs(y)});
    double eps = std::max(a.is_exact() ? 0.0 : a.eps_, b.is_exact() ? 0.0 : b.eps_);
    if (abs(x - y) <= Real(eps) * scale) return std::weak_ordering::equivalent;
    return x < y ? std::weak_ordering::less : std::weak_ordering::greater;
  }
  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a, b) == 0; }
  friend std::weak_ordering operator<=>(const Scalar& a, const Scalar& b) { return cmp(a, b); }

  bool is_zero() const { return cmp(*this, Scalar(0)) == 0; }
  int sign() const {
    auto c = cmp(*this, Scalar(0));
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }

  friend Scalar abs(const Scalar& a) { return a.sign() < 0 ? -a : a; }

  /// Square root. The exact backend only succeeds on squares of rationals.
  friend Scalar sqrt(const Scalar& a) {
    int s = a.sign();
    if (s < 0) throw Error(ErrorKind::DomainError, "square root of negative quantity " + a.str());
    if (s == 0) return a.is_exact() ? Scalar(0) : approx(Real(0), a.eps_);
    if (a.is_exact()) {
      const auto& r = std::get<Rational>(a.value_);
      Integer n = numerator(r);
      Integer d = denominator(r);
      Integer rn = boost::multiprecision::sqrt(n);
      Integer rd = boost::multiprecision::sqrt(d);
      if (rn * rn != n || rd * rd != d) {
        throw Error(ErrorKind::NonConstructibleExact, "square root of " + a.str() + " is not rational");
      }
      return exact(Rational(rn, rd));
    }
    return approx(boost::multiprecision::sqrt(std::get<Real>(a.value_)), a.eps_);
  }

  /// "p/q" (or "p") for exact values; a 30-significant-digit decimal otherwise.
  std::string str() const {
    if (is_exact()) {
      const auto& r = std::get<Rational>(value_);
      if (denominator(r) == 1) return numerator(r).str();
      return numerator(r).str() + "/" + denominator(r).str();
    }
    const Real& v = std::get<Real>(value_);
    if (v == 0) return "0";
    return v.str(30, std::ios_base::scientific);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  template <class Op>
  static Scalar combine(const Scalar& a, const Scalar& b, Op op) {
    if (a.is_exact() && b.is_exact()) {
      return exact(op(std::get<Rational>(a.value_), std::get<Rational>(b.value_)));
    }
    double eps = std::max(a.is_exact() ? 0.0 : a.eps_, b.is_exact() ? 0.0 : b.eps_);
    return approx(Real(op(a.real(), b.real())), eps);
  }

  static std::string strip_zeros(std::string s) {
    std::string sign;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
      sign = s[0] == '-' ? "-" : "";
      s = s.substr(1);
    }
    auto nz = s.find_first_not_of('0');
    return sign + (nz == std::string::npos ? std::string("0") : s.substr(nz));
  }

  static Rational parse_decimal(const std::string& s) {
    std::string mant = s;
    long long exp10 = 0;
    if (auto e = mant.find_first_of("eE"); e != std::string::npos) {
      exp10 = std::stoll(mant.substr(e + 1));
      mant = mant.substr(0, e);
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
      neg = mant[0] == '-';
      mant = mant.substr(1);
    }
    if (auto dot = mant.find('.'); dot != std::string::npos) {
      exp10 -= static_cast<long long>(mant.size() - dot - 1);
      mant.erase(dot, 1);
    }
    if (mant.empty() || mant.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::ConfigError, "malformed decimal '" + s + "'");
    }
    // Strip leading zeros: a leading 0 would be read as an octal prefix.
    auto nz = mant.find_first_not_of('0');
    Integer m(nz == std::string::npos ? std::string("0") : mant.substr(nz));
    Integer p = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(exp10 < 0 ? -exp10 : exp10));
    Rational r = exp10 < 0 ? Rational(m, p) : Rational(m * p);
    return neg ? Rational(-r) : r;
  }

  std::variant<Rational, Real> value_;
  double eps_ = kDefaultEps;
};

inline Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

/// Builds the literal in the requested backend.
inline Scalar make_scalar(const Rational& r, Backend b, double eps = kDefaultEps) {
  return b == Backend::exact ? Scalar::exact(r) : Scalar::exact(r).to(Backend::approx, eps);
}

}  // namespace sigrel
