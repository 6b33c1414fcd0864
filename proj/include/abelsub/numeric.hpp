#pragma once

// Exact arithmetic in real quadratic fields Q(sqrt d).
//
// A Quadratic holds r + s*sqrt(d) with r, s rational and d squarefree. Every
// comparison is decided with integer arithmetic, so predicates such as
// g(i) > alpha*i + C never depend on rounding.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "abelsub/error.hpp"

namespace abelsub {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor_of(const Rational& q) { return floor_div(numerator_of(q), denominator_of(q)); }
inline Integer ceil_of(const Rational& q) { return -floor_div(-numerator_of(q), denominator_of(q)); }

inline std::string to_string(const Rational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(long long v) : r_(v) {}  // NOLINT: integers embed implicitly
  Quadratic(Rational r) : r_(std::move(r)) {}  // NOLINT
  Quadratic(Rational r, Rational s, std::int64_t d) : r_(std::move(r)), s_(std::move(s)), d_(d) {
    normalize();
  }

  static Quadratic sqrt_of(std::int64_t d) { return Quadratic(Rational(0), Rational(1), d); }
  static Quadratic ratio(long long p, long long q) {
    if (q == 0) throw DomainError("zero denominator");
    return Quadratic(Rational(p) / Rational(q));
  }

  const Rational& rational_part() const { return r_; }
  const Rational& sqrt_coefficient() const { return s_; }
  /// Radicand of the field this element lives in; 0 for rationals.
  std::int64_t radicand() const { return s_ == 0 ? 0 : d_; }
  bool is_rational() const { return s_ == 0; }

  int sign() const {
    const int sr = r_.sign();
    const int ss = s_.sign();
    if (ss == 0) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    Rational lhs = r_ * r_;
    Rational rhs = s_ * s_ * Rational(d_);
    // r and s*sqrt(d) have opposite signs: the larger magnitude wins.
    if (lhs == rhs) return 0;  // unreachable for squarefree d, kept for totality
    return lhs > rhs ? sr : ss;
  }

  Quadratic conjugate() const {
    Quadratic c = *this;
    c.s_ = -c.s_;
    return c;
  }

  /// r^2 - s^2 d, the field norm.
  Rational norm() const { return r_ * r_ - s_ * s_ * Rational(d_); }

  Quadratic inverse() const {
    if (sign() == 0) throw DomainError("division by zero in quadratic field");
    Rational n = norm();
    Quadratic c = conjugate();
    c.r_ /= n;
    c.s_ /= n;
    return c;
  }

  Integer floor() const {
    if (is_rational()) return floor_of(r_);
    Integer n(static_cast<long long>(std::floor(to_double())));
    while (*this < Quadratic(Rational(n))) --n;
    while (*this >= Quadratic(Rational(n + 1))) ++n;
    return n;
  }
  Integer ceil() const {
    Integer f = floor();
    return (*this == Quadratic(Rational(f))) ? f : f + 1;
  }
  Quadratic fractional_part() const { return *this - Quadratic(Rational(floor())); }

  double to_double() const {
    return static_cast<double>(r_) + static_cast<double>(s_) * std::sqrt(static_cast<double>(d_));
  }

  Quadratic& operator+=(const Quadratic& o) {
    const std::int64_t d = common_radicand(o);
    r_ += o.r_;
    s_ += o.s_;
    d_ = d;
    normalize();
    return *this;
  }
  Quadratic& operator-=(const Quadratic& o) { return *this += -o; }
  Quadratic& operator*=(const Quadratic& o) {
    const std::int64_t d = common_radicand(o);
    Rational r = r_ * o.r_ + s_ * o.s_ * Rational(d);
    Rational s = r_ * o.s_ + s_ * o.r_;
    r_ = std::move(r);
    s_ = std::move(s);
    d_ = d;
    normalize();
    return *this;
  }
  Quadratic& operator/=(const Quadratic& o) { return *this *= o.inverse(); }

  friend Quadratic operator-(Quadratic a) {
    a.r_ = -a.r_;
    a.s_ = -a.s_;
    return a;
  }
  friend Quadratic operator+(Quadratic a, const Quadratic& b) { return a += b; }
  friend Quadratic operator-(Quadratic a, const Quadratic& b) { return a -= b; }
  friend Quadratic operator*(Quadratic a, const Quadratic& b) { return a *= b; }
  friend Quadratic operator/(Quadratic a, const Quadratic& b) { return a /= b; }

  friend bool operator==(const Quadratic& a, const Quadratic& b) {
    return a.r_ == b.r_ && a.s_ == b.s_ && (a.s_ == 0 || a.d_ == b.d_);
  }
  friend std::strong_ordering operator<=>(const Quadratic& a, const Quadratic& b) {
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Canonical literal: "p/q" for rationals, "(a+b*sqrt(d))/c" otherwise,
  /// with c > 0 and gcd(a, b, c) = 1.
  std::string render() const {
    if (is_rational()) return to_string(r_);
    Integer c = boost::multiprecision::lcm(denominator_of(r_), denominator_of(s_));
    Integer a = numerator_of(r_) * (c / denominator_of(r_));
    Integer b = numerator_of(s_) * (c / denominator_of(s_));
    std::string out = "(" + a.str();
    out += (b < 0 ? "-" : "+");
    Integer ab = b < 0 ? Integer(-b) : b;
    if (ab != 1) out += ab.str() + "*";
    out += "sqrt(" + std::to_string(d_) + "))";
    if (c != 1) out += "/" + c.str();
    return out;
  }

 private:
  std::int64_t common_radicand(const Quadratic& o) const {
    if (s_ == 0) return o.s_ == 0 ? 0 : o.d_;
    if (o.s_ == 0) return d_;
    if (d_ != o.d_)
      throw DomainError("elements of different quadratic fields: sqrt(" + std::to_string(d_) +
                        ") vs sqrt(" + std::to_string(o.d_) + ")");
    return d_;
  }

  void normalize() {
    if (s_ == 0) {
      d_ = 0;
      return;
    }
    if (d_ < 0) throw DomainError("negative radicand is not a real quadratic field");
    // Pull square factors out of d.
    std::int64_t d = d_;
    std::int64_t k = 1;
    for (std::int64_t p = 2; p * p <= d; ++p) {
      while (d % (p * p) == 0) {
        d /= p * p;
        k *= p;
      }
    }
    s_ *= k;
    if (d == 1 || d == 0) {
      if (d == 1) r_ += s_;
      s_ = 0;
      d_ = 0;
      return;
    }
    d_ = d;
  }

  Rational r_{0};
  Rational s_{0};
  std::int64_t d_{0};
};

namespace detail {

// Recursive-descent evaluator for field-element literals such as
// "(3-sqrt(5))/2", "2/5", "1-(3-sqrt(5))/2".
class QuadraticParser {
 public:
  explicit QuadraticParser(std::string_view text) : text_(text) {}

  Quadratic parse() {
    Quadratic v = expr();
    skip_space();
    if (pos_ != text_.size())
      throw ConfigError("unexpected '" + std::string(text_.substr(pos_)) + "' in number literal '" +
                        std::string(text_) + "'");
    return v;
  }

 private:
  Quadratic expr() {
    Quadratic v = term();
    for (;;) {
      skip_space();
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }
  Quadratic term() {
    Quadratic v = factor();
    for (;;) {
      skip_space();
      if (accept('*')) v *= factor();
      else if (accept('/')) {
        Quadratic q = factor();
        if (q.sign() == 0) throw ConfigError("division by zero in '" + std::string(text_) + "'");
        v /= q;
      } else return v;
    }
  }
  Quadratic factor() {
    skip_space();
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    if (accept('(')) {
      Quadratic v = expr();
      expect(')');
      return v;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      Integer n = integer();
      expect(')');
      if (n < 0) throw ConfigError("sqrt of a negative number");
      return Quadratic::sqrt_of(static_cast<std::int64_t>(n));
    }
    return Quadratic(Rational(integer()));
  }
  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ConfigError("expected a number in '" + std::string(text_) + "'");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ConfigError(std::string("expected '") + c + "' in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Quadratic parse_quadratic(std::string_view text) { return detail::QuadraticParser(text).parse(); }

/// A letter frequency: rational or real quadratic, constrained to [0, 1].
class Slope {
 public:
  Slope() = default;
  explicit Slope(Quadratic value) : value_(std::move(value)) {
    if (value_ < Quadratic(0) || value_ > Quadratic(1))
      throw DomainError("slope " + value_.render() + " outside [0,1]");
  }
  static Slope parse(std::string_view text) { return Slope(parse_quadratic(text)); }
  static Slope ratio(long long p, long long q) { return Slope(Quadratic::ratio(p, q)); }

  const Quadratic& value() const { return value_; }
  bool is_rational() const { return value_.is_rational(); }
  std::string render() const { return value_.render(); }
  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Quadratic value_{};
};

/// The golden-ratio slope (3 - sqrt 5)/2 of the Fibonacci word.
inline Quadratic fibonacci_slope() { return Quadratic(Rational(3, 2), Rational(-1, 2), 5); }

}  // namespace abelsub
