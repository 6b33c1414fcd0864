#pragma once

// Standard words, directive sequences, central words and rotation codings.

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelsub/morphism.hpp"
#include "abelsub/numeric.hpp"
#include "abelsub/standard_pair.hpp"
#include "abelsub/word.hpp"

namespace abelsub {

/// Directive sequence a_1, a_2, ... with a_1 >= 0 and a_n > 0 beyond the first.
/// Either eventually periodic (preperiod + nonempty period) or finite; a finite
/// sequence is terminated by omega and describes a periodic Sturmian word.
class DirectiveSequence {
 public:
  DirectiveSequence() = default;

  static DirectiveSequence eventually_periodic(std::vector<long long> pre, std::vector<long long> period) {
    if (period.empty()) throw ConfigError("directive sequence period must be nonempty");
    DirectiveSequence d;
    d.pre_ = std::move(pre);
    d.period_ = std::move(period);
    d.omega_ = false;
    d.validate();
    d.canonicalize();
    return d;
  }
  /// a_1..a_k followed by omega (when `omega` is false the sequence is merely
  /// truncated and cannot define a characteristic word).
  static DirectiveSequence finite(std::vector<long long> entries, bool omega = true) {
    DirectiveSequence d;
    d.pre_ = std::move(entries);
    d.omega_ = omega;
    d.validate();
    return d;
  }
  static DirectiveSequence fibonacci() { return eventually_periodic({}, {1}); }

  bool is_finite() const { return period_.empty(); }
  bool omega_terminated() const { return is_finite() && omega_; }
  std::size_t finite_length() const { return pre_.size(); }
  const std::vector<long long>& preperiod() const { return pre_; }
  const std::vector<long long>& period() const { return period_; }

  /// a_n for n >= 1.
  long long at(std::size_t n) const {
    if (n == 0) throw RangeError("directive sequences are indexed from 1");
    if (n <= pre_.size()) return pre_[n - 1];
    if (period_.empty()) throw RangeError("directive index " + std::to_string(n) + " beyond finite sequence");
    return period_[(n - 1 - pre_.size()) % period_.size()];
  }
  bool defined_at(std::size_t n) const { return n >= 1 && (n <= pre_.size() || !period_.empty()); }

  /// "a1,a2,..." for finite sequences, "pre:period" otherwise.
  std::string render() const {
    auto join = [](const std::vector<long long>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s;
    };
    if (is_finite()) return join(pre_);
    return join(pre_) + ":" + join(period_);
  }

  friend bool operator==(const DirectiveSequence&, const DirectiveSequence&) = default;

 private:
  void validate() const {
    for (std::size_t n = 1; defined_at(n) && n <= pre_.size() + period_.size(); ++n) {
      const long long a = at(n);
      if (n == 1 ? a < 0 : a <= 0)
        throw ConfigError("directive entry a_" + std::to_string(n) + " = " + std::to_string(a) + " out of range");
    }
  }

  // Shortest period, then shortest preperiod, so equal sequences compare equal.
  void canonicalize() {
    const std::size_t p = period_.size();
    for (std::size_t r = 1; r <= p; ++r) {
      if (p % r) continue;
      bool ok = true;
      for (std::size_t i = r; i < p && ok; ++i) ok = period_[i] == period_[i - r];
      if (ok) {
        period_.resize(r);
        break;
      }
    }
    while (!pre_.empty() && pre_.back() == period_.back()) {
      std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
      pre_.pop_back();
    }
  }

  std::vector<long long> pre_;
  std::vector<long long> period_;
  bool omega_ = true;
};

/// S_n for n >= -1: S_{-1} = 1, S_0 = 0, S_n = S_{n-1}^{a_n} S_{n-2}.
inline FiniteWord standard_sequence(const DirectiveSequence& dir, long long n) {
  if (n < -1) throw RangeError("standard sequence index below -1");
  if (n == -1) return FiniteWord("1");
  FiniteWord prev("1"), cur("0");
  for (long long k = 1; k <= n; ++k) {
    if (!dir.defined_at(static_cast<std::size_t>(k)))
      throw RangeError("S_" + std::to_string(n) + " needs a_" + std::to_string(k) + " of a finite directive sequence");
    FiniteWord next = cur.power(static_cast<std::size_t>(dir.at(static_cast<std::size_t>(k)))) + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// First n letters of the characteristic word lim S_n.
inline FiniteWord characteristic_prefix(const DirectiveSequence& dir, std::size_t n) {
  if (dir.is_finite()) throw ConfigError("characteristic word needs an infinite directive sequence");
  FiniteWord prev("1"), cur("0");
  // S_k begins with S_{k-1} for k >= 2, so any S_k with k >= 2 and |S_k| >= n
  // carries the limit's prefix.
  for (std::size_t k = 1;; ++k) {
    FiniteWord next = cur.power(static_cast<std::size_t>(dir.at(k))) + prev;
    prev = std::move(cur);
    cur = std::move(next);
    if (k >= 2 && cur.size() >= n) return cur.prefix(n);
  }
}

struct ContinuedFraction {
  Integer integer_part;
  /// Partial quotients c_1, c_2, ...: preperiod then repeating period (empty
  /// for rationals).
  std::vector<long long> pre;
  std::vector<long long> period;
};

/// Continued fraction of a rational or real quadratic number. Quadratic
/// irrationals are eventually periodic (Lagrange); the period is found by
/// detecting a repeated complete quotient.
inline ContinuedFraction continued_fraction(const Quadratic& x, std::size_t max_terms = 100000) {
  ContinuedFraction cf;
  cf.integer_part = x.floor();
  Quadratic rest = x - Quadratic(Rational(cf.integer_part));
  if (x.is_rational()) {
    while (rest.sign() != 0) {
      Quadratic inv = rest.inverse();
      Integer a = inv.floor();
      cf.pre.push_back(static_cast<long long>(a));
      rest = inv - Quadratic(Rational(a));
    }
    return cf;
  }
  // Complete quotients x_k = 1/rest; identical x_k means the tail repeats.
  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  std::vector<long long> terms;
  for (std::size_t k = 0; k < max_terms; ++k) {
    Quadratic complete = rest.inverse();
    auto key = std::make_pair(to_string(complete.rational_part()), to_string(complete.sqrt_coefficient()));
    if (auto it = seen.find(key); it != seen.end()) {
      cf.pre.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(it->second));
      cf.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(it->second), terms.end());
      return cf;
    }
    seen.emplace(std::move(key), k);
    Integer a = complete.floor();
    terms.push_back(static_cast<long long>(a));
    rest = complete - Quadratic(Rational(a));
  }
  throw ResourceError("continued fraction period not found within " + std::to_string(max_terms) + " terms");
}

/// Directive sequence of a slope in (0,1): alpha = [0; a_1 + 1, a_2, a_3, ...].
/// a_1 = 0 exactly when alpha > 1/2 (the letters exchange roles).
/// Rational slopes give omega-terminated finite sequences.
inline DirectiveSequence directive_of_slope(const Slope& slope) {
  const Quadratic& a = slope.value();
  if (a.sign() <= 0 || a >= Quadratic(1)) throw DomainError("directive sequence needs a slope in (0,1)");
  ContinuedFraction cf = continued_fraction(a);
  std::vector<long long> pre = cf.pre;
  std::vector<long long> period = cf.period;
  if (pre.empty()) pre = period;  // unroll one period so a_1 can be adjusted
  pre[0] -= 1;
  if (period.empty()) return DirectiveSequence::finite(std::move(pre));
  return DirectiveSequence::eventually_periodic(std::move(pre), std::move(period));
}

/// Slope (1-frequency) of the characteristic word with the given directive sequence.
inline Quadratic slope_of_directive(const DirectiveSequence& dir) {
  if (dir.is_finite()) {
    FiniteWord s = standard_sequence(dir, static_cast<long long>(dir.finite_length()));
    return Quadratic(Rational(static_cast<long long>(s.weight()), static_cast<long long>(s.size())));
  }
  // Purely periodic tail T = [p_0; p_1, ..., p_{m-1}, T]. With
  // [[P,Q],[R,S]] = prod [[p_i,1],[1,0]], T solves R T^2 + (S - P) T - Q = 0.
  const auto& per = dir.period();
  Integer P = 1, Q = 0, R = 0, S = 1;
  for (long long c : per) {
    Integer nP = P * c + Q, nR = R * c + S;
    Q = P;
    S = R;
    P = nP;
    R = nR;
  }
  const Integer disc = (S - P) * (S - P) + 4 * R * Q;
  Quadratic value(Rational(P - S) / Rational(2 * R), Rational(1) / Rational(2 * R), static_cast<std::int64_t>(disc));
  // alpha = [0; a_1 + 1, a_2, ...]; fold preperiod and one period onto T.
  std::vector<long long> quotients = dir.preperiod();
  quotients.insert(quotients.end(), per.begin(), per.end());
  quotients[0] += 1;
  for (std::size_t i = quotients.size(); i-- > 0;) value = Quadratic(quotients[i]) + value.inverse();
  return value.inverse();
}

/// Standard word of slope p/q ending in 01: the word w01 with |w01| = q and
/// |w01|_1 = p (0 < p < q, gcd(p,q) = 1).
inline FiniteWord standard_word_of_slope(long long p, long long q) {
  if (q <= 0 || p <= 0 || p >= q || std::gcd(p, q) != 1)
    throw DomainError("standard word of slope " + std::to_string(p) + "/" + std::to_string(q) +
                      " needs 0 < p < q and gcd(p,q) = 1");
  DirectiveSequence dir = directive_of_slope(Slope::ratio(p, q));
  FiniteWord s = standard_sequence(dir, static_cast<long long>(dir.finite_length()));
  if (s.size() >= 2 && s.ends_with("10")) {
    std::string t = s.str();
    std::swap(t[t.size() - 2], t[t.size() - 1]);
    s = FiniteWord(std::move(t));
  }
  return s;
}

inline bool has_period(std::string_view w, std::size_t k) {
  for (std::size_t i = 0; i + k < w.size(); ++i)
    if (w[i] != w[i + k]) return false;
  return true;
}

inline bool is_letter_power(std::string_view w) {
  return w.find('0') == std::string_view::npos || w.find('1') == std::string_view::npos;
}

/// Central iff w has coprime periods k, l with |w| = k + l - 2.
inline bool is_central(const FiniteWord& w) {
  const std::size_t n = w.size();
  for (std::size_t k = 1; k <= n + 1; ++k) {
    const std::size_t l = n + 2 - k;
    if (std::gcd(k, l) == 1 && has_period(w.view(), k) && has_period(w.view(), l)) return true;
  }
  return false;
}

struct CentralDecomposition {
  FiniteWord w;
  FiniteWord p;
  FiniteWord q;
  /// k = |p| + 2 and l = |q| + 2; for letter powers (1, |w| + 1).
  std::size_t k = 0;
  std::size_t l = 0;
  bool letter_power = false;
};

/// The unique factorization w = p10q = q01p into palindromes.
inline CentralDecomposition central_decomposition(const FiniteWord& w) {
  if (!is_central(w)) throw DomainError("'" + w.str() + "' is not a central word");
  CentralDecomposition d;
  d.w = w;
  if (is_letter_power(w.view())) {
    d.letter_power = true;
    d.k = 1;
    d.l = w.size() + 1;
    return d;
  }
  for (std::size_t i = 0; i + 2 <= w.size(); ++i) {
    if (w[i] != '1' || w[i + 1] != '0') continue;
    FiniteWord p = w.prefix(i);
    FiniteWord q = w.substr(i + 2);
    if (p.is_palindrome() && q.is_palindrome() && q + FiniteWord("01") + p == w) {
      d.p = std::move(p);
      d.q = std::move(q);
      d.k = d.p.size() + 2;
      d.l = d.q.size() + 2;
      return d;
    }
  }
  throw DomainError("no palindromic factorization of central word '" + w.str() + "'");
}

/// The unique standard pair (x, y) with w01 = xy. Letter powers: 0^n gives
/// (0, 0^n 1) and 1^n gives (1^n 0, 1).
inline StandardPair standard_pair_factorization(const FiniteWord& w) {
  const CentralDecomposition d = central_decomposition(w);
  if (d.letter_power) {
    if (w.empty() || w[0] == '0') return {FiniteWord("0"), w + FiniteWord("1")};
    return {w + FiniteWord("0"), FiniteWord("1")};
  }
  return {d.p + FiniteWord("10"), d.q + FiniteWord("01")};
}

/// Standard words are the letters and w01, w10 for central w.
inline bool is_standard_word(const FiniteWord& s) {
  if (s == FiniteWord("0") || s == FiniteWord("1")) return true;
  if (s.size() < 2) return false;
  const std::string_view tail = s.view().substr(s.size() - 2);
  return (tail == "01" || tail == "10") && is_central(s.prefix(s.size() - 2));
}

/// Coding of the rotation x -> x + alpha (mod 1) by I_0 = I(0, 1-alpha) and
/// I_1 = I(1-alpha, 1). The endpoints are assigned explicitly.
struct RotationParams {
  Slope slope;
  Quadratic intercept;
  /// Whether the point 0 codes to 0 (default) or to 1.
  bool zero_in_I0 = true;
  /// Whether the point 1-alpha codes to 1 (default) or to 0.
  bool one_minus_alpha_in_I1 = true;

  /// "01" for the default convention: <code of 0><code of 1-alpha>.
  std::string convention() const {
    return std::string(1, zero_in_I0 ? '0' : '1') + std::string(1, one_minus_alpha_in_I1 ? '1' : '0');
  }
};

/// a_n = nu(R_alpha^n(rho)) for n = 0 .. n-1, decided exactly in the slope's field.
inline FiniteWord rotation_word(const RotationParams& params, std::size_t n) {
  const Quadratic& alpha = params.slope.value();
  if (alpha.is_rational()) throw DomainError("rotation word needs an irrational slope, got " + alpha.render());
  const Quadratic cut = Quadratic(1) - alpha;
  Quadratic x = params.intercept.fractional_part();
  const Quadratic one(1);
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int at_zero = x.sign();
    char letter;
    if (at_zero == 0) {
      letter = params.zero_in_I0 ? '0' : '1';
    } else {
      const auto c = x <=> cut;
      if (c == std::strong_ordering::equal) letter = params.one_minus_alpha_in_I1 ? '1' : '0';
      else letter = (c == std::strong_ordering::less) ? '0' : '1';
    }
    out += letter;
    x += alpha;
    if (x >= one) x -= one;
  }
  return FiniteWord(std::move(out));
}

}  // namespace abelsub
