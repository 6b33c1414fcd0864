#pragma once

// The traffic map T (Rule 184) and F = shift o T, preimage search for F,
// iteration until all 1s are isolated, upper and two-sided C-squeezing, and
// morphism images of infinite words.
//
// T replaces every occurrence of 10 by 01 simultaneously. Two occurrences of 10
// cannot overlap (the second letter of one would have to be the 1 of the next),
// so the replacement is well defined. Letter i of T(y) depends on y_{i-1} y_i
// y_{i+1}; on a window the last letter needs one letter of lookahead and F
// needs two.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "abelsub/abelian.hpp"
#include "abelsub/morphism.hpp"
#include "abelsub/word_spec.hpp"

namespace abelsub {

namespace detail {

// Letter i of T(y) given y_{i-1} (or none), y_i, y_{i+1}.
inline char traffic_letter(char prev, char cur, char next) {
  if (cur == '1' && next == '0') return '0';
  if (cur == '0' && prev == '1') return '1';
  return cur;
}

}  // namespace detail

/// First n letters of T(y); y must supply n + 1 letters.
inline FiniteWord traffic_T(std::string_view y, std::size_t n) {
  if (y.size() < n + 1)
    throw BoundaryError("T needs " + std::to_string(n + 1) + " source letters for " + std::to_string(n) +
                        " output letters, got " + std::to_string(y.size()));
  std::string out(n, '0');
  for (std::size_t i = 0; i < n; ++i) out[i] = detail::traffic_letter(i ? y[i - 1] : '0', y[i], y[i + 1]);
  return FiniteWord(std::move(out));
}
inline FiniteWord traffic_T(const FiniteWord& y, std::size_t n) { return traffic_T(y.view(), n); }
inline FiniteWord traffic_T(const InfiniteWordSpec& y, std::size_t n) { return traffic_T(y.prefix(n + 1), n); }

/// First n letters of F(y) = shift(T(y)); y must supply n + 2 letters.
inline FiniteWord traffic_F(std::string_view y, std::size_t n) {
  if (y.size() < n + 2)
    throw BoundaryError("F needs " + std::to_string(n + 2) + " source letters for " + std::to_string(n) +
                        " output letters, got " + std::to_string(y.size()));
  std::string out(n, '0');
  for (std::size_t i = 0; i < n; ++i) out[i] = detail::traffic_letter(y[i], y[i + 1], y[i + 2]);
  return FiniteWord(std::move(out));
}
inline FiniteWord traffic_F(const FiniteWord& y, std::size_t n) { return traffic_F(y.view(), n); }
inline FiniteWord traffic_F(const InfiniteWordSpec& y, std::size_t n) { return traffic_F(y.prefix(n + 2), n); }

/// Everything of F(y) that a finite y determines: |y| - 2 letters.
inline FiniteWord traffic_F(const FiniteWord& y) { return traffic_F(y, y.size() < 2 ? 0 : y.size() - 2); }

/// F^k on a window: |y| - 2k letters.
inline FiniteWord traffic_F_power(FiniteWord y, std::size_t k) {
  for (std::size_t j = 0; j < k; ++j) {
    if (y.size() < 2) throw BoundaryError("window too short for F^" + std::to_string(k));
    y = traffic_F(y);
  }
  return y;
}

struct PreimageSearch {
  /// Windows y, lexicographically sorted, with F^k(y)[pad, pad + |target|) = target.
  std::vector<FiniteWord> preimages;
  /// Partial preimages explored (all levels).
  std::size_t candidates = 0;
};

namespace detail {

// All u with |u| = |w| + 2 and F(u) = w. Letter u_{i+2} is forced by w_i up to
// the choices the local rule leaves open; the DFS only branches there.
inline void one_level_preimages(const std::string& w, std::vector<std::string>& out, std::size_t& budget,
                                std::size_t cap) {
  std::string u(w.size() + 2, '0');
  auto rec = [&](auto&& self, std::size_t len) -> void {
    if (++budget > cap) throw ResourceError("preimage search exceeded " + std::to_string(cap) + " candidates", true);
    if (len == u.size()) {
      out.push_back(u);
      return;
    }
    for (char c : {'0', '1'}) {
      u[len] = c;
      if (len >= 2 && traffic_letter(u[len - 2], u[len - 1], u[len]) != w[len - 2]) continue;
      self(self, len + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// All windows y with F^k(y) carrying `target` at offset pad; |y| = |target| +
/// 2k + 2 pad. The search runs level by level (preimages of preimages), each
/// level constrained letter by letter by the local rule. An empty result
/// certifies that no word has a factor u with F^k(u) = target, since F^k(y)_i
/// depends on y_i .. y_{i+2k} only. Throws ResourceError beyond `cap` candidates.
inline PreimageSearch preimages_F(const FiniteWord& target, std::size_t k, std::size_t pad = 0,
                                  std::size_t cap = std::size_t{1} << 24) {
  if (k < 1) throw ConfigError("preimage order must be at least 1");
  PreimageSearch res;
  std::vector<std::string> level{target.str()};
  for (std::size_t j = 0; j < k && !level.empty(); ++j) {
    std::vector<std::string> next;
    for (const auto& w : level) detail::one_level_preimages(w, next, res.candidates, cap);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  // Context letters outside the dependency window are unconstrained.
  for (std::size_t j = 0; j < pad && !level.empty(); ++j) {
    std::vector<std::string> next;
    for (const auto& w : level)
      for (char a : {'0', '1'})
        for (char b : {'0', '1'}) {
          if (++res.candidates > cap)
            throw ResourceError("preimage search exceeded " + std::to_string(cap) + " candidates", true);
          next.push_back(std::string(1, a) + w + b);
        }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  for (auto& w : level) res.preimages.emplace_back(std::move(w));
  return res;
}

/// 11 (01)^n 00: no word containing it has a preimage of order n + 1.
inline FiniteWord preimage_obstruction(std::size_t n) {
  return FiniteWord("11") + FiniteWord("01").power(n) + FiniteWord("00");
}

struct IsolationResult {
  /// Least j <= max_iter with 11 absent from the checked window of F^j(y).
  std::size_t iterations = 0;
  bool terminated = false;
  FiniteWord window;
  /// Window 1-frequency of the input was at least 1/2 (the hypothesis fails).
  bool frequency_flag = false;
  Rational window_frequency;
};

/// Iterates F on a window, checking the first `check` letters of each iterate
/// (the source must hold check + 2 max_iter letters).
inline IsolationResult iterate_F_until_isolated(const FiniteWord& source, std::size_t max_iter, std::size_t check) {
  if (source.size() < check + 2 * max_iter)
    throw BoundaryError("isolation needs " + std::to_string(check + 2 * max_iter) + " source letters");
  IsolationResult res;
  res.window_frequency =
      source.empty() ? Rational(0) : Rational(static_cast<long long>(source.weight()), static_cast<long long>(source.size()));
  res.frequency_flag = res.window_frequency >= Rational(1, 2);
  FiniteWord cur = source;
  for (std::size_t j = 0;; ++j) {
    if (!cur.prefix(check).contains("11")) {
      res.iterations = j;
      res.terminated = true;
      res.window = cur.prefix(check);
      return res;
    }
    if (j == max_iter) break;
    cur = traffic_F(cur);
  }
  res.iterations = max_iter;
  res.window = cur.prefix(check);
  return res;
}

inline IsolationResult iterate_F_until_isolated(const InfiniteWordSpec& w, std::size_t max_iter, std::size_t check) {
  return iterate_F_until_isolated(w.prefix(check + 2 * max_iter), max_iter, check);
}

enum class SqueezeMode { upper, two_sided };

struct SqueezeParams {
  Quadratic alpha;
  Quadratic C;
  SqueezeMode mode = SqueezeMode::upper;
};

/// Switch positions i (1-based, 2 <= i <= |u|) of the squeeze: a_{i-1} a_i = 10
/// with g(i) > alpha i + C, and in two-sided mode also a_{i-1} a_i = 01 with
/// g(i) < alpha i - C. The inequalities are decided exactly.
inline std::vector<std::size_t> squeeze_switches(std::string_view u, const SqueezeParams& params) {
  if (params.C.sign() < 0) throw ConfigError("squeeze offset C must be nonnegative");
  // alpha and C must live in a common field; adding them checks that.
  (void)(params.alpha + params.C);
  std::vector<std::size_t> out;
  long long g = u.empty() ? 0 : (u[0] == '1');
  for (std::size_t i = 2; i <= u.size(); ++i) {
    g += (u[i - 1] == '1');
    const char a = u[i - 2], b = u[i - 1];
    if (a == b) continue;
    const Quadratic line = params.alpha * Quadratic(static_cast<long long>(i));
    if (a == '1') {
      if (Quadratic(g) > line + params.C) out.push_back(i);
    } else if (params.mode == SqueezeMode::two_sided) {
      if (Quadratic(g) < line - params.C) out.push_back(i);
    }
  }
  return out;
}

/// Squeezed word of the same length. Switches at i <= |u| only; the letter at
/// |u| may still change under a switch at |u| + 1, which the spec overload
/// accounts for.
inline FiniteWord squeeze(const FiniteWord& u, const SqueezeParams& params) {
  std::string out = u.str();
  for (std::size_t i : squeeze_switches(u.view(), params)) std::swap(out[i - 2], out[i - 1]);
  return FiniteWord(std::move(out));
}

/// First n letters of the squeeze of an infinite word (reads n + 1 letters).
inline FiniteWord squeeze(const InfiniteWordSpec& w, const SqueezeParams& params, std::size_t n) {
  return squeeze(w.prefix(n + 1), params).prefix(n);
}

/// First n letters of f(w); f may be erasing on one letter.
inline FiniteWord apply_morphism(const BinaryMorphism& f, const InfiniteWordSpec& w, std::size_t n) {
  if (f.image0.empty() && f.image1.empty()) throw DomainError("morphism erases every letter");
  std::size_t k = std::max<std::size_t>(n, 1);
  for (int tries = 0; tries < 8; ++tries, k *= 4) {
    FiniteWord img = f.apply(w.prefix(k));
    if (img.size() >= n) return img.prefix(n);
  }
  throw BoundaryError("image of the first letters of " + w.render() + " stays shorter than " + std::to_string(n));
}

/// The balance bound (D + D') |f(01)| + D'' for f(y) with y C-balanced, where
/// D = 2 |f(01)|, D' = C ||f(1)| - |f(0)|| and D'' = C ||f(1)|_1 - |f(0)|_1|.
inline long long morphic_balance_bound(const BinaryMorphism& f, long long C) {
  const long long len01 = static_cast<long long>(f.image0.size() + f.image1.size());
  const long long D = 2 * len01;
  const long long Dp = C * std::llabs(static_cast<long long>(f.image1.size()) - static_cast<long long>(f.image0.size()));
  const long long Dpp = C * std::llabs(static_cast<long long>(f.image1.weight()) - static_cast<long long>(f.image0.weight()));
  return (D + Dp) * len01 + Dpp;
}

}  // namespace abelsub
