#pragma once

// Standard pairs: the closure of (0,1) under Gamma(u,v) = (u,uv) and
// Delta(u,v) = (vu,v).

#include <optional>
#include <string>
#include <utility>

#include "abelsub/word.hpp"

namespace abelsub {

struct StandardPair {
  FiniteWord x;
  FiniteWord y;
  friend bool operator==(const StandardPair&, const StandardPair&) = default;
};

inline StandardPair gamma(const StandardPair& p) { return {p.x, p.x + p.y}; }
inline StandardPair delta(const StandardPair& p) { return {p.y + p.x, p.y}; }

/// Reverse reduction: strip the shorter component from the front of the longer
/// one (undoing Gamma or Delta) until (0,1) is reached or no step applies.
/// Returns the derivation as a string over {'G','D'} (Gamma/Delta, outermost
/// first) when the pair is standard.
inline std::optional<std::string> standard_pair_derivation(const FiniteWord& x, const FiniteWord& y) {
  std::string_view u = x.view();
  std::string_view v = y.view();
  std::string steps;
  for (;;) {
    if (u == "0" && v == "1") return steps;
    if (u.empty() || v.empty()) return std::nullopt;
    if (u.size() < v.size() && v.starts_with(u)) {
      v.remove_prefix(u.size());  // (u, uv) -> (u, v)
      steps += 'G';
    } else if (v.size() < u.size() && u.starts_with(v)) {
      u.remove_prefix(v.size());  // (vu, v) -> (u, v)
      steps += 'D';
    } else {
      return std::nullopt;
    }
  }
}

inline bool is_standard_pair(const StandardPair& p) { return standard_pair_derivation(p.x, p.y).has_value(); }

/// {x, y} is a standard pair in some order.
inline bool is_unordered_standard_pair(const FiniteWord& a, const FiniteWord& b) {
  return is_standard_pair({a, b}) || is_standard_pair({b, a});
}

}  // namespace abelsub
