#pragma once

// The flip operator and the family of words
//   prod_i  S_k^{n_i}  Flip^{b_i}(S_{k-1})
// obtained from the factorization c = prod_i S_k^{n_i} S_{k-1} of a
// characteristic word. Since S_k Flip(S_{k-1}) = S_{k-1} S_k, every member stays
// within one of the Sturmian corridor.

#include <string>
#include <vector>

#include "abelsub/sturmian.hpp"

namespace abelsub {

/// Swaps the last two letters.
inline FiniteWord flip_last_two(const FiniteWord& s) {
  if (s.size() < 2) throw DomainError("flip needs a word of length at least 2");
  std::string t = s.str();
  std::swap(t[t.size() - 1], t[t.size() - 2]);
  return FiniteWord(std::move(t));
}

/// Exponents n_i of c = prod S_k^{n_i} S_{k-1}, enough blocks to cover `length`
/// letters of c. Each n_i is a_{k+1} or a_{k+1} + 1.
inline std::vector<std::size_t> block_exponents(const DirectiveSequence& dir, std::size_t k, std::size_t length) {
  if (dir.is_finite()) throw ConfigError("flipping family needs an infinite directive sequence");
  if (k < 3) throw DomainError("flipping family needs k >= 3");
  const std::size_t len_k = standard_sequence(dir, static_cast<long long>(k)).size();
  const std::size_t len_km1 = standard_sequence(dir, static_cast<long long>(k) - 1).size();
  // Token words over {A = S_k, B = S_{k-1}}: T_m = T_{m-1}^{a_m} T_{m-2}.
  std::string prev = "B", cur = "A";
  std::size_t cur_len = len_k, prev_len = len_km1;
  for (std::size_t m = k + 1; cur_len < length + len_k + len_km1 || m <= k + 2; ++m) {
    const auto a = static_cast<std::size_t>(dir.at(m));
    std::string next;
    next.reserve(cur.size() * a + prev.size());
    for (std::size_t i = 0; i < a; ++i) next += cur;
    next += prev;
    const std::size_t next_len = cur_len * a + prev_len;
    prev = std::move(cur);
    cur = std::move(next);
    prev_len = cur_len;
    cur_len = next_len;
  }
  std::vector<std::size_t> exps;
  std::size_t run = 0, covered = 0;
  for (char t : cur) {
    if (t == 'A') {
      ++run;
      continue;
    }
    exps.push_back(run);
    covered += run * len_k + len_km1;
    run = 0;
    if (covered >= length) break;
  }
  return exps;
}

/// First n letters of prod_i S_k^{n_i} Flip^{b_i}(S_{k-1}), where b_i cycles
/// through `bits` (a nonempty string over {0,1}).
inline FiniteWord flipping_family(const DirectiveSequence& dir, std::size_t k, std::string_view bits, std::size_t n) {
  if (bits.empty()) throw ConfigError("flip bit sequence must be nonempty");
  for (char b : bits)
    if (b != '0' && b != '1') throw ConfigError("flip bits must be 0/1");
  const FiniteWord sk = standard_sequence(dir, static_cast<long long>(k));
  const FiniteWord skm1 = standard_sequence(dir, static_cast<long long>(k) - 1);
  const FiniteWord flipped = flip_last_two(skm1);
  const std::vector<std::size_t> exps = block_exponents(dir, k, n);
  std::string out;
  out.reserve(n + sk.size() * 4 + skm1.size());
  for (std::size_t i = 0; i < exps.size() && out.size() < n; ++i) {
    for (std::size_t j = 0; j < exps[i]; ++j) out += sk.str();
    out += (bits[i % bits.size()] == '1' ? flipped : skm1).str();
  }
  out.resize(std::min(out.size(), n));
  return FiniteWord(std::move(out));
}

/// Marker of flipped blocks: with w01 or w10 equal to S_{k+1}, the factor 1w1
/// when S_{k-1} ends with 01, and 0w0 in the symmetric case. The marker never
/// occurs in the characteristic word.
inline FiniteWord flip_marker_factor(const DirectiveSequence& dir, std::size_t k) {
  const FiniteWord s = standard_sequence(dir, static_cast<long long>(k) + 1);
  const FiniteWord prev = standard_sequence(dir, static_cast<long long>(k) - 1);
  const FiniteWord edge = prev.ends_with("01") ? FiniteWord("1") : FiniteWord("0");
  return edge + s.prefix(s.size() - 2) + edge;
}

}  // namespace abelsub
