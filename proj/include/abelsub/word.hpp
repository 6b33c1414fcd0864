#pragma once

// Finite binary words and Parikh accounting.
//
// Letters are stored one per byte as the characters '0' and '1', so a word is
// directly printable and its factors can be hashed as string_views. Positions
// in the API are 0-based; the word graph uses g(i) = weight of the first i
// letters, which is the 1-based convention a_1...a_i.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "abelsub/error.hpp"

namespace abelsub {

class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(std::string letters) : letters_(std::move(letters)) { validate(); }
  FiniteWord(const char* letters) : FiniteWord(std::string(letters)) {}  // NOLINT

  static FiniteWord repeat(char letter, std::size_t n) { return FiniteWord(std::string(n, letter)); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  /// Letter i as 0/1.
  int bit(std::size_t i) const { return letters_[i] - '0'; }

  const std::string& str() const { return letters_; }
  std::string_view view() const { return letters_; }

  FiniteWord substr(std::size_t pos, std::size_t n = std::string::npos) const {
    return FiniteWord(letters_.substr(pos, n), Unchecked{});
  }
  FiniteWord prefix(std::size_t n) const { return substr(0, n); }
  FiniteWord suffix(std::size_t n) const { return substr(size() - std::min(n, size())); }
  bool starts_with(std::string_view p) const { return letters_.starts_with(p); }
  bool ends_with(std::string_view p) const { return letters_.ends_with(p); }
  bool contains(std::string_view f) const { return letters_.find(f) != std::string::npos; }

  FiniteWord reversed() const {
    std::string r(letters_.rbegin(), letters_.rend());
    return FiniteWord(std::move(r), Unchecked{});
  }
  bool is_palindrome() const { return std::equal(letters_.begin(), letters_.begin() + size() / 2, letters_.rbegin()); }
  /// Exchange of letters (the morphism 0 -> 1, 1 -> 0).
  FiniteWord exchanged() const {
    std::string r = letters_;
    for (char& c : r) c = (c == '0') ? '1' : '0';
    return FiniteWord(std::move(r), Unchecked{});
  }
  FiniteWord power(std::size_t k) const {
    std::string r;
    r.reserve(size() * k);
    for (std::size_t i = 0; i < k; ++i) r += letters_;
    return FiniteWord(std::move(r), Unchecked{});
  }

  FiniteWord& operator+=(const FiniteWord& o) {
    letters_ += o.letters_;
    return *this;
  }
  FiniteWord& operator+=(char c) {
    letters_ += c;
    validate_letter(c);
    return *this;
  }
  friend FiniteWord operator+(FiniteWord a, const FiniteWord& b) { return a += b; }

  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;
  friend auto operator<=>(const FiniteWord&, const FiniteWord&) = default;

  /// Number of 1s.
  std::size_t weight() const { return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), '1')); }

 private:
  struct Unchecked {};
  FiniteWord(std::string letters, Unchecked) : letters_(std::move(letters)) {}

  static void validate_letter(char c) {
    if (c != '0' && c != '1') throw ConfigError(std::string("letter '") + c + "' is not binary");
  }
  void validate() const {
    for (char c : letters_) validate_letter(c);
  }

  std::string letters_;
};

struct ParikhVector {
  std::size_t count0 = 0;
  std::size_t count1 = 0;

  std::size_t length() const { return count0 + count1; }
  ParikhVector& operator+=(const ParikhVector& o) {
    count0 += o.count0;
    count1 += o.count1;
    return *this;
  }
  friend ParikhVector operator+(ParikhVector a, const ParikhVector& b) { return a += b; }
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
  friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
};

inline ParikhVector parikh(std::string_view u) {
  const auto ones = static_cast<std::size_t>(std::count(u.begin(), u.end(), '1'));
  return {u.size() - ones, ones};
}
inline ParikhVector parikh(const FiniteWord& u) { return parikh(u.view()); }

inline bool abelian_equivalent(const FiniteWord& u, const FiniteWord& v) { return parikh(u) == parikh(v); }

/// Cumulative weights: entry i is the weight of the first i letters.
inline std::vector<std::uint32_t> prefix_weights(std::string_view u) {
  std::vector<std::uint32_t> g(u.size() + 1, 0);
  for (std::size_t i = 0; i < u.size(); ++i) g[i + 1] = g[i] + (u[i] == '1' ? 1 : 0);
  return g;
}

/// Distinct length-n factors, as views into `u`. Empty when n > |u|.
inline std::unordered_set<std::string_view> factor_views(std::string_view u, std::size_t n) {
  std::unordered_set<std::string_view> out;
  if (n > u.size()) return out;
  out.reserve(std::min<std::size_t>(u.size() - n + 1, 1u << 20));
  for (std::size_t i = 0; i + n <= u.size(); ++i) out.insert(u.substr(i, n));
  return out;
}

/// L_n(u) in lexicographic order. Returns the empty set when n > |u|;
/// for n = 0 the result is {epsilon}.
inline std::set<FiniteWord> factors(const FiniteWord& u, std::size_t n) {
  std::set<FiniteWord> out;
  for (std::string_view f : factor_views(u.view(), n)) out.insert(FiniteWord(std::string(f)));
  return out;
}

/// Occurrences (start positions) of `pattern` in `text`, possibly overlapping.
inline std::vector<std::size_t> occurrences(std::string_view text, std::string_view pattern) {
  std::vector<std::size_t> out;
  if (pattern.empty()) return out;
  for (std::size_t p = text.find(pattern); p != std::string_view::npos; p = text.find(pattern, p + 1))
    out.push_back(p);
  return out;
}

}  // namespace abelsub
