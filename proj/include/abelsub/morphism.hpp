#pragma once

// Binary morphisms, their adjacency matrices and the Sturmian/standard tests.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "abelsub/numeric.hpp"
#include "abelsub/standard_pair.hpp"
#include "abelsub/word.hpp"

namespace abelsub {

struct BinaryMorphism {
  FiniteWord image0;
  FiniteWord image1;

  const FiniteWord& image(int letter) const { return letter == 0 ? image0 : image1; }
  bool non_erasing() const { return !image0.empty() && !image1.empty(); }

  FiniteWord apply(std::string_view u) const {
    std::string out;
    std::size_t total = 0;
    for (char c : u) total += (c == '0' ? image0.size() : image1.size());
    out.reserve(total);
    for (char c : u) out += (c == '0' ? image0.str() : image1.str());
    return FiniteWord(std::move(out));
  }
  FiniteWord apply(const FiniteWord& u) const { return apply(u.view()); }
  FiniteWord operator()(const FiniteWord& u) const { return apply(u); }

  /// "morph:0->w0,1->w1"
  std::string render() const { return "morph:0->" + image0.str() + ",1->" + image1.str(); }

  friend bool operator==(const BinaryMorphism&, const BinaryMorphism&) = default;
};

inline BinaryMorphism identity_morphism() { return {"0", "1"}; }
/// 0 -> 01, 1 -> 0
inline BinaryMorphism morphism_D() { return {"01", "0"}; }
/// 0 -> 1, 1 -> 0
inline BinaryMorphism morphism_E() { return {"1", "0"}; }
/// 0 -> 10, 1 -> 0
inline BinaryMorphism morphism_G() { return {"10", "0"}; }

/// (f o g)(a) = f(g(a)).
inline BinaryMorphism compose(const BinaryMorphism& f, const BinaryMorphism& g) {
  return {f.apply(g.image0), f.apply(g.image1)};
}

/// Columns are the Parikh vectors of f(0) and f(1):
///   [ |f(0)|_0  |f(1)|_0 ]
///   [ |f(0)|_1  |f(1)|_1 ]
struct AdjacencyMatrix {
  std::array<std::array<long long, 2>, 2> m{};

  long long determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  ParikhVector operator*(const ParikhVector& v) const {
    return {static_cast<std::size_t>(m[0][0] * static_cast<long long>(v.count0) + m[0][1] * static_cast<long long>(v.count1)),
            static_cast<std::size_t>(m[1][0] * static_cast<long long>(v.count0) + m[1][1] * static_cast<long long>(v.count1))};
  }
  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;
};

inline AdjacencyMatrix adjacency(const BinaryMorphism& f) {
  const ParikhVector p0 = parikh(f.image0);
  const ParikhVector p1 = parikh(f.image1);
  AdjacencyMatrix a;
  a.m[0][0] = static_cast<long long>(p0.count0);
  a.m[0][1] = static_cast<long long>(p1.count0);
  a.m[1][0] = static_cast<long long>(p0.count1);
  a.m[1][1] = static_cast<long long>(p1.count1);
  return a;
}

/// Psi(f(0)) and Psi(f(1)) linearly dependent.
inline bool is_degenerate(const BinaryMorphism& f) { return adjacency(f).determinant() == 0; }

/// Solves M_f x = psi over the rationals; the solution is returned only when it
/// is integral and nonnegative.
inline std::optional<ParikhVector> parikh_preimage(const BinaryMorphism& f, const ParikhVector& psi) {
  const AdjacencyMatrix a = adjacency(f);
  const long long det = a.determinant();
  if (det == 0) throw DomainError("parikh_preimage of a degenerate morphism " + f.render());
  const auto p0 = static_cast<long long>(psi.count0);
  const auto p1 = static_cast<long long>(psi.count1);
  const long long n0 = a.m[1][1] * p0 - a.m[0][1] * p1;
  const long long n1 = -a.m[1][0] * p0 + a.m[0][0] * p1;
  if (n0 % det != 0 || n1 % det != 0) return std::nullopt;
  const long long x0 = n0 / det;
  const long long x1 = n1 / det;
  if (x0 < 0 || x1 < 0) return std::nullopt;
  return ParikhVector{static_cast<std::size_t>(x0), static_cast<std::size_t>(x1)};
}

/// de Luca: standard iff {f(0), f(1)} is an unordered standard pair.
inline bool is_standard_morphism(const BinaryMorphism& f) {
  return is_unordered_standard_pair(f.image0, f.image1);
}

enum class Decision { yes, no, undecided };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::undecided: return "undecided-at-cap";
  }
  return "?";
}

struct SturmianDecomposition {
  Decision verdict = Decision::no;
  /// Generators, outermost first: f = g[0] o g[1] o ... (letters 'D', 'E', 'G').
  std::string generators;
};

namespace detail {

// Decodes u over the code {01, 0} (images under D); right-to-left is
// deterministic because 1 only ends the block 01.
inline std::optional<std::string> decode_D(std::string_view u) {
  std::string out;
  std::size_t i = u.size();
  while (i > 0) {
    if (u[i - 1] == '1') {
      if (i < 2 || u[i - 2] != '0') return std::nullopt;
      out += '0';
      i -= 2;
    } else {
      out += '1';
      i -= 1;
    }
  }
  return std::string(out.rbegin(), out.rend());
}

// Decodes u over the prefix code {10, 0} (images under G).
inline std::optional<std::string> decode_G(std::string_view u) {
  std::string out;
  std::size_t i = 0;
  while (i < u.size()) {
    if (u[i] == '1') {
      if (i + 1 >= u.size() || u[i + 1] != '0') return std::nullopt;
      out += '0';
      i += 2;
    } else {
      out += '1';
      i += 1;
    }
  }
  return out;
}

inline Decision decompose(const std::string& a, const std::string& b, int depth, int cap, bool last_was_E,
                          std::string& path) {
  if (a == "0" && b == "1") return Decision::yes;
  if (a == "1" && b == "0") {
    path += 'E';
    return Decision::yes;
  }
  if (a.empty() || b.empty()) return Decision::no;
  // Sturmian morphisms are non-degenerate; this also guarantees that every D/G
  // step below strictly shortens the images.
  if (is_degenerate(BinaryMorphism{FiniteWord(a), FiniteWord(b)})) return Decision::no;
  if (depth >= cap) return Decision::undecided;
  bool undecided = false;
  auto attempt = [&](char gen, const std::optional<std::string>& da, const std::optional<std::string>& db,
                     bool is_E) -> bool {
    if (!da || !db || da->empty() || db->empty()) return false;
    path += gen;
    const Decision d = decompose(*da, *db, depth + 1, cap, is_E, path);
    if (d == Decision::yes) return true;
    if (d == Decision::undecided) undecided = true;
    path.pop_back();
    return false;
  };
  if (attempt('D', decode_D(a), decode_D(b), false)) return Decision::yes;
  if (attempt('G', decode_G(a), decode_G(b), false)) return Decision::yes;
  if (!last_was_E) {
    std::string ea = FiniteWord(a).exchanged().str();
    std::string eb = FiniteWord(b).exchanged().str();
    if (attempt('E', ea, eb, true)) return Decision::yes;
  }
  return undecided ? Decision::undecided : Decision::no;
}

}  // namespace detail

/// Depth-capped decomposition over the generators D, E, G of the Sturmian
/// monoid. D and G steps strictly shorten the images, so a "no" below the cap
/// is exhaustive.
inline SturmianDecomposition sturmian_decomposition(const BinaryMorphism& f, int depth_cap = 24) {
  SturmianDecomposition out;
  std::string path;
  out.verdict = detail::decompose(f.image0.str(), f.image1.str(), 0, depth_cap, false, path);
  if (out.verdict == Decision::yes) out.generators = path;
  return out;
}

inline Decision is_sturmian_morphism(const BinaryMorphism& f, int depth_cap = 24) {
  return sturmian_decomposition(f, depth_cap).verdict;
}

/// Composition of generators named by a string over {D, E, G}, outermost first.
inline BinaryMorphism morphism_from_generators(std::string_view gens) {
  BinaryMorphism f = identity_morphism();
  for (char g : gens) {
    switch (g) {
      case 'D': f = compose(f, morphism_D()); break;
      case 'E': f = compose(f, morphism_E()); break;
      case 'G': f = compose(f, morphism_G()); break;
      default: throw ConfigError(std::string("unknown generator '") + g + "'");
    }
  }
  return f;
}

/// Letter-1 frequency of the fixed points of a primitive morphism: the
/// normalized Perron-Frobenius eigenvector of M_f, exact in Q(sqrt disc).
inline Quadratic fixed_point_frequency(const BinaryMorphism& f) {
  const AdjacencyMatrix a = adjacency(f);
  const long long m00 = a.m[0][0], m01 = a.m[0][1], m10 = a.m[1][0], m11 = a.m[1][1];
  // Primitive iff M^2 is positive.
  const long long s00 = m00 * m00 + m01 * m10, s01 = m00 * m01 + m01 * m11;
  const long long s10 = m10 * m00 + m11 * m10, s11 = m10 * m01 + m11 * m11;
  if (s00 <= 0 || s01 <= 0 || s10 <= 0 || s11 <= 0)
    throw DomainError("morphism " + f.render() + " is not primitive");
  const long long disc = (m00 - m11) * (m00 - m11) + 4 * m01 * m10;
  const Quadratic lambda(Rational(m00 + m11, 2), Rational(1, 2), disc);
  // Eigenvector (v0, v1): m10 v0 = (lambda - m11) v1, so v1/(v0+v1) = m10/(lambda - m11 + m10).
  return Quadratic(m10) / (lambda - Quadratic(m11) + Quadratic(m10));
}

/// Letter-1 frequency of f(u) when u has uniform 1-frequency `alpha`.
inline Quadratic image_frequency(const BinaryMorphism& f, const Quadratic& alpha) {
  const Quadratic one_minus = Quadratic(1) - alpha;
  const Quadratic ones = Quadratic(static_cast<long long>(f.image0.weight())) * one_minus +
                         Quadratic(static_cast<long long>(f.image1.weight())) * alpha;
  const Quadratic length = Quadratic(static_cast<long long>(f.image0.size())) * one_minus +
                           Quadratic(static_cast<long long>(f.image1.size())) * alpha;
  if (length.sign() == 0) throw DomainError("image of an erased word has no frequency");
  return ones / length;
}

/// Parses "0->w0,1->w1" (optionally prefixed by "morph:").
inline BinaryMorphism parse_morphism(std::string_view text) {
  if (text.starts_with("morph:")) text.remove_prefix(6);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ConfigError("morphism literal needs two rules: '" + std::string(text) + "'");
  auto rule = [&](std::string_view r, char letter) {
    if (r.size() < 3 || r[0] != letter || r.substr(1, 2) != "->")
      throw ConfigError("bad morphism rule '" + std::string(r) + "', expected " + letter + "->word");
    return FiniteWord(std::string(r.substr(3)));
  };
  return {rule(text.substr(0, comma), '0'), rule(text.substr(comma + 1), '1')};
}

}  // namespace abelsub
