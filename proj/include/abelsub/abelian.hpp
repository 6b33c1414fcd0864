#pragma once

// Corridors (per-length min/max factor weights), finite-window abelian-closure
// membership, balance, frequency bounds, periodic closures and the rational
// carpet.
//
// Membership in A(x) is decided by the corridor criterion: y is in A(x) iff for
// every n the weights of length-n factors of y lie in [min_x(n), max_x(n)].
// On a finite window the answer is "refuted" or "consistent at N".

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "abelsub/word_spec.hpp"

namespace abelsub {

enum class Provenance {
  empirical_window,   // min/max over the factors of a sampled prefix
  exact_closed_form,  // proven to equal the corridor of the infinite word
  outer_bound,        // proven to contain the corridor, not necessarily attained
};

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::exact_closed_form: return "exact-closed-form";
    case Provenance::outer_bound: return "outer-bound";
    default: return "empirical-window";
  }
}

struct CorridorProfile {
  /// Entry n (0 <= n <= N) holds the weight range of length-n factors.
  std::vector<long long> min_weight;
  std::vector<long long> max_weight;
  Provenance provenance = Provenance::empirical_window;
  /// Prefix length the empirical part was sampled from (0 for closed forms).
  std::size_t sample_length = 0;
  /// How the exact form was obtained ("sturmian", "periodic", "outer-bound-attained", ...).
  std::string method;

  std::size_t max_length() const { return min_weight.empty() ? 0 : min_weight.size() - 1; }
  bool exact() const { return provenance == Provenance::exact_closed_form; }
  bool contains(std::size_t n, long long weight) const {
    return weight >= min_weight[n] && weight <= max_weight[n];
  }
};

/// Min/max factor weights of `window` for n = 0..N (requires N <= |window|).
inline CorridorProfile window_profile(std::string_view window, std::size_t N) {
  if (N > window.size())
    throw ConfigError("window of length " + std::to_string(window.size()) + " has no factors of length " +
                      std::to_string(N));
  const auto g = prefix_weights(window);
  CorridorProfile prof;
  prof.min_weight.assign(N + 1, 0);
  prof.max_weight.assign(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) {
    long long lo = static_cast<long long>(n), hi = 0;
    for (std::size_t i = 0; i + n <= window.size(); ++i) {
      const long long w = static_cast<long long>(g[i + n]) - static_cast<long long>(g[i]);
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
    prof.min_weight[n] = lo;
    prof.max_weight[n] = hi;
  }
  prof.sample_length = window.size();
  return prof;
}

/// Exact corridor of v^omega: every factor of v^omega starts at one of the |v|
/// cyclic positions.
inline CorridorProfile periodic_profile(const FiniteWord& v, std::size_t N) {
  if (v.empty()) throw ConfigError("periodic profile needs a nonempty period");
  std::string unrolled;
  unrolled.reserve(v.size() + N);
  while (unrolled.size() < v.size() + N) unrolled += v.str();
  const auto g = prefix_weights(unrolled);
  CorridorProfile prof;
  prof.min_weight.assign(N + 1, 0);
  prof.max_weight.assign(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) {
    long long lo = static_cast<long long>(n), hi = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const long long w = static_cast<long long>(g[i + n]) - static_cast<long long>(g[i]);
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
    prof.min_weight[n] = lo;
    prof.max_weight[n] = hi;
  }
  prof.provenance = Provenance::exact_closed_form;
  prof.method = "periodic";
  return prof;
}

/// Corridor of a Sturmian word of irrational slope alpha: floor(n alpha) and
/// ceil(n alpha).
inline CorridorProfile sturmian_profile(const Quadratic& alpha, std::size_t N) {
  if (alpha.is_rational()) throw DomainError("Sturmian corridor needs an irrational slope");
  CorridorProfile prof;
  prof.min_weight.assign(N + 1, 0);
  prof.max_weight.assign(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) {
    const Quadratic x = alpha * Quadratic(static_cast<long long>(n));
    prof.min_weight[n] = static_cast<long long>(x.floor());
    prof.max_weight[n] = static_cast<long long>(x.ceil());
  }
  prof.provenance = Provenance::exact_closed_form;
  prof.method = "sturmian";
  return prof;
}

/// Proven outer bounds: the rational-carpet envelope [np/q - 1, np/q + 1] and
/// the widened Sturmian corridor [floor(n alpha) - 1, ceil(n alpha) + 1] of the
/// flipping family.
inline CorridorProfile carpet_envelope(long long p, long long q, std::size_t N) {
  CorridorProfile prof;
  prof.min_weight.assign(N + 1, 0);
  prof.max_weight.assign(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) {
    const Rational x(static_cast<long long>(n) * p, q);
    prof.min_weight[n] = std::max<long long>(0, static_cast<long long>(ceil_of(x - 1)));
    prof.max_weight[n] = std::min<long long>(static_cast<long long>(n), static_cast<long long>(floor_of(x + 1)));
  }
  prof.provenance = Provenance::outer_bound;
  prof.method = "carpet-envelope";
  return prof;
}

inline CorridorProfile widened_sturmian_envelope(const Quadratic& alpha, std::size_t N) {
  CorridorProfile prof = sturmian_profile(alpha, N);
  for (std::size_t n = 1; n <= N; ++n) {
    prof.min_weight[n] = std::max<long long>(0, prof.min_weight[n] - 1);
    prof.max_weight[n] = std::min<long long>(static_cast<long long>(n), prof.max_weight[n] + 1);
  }
  prof.provenance = Provenance::outer_bound;
  prof.method = "flip-envelope";
  return prof;
}

namespace detail {

// Period of specs that are purely periodic by construction.
inline std::optional<FiniteWord> exact_period(const InfiniteWordSpec& spec) {
  if (const auto* p = std::get_if<InfiniteWordSpec::Periodic>(&spec.kind())) return p->period;
  if (const auto* d = std::get_if<InfiniteWordSpec::Directive>(&spec.kind()); d && d->dir.is_finite())
    return standard_sequence(d->dir, static_cast<long long>(d->dir.finite_length()));
  return std::nullopt;
}

inline std::optional<Quadratic> sturmian_slope(const InfiniteWordSpec& spec) {
  if (const auto* d = std::get_if<InfiniteWordSpec::Directive>(&spec.kind()); d && !d->dir.is_finite())
    return slope_of_directive(d->dir);
  if (const auto* r = std::get_if<InfiniteWordSpec::Rotation>(&spec.kind())) return r->params.slope.value();
  return std::nullopt;
}

// An outer bound that becomes exact once the sample attains it.
inline std::optional<CorridorProfile> outer_bound(const InfiniteWordSpec& spec, std::size_t N) {
  if (const auto* c = std::get_if<InfiniteWordSpec::Carpet>(&spec.kind())) return carpet_envelope(c->p, c->q, N);
  if (const auto* f = std::get_if<InfiniteWordSpec::FlipFamily>(&spec.kind()))
    return widened_sturmian_envelope(slope_of_directive(f->dir), N);
  // A morphic fixed point whose images are the two carpet tokens (in either
  // order) is itself a concatenation of tokens, e.g. Thue-Morse over {01,10}.
  if (const auto* m = std::get_if<InfiniteWordSpec::Morphic>(&spec.kind())) {
    const FiniteWord& a = m->f.image0;
    const FiniteWord& b = m->f.image1;
    const long long q = static_cast<long long>(a.size());
    const long long p = static_cast<long long>(a.weight());
    if (q >= 2 && b.size() == a.size() && b.weight() == a.weight() && p > 0 && p < q && std::gcd(p, q) == 1) {
      const BinaryMorphism c = carpet_morphism(p, q);
      if ((a == c.image0 && b == c.image1) || (a == c.image1 && b == c.image0)) return carpet_envelope(p, q, N);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Closed-form corridor when one is known for this spec: Sturmian words
/// (directive or rotation), periodic words (including periodic Sturmian).
inline std::optional<CorridorProfile> exact_profile(const InfiniteWordSpec& spec, std::size_t N) {
  if (auto v = detail::exact_period(spec)) return periodic_profile(*v, N);
  if (auto a = detail::sturmian_slope(spec)) return sturmian_profile(*a, N);
  return std::nullopt;
}

inline std::size_t default_sample(std::size_t N) { return 4 * N + 64; }

/// Corridor of `w` up to length N. Exact closed forms are used where known.
/// Otherwise the factors of prefix(M) are enumerated; for rational carpets and
/// flipping-family words the sample is compared against the proven outer bound,
/// and when the sample attains it at every length the profile is exact.
inline CorridorProfile corridor_profile(const InfiniteWordSpec& w, std::size_t N, std::size_t M) {
  if (M < 2 * N)
    throw ConfigError("sample length " + std::to_string(M) + " must be at least twice the window " + std::to_string(N));
  if (auto exact = exact_profile(w, N)) return *exact;
  CorridorProfile prof = window_profile(w.prefix(M).view(), N);
  if (auto outer = detail::outer_bound(w, N)) {
    if (prof.min_weight == outer->min_weight && prof.max_weight == outer->max_weight) {
      prof.provenance = Provenance::exact_closed_form;
      prof.method = "outer-bound-attained:" + outer->method;
    }
  }
  return prof;
}

enum class Verdict { refuted, consistent };
inline const char* to_string(Verdict v) { return v == Verdict::refuted ? "refuted" : "consistent"; }

struct CorridorWitness {
  FiniteWord factor;
  std::size_t position = 0;
  std::size_t length = 0;
  long long weight = 0;
  long long allowed_min = 0;
  long long allowed_max = 0;
};

struct MembershipCertificate {
  Verdict verdict = Verdict::consistent;
  /// Largest factor length checked.
  std::size_t window = 0;
  /// Letters of y examined.
  std::size_t sample = 0;
  Provenance reference = Provenance::empirical_window;
  /// True when the reference corridor is exact: a refutation then proves
  /// y is not in A(x), and consistency proves every factor of the examined
  /// window of length <= window is abelian-equivalent to a factor of x.
  bool sound = false;
  std::optional<CorridorWitness> witness;
};

/// Checks every factor of `y_window` of length 1..N against `reference`.
/// Reports the shortest (then leftmost) violation.
inline MembershipCertificate corridor_member(std::string_view y_window, const CorridorProfile& reference,
                                             std::size_t N) {
  if (N > reference.max_length())
    throw ConfigError("reference corridor covers lengths up to " + std::to_string(reference.max_length()) +
                      ", window " + std::to_string(N) + " requested");
  MembershipCertificate cert;
  cert.window = std::min(N, y_window.size());
  cert.sample = y_window.size();
  cert.reference = reference.provenance;
  cert.sound = reference.exact();
  const auto g = prefix_weights(y_window);
  for (std::size_t n = 1; n <= cert.window; ++n) {
    for (std::size_t i = 0; i + n <= y_window.size(); ++i) {
      const long long w = static_cast<long long>(g[i + n]) - static_cast<long long>(g[i]);
      if (!reference.contains(n, w)) {
        cert.verdict = Verdict::refuted;
        cert.witness = CorridorWitness{FiniteWord(std::string(y_window.substr(i, n))), i, n, w,
                                       reference.min_weight[n], reference.max_weight[n]};
        return cert;
      }
    }
  }
  return cert;
}

inline MembershipCertificate corridor_member(const FiniteWord& y_window, const CorridorProfile& reference,
                                             std::size_t N) {
  return corridor_member(y_window.view(), reference, N);
}

/// y against x with factor lengths up to N; x's corridor is sampled from
/// prefix(M) when not exact, and y is examined on prefix(M).
inline MembershipCertificate corridor_member(const InfiniteWordSpec& y, const InfiniteWordSpec& x, std::size_t N,
                                             std::size_t M = 0) {
  if (M == 0) M = default_sample(N);
  const CorridorProfile ref = corridor_profile(x, N, M);
  return corridor_member(y.prefix(M).view(), ref, N);
}

/// Number of distinct weights among the length-n factors of prefix(M).
inline std::size_t abelian_complexity(std::string_view window, std::size_t n) {
  if (n > window.size()) return 0;
  const auto g = prefix_weights(window);
  std::set<long long> weights;
  for (std::size_t i = 0; i + n <= window.size(); ++i)
    weights.insert(static_cast<long long>(g[i + n]) - static_cast<long long>(g[i]));
  return weights.size();
}

inline std::size_t abelian_complexity(const InfiniteWordSpec& w, std::size_t n, std::size_t M) {
  if (M < 2 * n) throw ConfigError("sample length must be at least twice the factor length");
  return abelian_complexity(w.prefix(M).view(), n);
}

/// Smallest C such that the factors of length <= N of the window are C-balanced.
inline long long balance_coefficient(std::string_view window, std::size_t N) {
  const CorridorProfile prof = window_profile(window, std::min(N, window.size()));
  long long c = 0;
  for (std::size_t n = 1; n <= prof.max_length(); ++n) c = std::max(c, prof.max_weight[n] - prof.min_weight[n]);
  return c;
}

inline long long balance_coefficient(const InfiniteWordSpec& w, std::size_t N, std::size_t M) {
  if (M < 2 * N) throw ConfigError("sample length must be at least twice the window");
  return balance_coefficient(w.prefix(M).view(), N);
}

struct UnbalancedPair {
  /// The shared middle w' of 0w'0 and 1w'1.
  FiniteWord middle;
  /// |0w'0|.
  std::size_t length = 0;
  bool middle_is_palindrome = false;
};

/// Shortest w' with both 0w'0 and 1w'1 factors of the window (|w'| + 2 <= N).
/// At the first length where the weight spread reaches 2, stripping the
/// extreme factors leads to such a pair.
inline std::optional<UnbalancedPair> shortest_unbalanced_pair(std::string_view window, std::size_t N) {
  N = std::min(N, window.size());
  const auto g = prefix_weights(window);
  for (std::size_t n = 2; n <= N; ++n) {
    // 0w0 and 1w1 differ in weight by 2; skip lengths whose spread is smaller.
    std::size_t lo = n, hi = 0;
    for (std::size_t i = 0; i + n <= window.size() && hi < lo + 2; ++i) {
      const std::size_t w = g[i + n] - g[i];
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
    if (hi < lo + 2) continue;
    const auto fs = factor_views(window, n);
    std::set<std::string> candidates;
    for (std::string_view f : fs) {
      if (f.front() != '1' || f.back() != '1') continue;
      std::string z(f);
      z.front() = '0';
      z.back() = '0';
      if (fs.count(z)) candidates.insert(z.substr(1, n - 2));
    }
    if (!candidates.empty()) {
      FiniteWord mid(*candidates.begin());
      return UnbalancedPair{mid, n, mid.is_palindrome()};
    }
  }
  return std::nullopt;
}

inline std::optional<UnbalancedPair> shortest_unbalanced_pair(const InfiniteWordSpec& w, std::size_t N, std::size_t M) {
  if (M < 2 * N) throw ConfigError("sample length must be at least twice the window");
  const FiniteWord p = w.prefix(M);
  return shortest_unbalanced_pair(p.view(), N);
}

struct FrequencyBounds {
  /// upper[N] = min_{n<=N} max(n)/n and lower[N] = max_{n<=N} min(n)/n for N >= 1.
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Provenance provenance = Provenance::empirical_window;
  Rational tolerance;
  /// upper - lower below the tolerance at the full window.
  bool uniform_frequency_plausible = false;

  const Rational& final_upper() const { return upper.back(); }
  const Rational& final_lower() const { return lower.back(); }
};

inline FrequencyBounds frequency_bounds(const CorridorProfile& prof, const Rational& tolerance = Rational(1, 20)) {
  if (prof.max_length() == 0) throw ConfigError("frequency bounds need a window of at least 1");
  FrequencyBounds fb;
  fb.provenance = prof.provenance;
  fb.tolerance = tolerance;
  fb.upper.assign(prof.max_length() + 1, Rational(1));
  fb.lower.assign(prof.max_length() + 1, Rational(0));
  for (std::size_t n = 1; n <= prof.max_length(); ++n) {
    const Rational hi(prof.max_weight[n], static_cast<long long>(n));
    const Rational lo(prof.min_weight[n], static_cast<long long>(n));
    fb.upper[n] = n == 1 ? hi : std::min(fb.upper[n - 1], hi);
    fb.lower[n] = n == 1 ? lo : std::max(fb.lower[n - 1], lo);
  }
  fb.uniform_frequency_plausible = fb.final_upper() - fb.final_lower() < tolerance;
  return fb;
}

inline FrequencyBounds frequency_bounds(const InfiniteWordSpec& w, std::size_t N, std::size_t M,
                                        const Rational& tolerance = Rational(1, 20)) {
  return frequency_bounds(corridor_profile(w, N, M), tolerance);
}

struct PeriodicClosure {
  /// Primitive periods u of the points u^omega of A(v^omega), sorted by
  /// (length, letters).
  std::vector<FiniteWord> representatives;
  std::size_t states_visited = 0;
  bool partial = false;
};

/// Cap overflow in closure_of_periodic; carries what was found so far.
class ClosureOverflow : public ResourceError {
 public:
  ClosureOverflow(const std::string& what, PeriodicClosure partial_result)
      : ResourceError(what, true), result(std::move(partial_result)) {}
  PeriodicClosure result;
};

inline FiniteWord primitive_root(const FiniteWord& u) {
  for (std::size_t d = 1; d <= u.size(); ++d)
    if (u.size() % d == 0 && has_period(u.view(), d)) return u.prefix(d);
  return u;
}

/// A(v^omega) for a nonempty v with |v| = q and |v|_1 = p. Every length-q
/// factor of a member has weight p, so members are q-periodic; the search
/// enumerates length-q words letter by letter, pruning with the corridor of
/// v^omega on the factors fixed so far, and finally checks the cyclic factors.
/// Throws ClosureOverflow (a partial ResourceError) once more than `cap` states are visited.
inline PeriodicClosure closure_of_periodic(const FiniteWord& v, std::size_t cap = 1000000) {
  if (v.empty()) throw ConfigError("closure_of_periodic needs a nonempty word");
  const std::size_t q = v.size();
  const long long p = static_cast<long long>(v.weight());
  const CorridorProfile corridor = periodic_profile(v, q);
  PeriodicClosure out;
  std::set<FiniteWord> found;
  std::string u;
  u.reserve(q);
  std::vector<long long> g{0};
  // Depth-first over prefixes: each new letter closes factors ending at it.
  auto extend = [&](auto&& self) -> void {
    if (++out.states_visited > cap) {
      out.partial = true;
      return;
    }
    const std::size_t m = u.size();
    if (m == q) {
      // Cyclic factors of u^omega up to length q.
      const FiniteWord uw(u);
      const CorridorProfile cyc = periodic_profile(uw, q);
      for (std::size_t n = 1; n <= q; ++n)
        if (cyc.min_weight[n] < corridor.min_weight[n] || cyc.max_weight[n] > corridor.max_weight[n]) return;
      found.insert(primitive_root(uw));
      return;
    }
    for (char c : {'0', '1'}) {
      const long long ones = g.back() + (c == '1');
      if (ones > p || ones + static_cast<long long>(q - m - 1) < p) continue;
      u.push_back(c);
      g.push_back(ones);
      bool ok = true;
      for (std::size_t n = 1; n <= m + 1 && ok; ++n) {
        const long long w = g[m + 1] - g[m + 1 - n];
        ok = corridor.contains(n, w);
      }
      if (ok) self(self);
      u.pop_back();
      g.pop_back();
      if (out.partial) return;
    }
  };
  extend(extend);
  out.representatives.assign(found.begin(), found.end());
  std::stable_sort(out.representatives.begin(), out.representatives.end(), [](const FiniteWord& a, const FiniteWord& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  if (out.partial)
    throw ClosureOverflow("closure_of_periodic(" + v.str() + ") exceeded " + std::to_string(cap) + " states", out);
  return out;
}

struct RationalCarpet {
  long long p = 1, q = 2;
  BinaryMorphism phi;

  /// phi applied to an index word.
  FiniteWord member(const FiniteWord& index) const { return phi.apply(index); }
  InfiniteWordSpec member(const InfiniteWordSpec& index) const { return InfiniteWordSpec::carpet(p, q, index); }
};

/// phi: 0 -> w01, 1 -> w10 with w01 the standard word of slope p/q. Every
/// image has all length-n weights within [np/q - 1, np/q + 1].
inline RationalCarpet rational_carpet(long long p, long long q) { return {p, q, carpet_morphism(p, q)}; }

}  // namespace abelsub
