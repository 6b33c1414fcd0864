#pragma once

// Recursive construction of the words x_0, x_1, ... in the abelian closure of a
// non-balanced seed, each with its own shortest unbalanced pair length, and
// the certificate that their languages differ.
//
// Per stage: the shortest unbalanced pair 0w0 / 1w1 of z_n gives a standard
// pair (x, y) with w01 = xy; a shift of z_n is a product of x and y, and
// reading x as 0 and y as 1 gives y_{n+1} with phi_{n+1}(y_{n+1}) = that shift.
// If y_{n+1} has 1-frequency >= 1/2, phi is replaced by phi o E. Then z_{n+1}
// is F^k(y_{n+1}) with all 1s isolated, psi_{n+1} = psi_n o phi_{n+1} and
// x_{n+1} = psi_{n+1}(z_{n+1}). Everything is carried out on finite windows.

#include <optional>
#include <string>
#include <vector>

#include "abelsub/abelian.hpp"
#include "abelsub/structure.hpp"
#include "abelsub/transforms.hpp"

namespace abelsub {

struct FamilyStage {
  std::size_t index = 0;
  FiniteWord x_window;
  /// Preimage window y_n (empty for stage 0).
  FiniteWord y_window;
  FiniteWord z_window;
  /// psi_n and phi_{n+1}.
  BinaryMorphism psi;
  BinaryMorphism phi;
  /// The standard pair read off z_n (phi_{n+1} before any exchange).
  StandardPair pair;
  FiniteWord unbalanced_middle;
  /// phi_{n+1} includes the exchange E.
  bool exchanged = false;
  /// F-iterations that isolated the 1s of z_n.
  std::size_t isolation_steps = 0;
  /// |x_n y_n| = |psi_n(phi_{n+1}(01))|.
  std::size_t pair_length = 0;
  /// Window 1-frequency of the token word y_n before any exchange.
  Rational preimage_frequency;

  /// Checks recorded while building the stage.
  bool composition_identity = false;   // psi_{n+1} = psi_n o phi_{n+1}, length identity
  bool preimage_has_00_11 = false;     // y_n contains 00 and 11
  bool ones_isolated = false;          // 11 not in z_n
  std::optional<MembershipCertificate> image_vs_previous;  // phi_n(z_n) against z_{n-1}
};

struct FamilyOptions {
  std::size_t depth = 3;
  std::size_t window = 200000;
  std::size_t max_isolation_steps = 4096;
};

struct FamilyResult {
  std::string seed;
  /// The seed had 1-frequency above 1/2 and was exchanged first; all x_n then
  /// live in A(E(seed)), i.e. E(x_n) is in A(seed).
  bool seed_exchanged = false;
  std::size_t seed_isolation_steps = 0;
  std::vector<FamilyStage> stages;
  /// Stage-failure diagnostic when fewer than depth + 1 stages were built.
  std::optional<std::string> failure;
};

namespace detail {

inline Rational window_frequency(const FiniteWord& w) {
  if (w.empty()) return Rational(0);
  return Rational(static_cast<long long>(w.weight()), static_cast<long long>(w.size()));
}

// F until 11 disappears; every step costs two letters.
inline std::optional<std::pair<FiniteWord, std::size_t>> isolate(FiniteWord w, std::size_t max_steps) {
  for (std::size_t k = 0; k <= max_steps; ++k) {
    if (!w.contains("11")) return std::make_pair(std::move(w), k);
    if (w.size() < 3) return std::nullopt;
    w = traffic_F(w);
  }
  return std::nullopt;
}

// phi_{n+1} and y_{n+1} from z_n.
struct StageStep {
  StandardPair pair;
  FiniteWord middle;
  BinaryMorphism phi;
  FiniteWord preimage;
  bool exchanged = false;
  Rational frequency;
};

inline StageStep stage_step(const FiniteWord& z) {
  const ShiftFactorization sf = factorize_over_standard_pair(z.view());
  StageStep st;
  st.pair = sf.pair;
  st.middle = sf.middle;
  st.phi = {sf.pair.x, sf.pair.y};
  st.preimage = FiniteWord(sf.tokenization.tokens);
  st.frequency = window_frequency(st.preimage);
  if (st.frequency >= Rational(1, 2)) {
    st.exchanged = true;
    st.phi = compose(st.phi, morphism_E());
    st.preimage = st.preimage.exchanged();
  }
  return st;
}

}  // namespace detail

/// Builds stages 0..depth (x_0 = z_0 = normalized seed window, psi_0 = id) and
/// phi_{depth+1}, so that every stage has a pair length.
inline FamilyResult construct_family(const InfiniteWordSpec& seed, const FamilyOptions& opt = {}) {
  FamilyResult res;
  res.seed = seed.render();
  FiniteWord w = seed.prefix(opt.window);
  const auto freq = seed.frequency();
  res.seed_exchanged = freq ? *freq > Quadratic(Rational(1, 2)) : detail::window_frequency(w) > Rational(1, 2);
  if (res.seed_exchanged) w = w.exchanged();
  auto iso = detail::isolate(w, opt.max_isolation_steps);
  if (!iso) {
    res.failure = "seed: 1s not isolated within " + std::to_string(opt.max_isolation_steps) + " F-steps";
    return res;
  }
  res.seed_isolation_steps = iso->second;

  FamilyStage cur;
  cur.index = 0;
  cur.x_window = iso->first;
  cur.z_window = iso->first;
  cur.psi = identity_morphism();
  cur.ones_isolated = true;
  cur.preimage_has_00_11 = true;
  for (std::size_t n = 0;; ++n) {
    detail::StageStep st;
    try {
      st = detail::stage_step(cur.z_window);
    } catch (const FactorizationError& e) {
      res.failure = "stage " + std::to_string(n) + ": hypothesis '" + e.hypothesis + "' failed: " + e.what();
      res.stages.push_back(cur);
      return res;
    }
    cur.phi = st.phi;
    cur.pair = st.pair;
    cur.unbalanced_middle = st.middle;
    cur.exchanged = st.exchanged;
    const BinaryMorphism next_psi = compose(cur.psi, st.phi);
    cur.pair_length = next_psi.image0.size() + next_psi.image1.size();
    // |psi_{n+1}(01)| = |phi(01)|_0 |psi_n(0)| + |phi(01)|_1 |psi_n(1)|.
    const FiniteWord phi01 = st.phi.image0 + st.phi.image1;
    const std::size_t predicted =
        (phi01.size() - phi01.weight()) * cur.psi.image0.size() + phi01.weight() * cur.psi.image1.size();
    cur.composition_identity = predicted == cur.pair_length && next_psi == compose(cur.psi, cur.phi);
    res.stages.push_back(cur);
    if (n == opt.depth) break;

    FamilyStage nxt;
    nxt.index = n + 1;
    nxt.y_window = st.preimage;
    nxt.preimage_frequency = st.frequency;
    nxt.preimage_has_00_11 = st.preimage.contains("00") && st.preimage.contains("11");
    auto z = detail::isolate(st.preimage, opt.max_isolation_steps);
    if (!z) {
      res.failure = "stage " + std::to_string(n + 1) + ": 1s of the preimage not isolated";
      return res;
    }
    nxt.z_window = z->first;
    nxt.isolation_steps = z->second;
    nxt.ones_isolated = !nxt.z_window.contains("11");
    nxt.psi = next_psi;
    nxt.x_window = next_psi.apply(nxt.z_window);
    // phi_{n+1}(z_{n+1}) against the corridor of the z_n window.
    const FiniteWord image = st.phi.apply(nxt.z_window);
    const std::size_t N = std::min<std::size_t>({image.size(), cur.z_window.size() / 4, 512});
    if (N >= 1) nxt.image_vs_previous = corridor_member(image, window_profile(cur.z_window.view(), N), N);
    if (nxt.z_window.size() < 8) {
      res.failure = "stage " + std::to_string(n + 1) + ": window exhausted (" + std::to_string(nxt.z_window.size()) +
                    " letters left); enlarge the seed window";
      res.stages.push_back(nxt);
      return res;
    }
    cur = std::move(nxt);
  }
  return res;
}

enum class Distinctness { distinct, not_distinct, inconclusive };

inline const char* to_string(Distinctness d) {
  switch (d) {
    case Distinctness::distinct: return "distinct";
    case Distinctness::not_distinct: return "not-distinct";
    case Distinctness::inconclusive: return "inconclusive";
  }
  return "?";
}

struct PairDistinctness {
  std::size_t m = 0, n = 0;
  Distinctness verdict = Distinctness::inconclusive;
  bool pair_length_grows = false;
  /// Shortest unbalanced pair lengths found in the x_m, x_n windows.
  std::optional<std::size_t> unbalanced_m, unbalanced_n;
  bool unbalanced_matches_pair_length = false;
  /// L_k differs for k = min and max pair length.
  bool differ_at_min = false;
  bool differ_at_max = false;
  /// Window length that would be needed when inconclusive.
  std::size_t required_window = 0;
  std::string note;
};

struct DistinctnessReport {
  std::vector<PairDistinctness> pairs;
  bool all_distinct = false;
};

/// Compares the windows of stages m < n. The x_m window contains 0w0 and 1w1 of
/// length L_m = |x_m y_m|, while every factor set of x_n shorter than L_n is
/// balanced; with L_m < L_n the languages differ at length L_m.
inline PairDistinctness compare_stages(const FamilyStage& a, const FamilyStage& b) {
  PairDistinctness pd;
  pd.m = a.index;
  pd.n = b.index;
  if (a.index == b.index || a.x_window == b.x_window) {
    pd.verdict = Distinctness::not_distinct;
    pd.note = "same stage";
    return pd;
  }
  const FamilyStage& lo = a.pair_length <= b.pair_length ? a : b;
  const FamilyStage& hi = a.pair_length <= b.pair_length ? b : a;
  pd.pair_length_grows = lo.index < hi.index && lo.pair_length < hi.pair_length;
  const std::size_t Lmin = lo.pair_length, Lmax = hi.pair_length;
  const auto ulo = shortest_unbalanced_pair(lo.x_window.view(), Lmax);
  const auto uhi = shortest_unbalanced_pair(hi.x_window.view(), Lmax);
  pd.unbalanced_m = ulo ? std::optional<std::size_t>(ulo->length) : std::nullopt;
  pd.unbalanced_n = uhi ? std::optional<std::size_t>(uhi->length) : std::nullopt;
  pd.unbalanced_matches_pair_length = ulo && ulo->length == Lmin && uhi && uhi->length == Lmax;
  const bool windows_long = lo.x_window.size() >= Lmax && hi.x_window.size() >= Lmax;
  if (windows_long) {
    pd.differ_at_min = factors(lo.x_window, Lmin) != factors(hi.x_window, Lmin);
    pd.differ_at_max = factors(lo.x_window, Lmax) != factors(hi.x_window, Lmax);
  }
  // Certificate: an unbalanced pair of length Lmin in x_lo, none up to Lmin in x_hi.
  const bool certified = ulo && ulo->length == Lmin && (!uhi || uhi->length > Lmin) && pd.pair_length_grows;
  if (certified) {
    pd.verdict = Distinctness::distinct;
  } else {
    pd.verdict = Distinctness::inconclusive;
    pd.required_window = 4 * Lmax * std::max<std::size_t>(1, Lmax);
    pd.note = "window does not expose the distinguishing unbalanced pair";
  }
  return pd;
}

inline DistinctnessReport verify_distinct(const std::vector<FamilyStage>& stages) {
  if (stages.size() < 2) throw ConfigError("distinctness needs at least two stages");
  DistinctnessReport rep;
  rep.all_distinct = true;
  for (std::size_t i = 0; i < stages.size(); ++i)
    for (std::size_t j = i + 1; j < stages.size(); ++j) {
      rep.pairs.push_back(compare_stages(stages[i], stages[j]));
      if (rep.pairs.back().verdict != Distinctness::distinct) rep.all_distinct = false;
    }
  return rep;
}

/// The default seed: fixed point of 0 -> 001111, 1 -> 0.
inline InfiniteWordSpec default_family_seed() { return InfiniteWordSpec::morphic({"001111", "0"}, '0'); }

}  // namespace abelsub
