#pragma once

// Named finite-window property suites, one per lemma id, shared by the CLI
// `verify` command. Each suite is deterministic for a given RNG seed.

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "abelsub/abelian.hpp"
#include "abelsub/family.hpp"
#include "abelsub/structure.hpp"
#include "abelsub/transforms.hpp"

namespace abelsub {

struct SuiteOptions {
  std::optional<InfiniteWordSpec> spec;
  std::size_t window = 256;
  std::uint64_t seed = 1;
  /// Cap on states/candidates for exhaustive searches.
  std::size_t state_cap = std::size_t{1} << 24;
};

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string name) : id(std::move(name)) {}

  std::string id;
  bool passed = true;
  std::size_t checks = 0;
  /// Every check was made against an exact corridor or by exhaustive search.
  bool sound = true;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      passed = false;
      if (failures.size() < 20) failures.push_back(what);
    }
  }
};

/// Deterministic helpers on top of mt19937_64 (no distribution objects, whose
/// output is implementation-defined).
class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  std::string bits(std::size_t n) {
    std::string s(n, '0');
    for (auto& c : s) c = below(2) ? '1' : '0';
    return s;
  }

 private:
  std::mt19937_64 gen_;
};

namespace suites {

inline std::string mismatch(const MembershipCertificate& c) {
  std::ostringstream out;
  out << to_string(c.verdict);
  if (c.witness)
    out << " at n=" << c.witness->length << " factor " << c.witness->factor.str() << " weight " << c.witness->weight
        << " allowed [" << c.witness->allowed_min << "," << c.witness->allowed_max << "]";
  return out.str();
}

inline std::vector<InfiniteWordSpec> default_specs() {
  return {InfiniteWordSpec::fibonacci(), InfiniteWordSpec::thue_morse(), InfiniteWordSpec::parse("periodic:0011"),
          InfiniteWordSpec::parse("dir:2:1,3"), default_family_seed()};
}

// Random periodic word with a period of length 2..max_len.
inline FiniteWord random_period(SuiteRng& rng, std::size_t max_len) {
  return FiniteWord(rng.bits(2 + rng.below(max_len - 1)));
}

inline SuiteResult corridor_reflexive(const SuiteOptions& o) {
  SuiteResult r{"corridor-reflexive"};
  const auto specs = o.spec ? std::vector<InfiniteWordSpec>{*o.spec} : default_specs();
  for (const auto& s : specs) {
    const auto c = corridor_member(s, s, o.window, 8 * o.window);
    r.check(c.verdict == Verdict::consistent, s.render() + ": " + mismatch(c));
  }
  return r;
}

inline SuiteResult traffic_membership(const SuiteOptions& o) {
  SuiteResult r{"traffic-membership"};
  SuiteRng rng(o.seed);
  std::vector<InfiniteWordSpec> specs;
  if (o.spec) {
    specs.push_back(*o.spec);
  } else {
    specs.push_back(InfiniteWordSpec::fibonacci());
    for (int i = 0; i < 20; ++i) specs.push_back(InfiniteWordSpec::periodic(random_period(rng, 24)));
  }
  const std::size_t M = 8 * o.window;
  for (const auto& s : specs) {
    const CorridorProfile ref = corridor_profile(s, o.window, M);
    const FiniteWord image = traffic_F(s, M);
    const auto c = corridor_member(image, ref, o.window);
    r.check(c.verdict == Verdict::consistent, "F(" + s.render() + "): " + mismatch(c));
    if (!ref.exact()) r.sound = false;
  }
  return r;
}

inline SuiteResult squeeze_membership(const SuiteOptions& o) {
  SuiteResult r{"squeeze-membership"};
  std::vector<InfiniteWordSpec> specs;
  if (o.spec) specs.push_back(*o.spec);
  else specs = {InfiniteWordSpec::thue_morse(), default_family_seed(), InfiniteWordSpec::parse("periodic:0011")};
  const std::size_t n = 2 * o.window;
  for (const auto& s : specs) {
    const auto alpha = s.frequency();
    if (!alpha) throw ConfigError("squeeze suite needs a spec with a known exact frequency: " + s.render());
    const CorridorProfile ref = corridor_profile(s, o.window, 32 * o.window);
    if (!ref.exact()) r.sound = false;
    for (const Rational& C : {Rational(1, 10), Rational(1, 2), Rational(1)}) {
      for (SqueezeMode mode : {SqueezeMode::upper, SqueezeMode::two_sided}) {
        const FiniteWord out = squeeze(s, SqueezeParams{*alpha, Quadratic(C), mode}, n);
        const auto c = corridor_member(out, ref, o.window);
        r.check(c.verdict == Verdict::consistent,
                s.render() + " C=" + to_string(C) + (mode == SqueezeMode::upper ? " upper" : " both") + ": " + mismatch(c));
      }
    }
  }
  return r;
}

inline SuiteResult preimage_obstruction_suite(const SuiteOptions& o) {
  SuiteResult r{"preimage-nn"};
  for (std::size_t n = 0; n <= 2; ++n) {
    const auto res = preimages_F(preimage_obstruction(n), n + 1, 0, o.state_cap);
    r.check(res.preimages.empty(), preimage_obstruction(n).str() + " has an order-" + std::to_string(n + 1) + " preimage");
  }
  const FiniteWord pattern = FiniteWord("01").power(6);
  const auto res = preimages_F(pattern, 1, 0, o.state_cap);
  r.check(std::find(res.preimages.begin(), res.preimages.end(), FiniteWord("01").power(7)) != res.preimages.end(),
          "(01)^7 is not an order-1 preimage of (01)^6");
  return r;
}

// Least k with no cyclic 11 in F^k(v^omega); F acts on periodic words as the
// cyclic rule followed by a rotation.
inline std::optional<std::size_t> cyclic_isolation_steps(const FiniteWord& v, std::size_t max_iter) {
  std::string cur = v.str();
  const std::size_t q = cur.size();
  for (std::size_t k = 0; k <= max_iter; ++k) {
    bool has11 = false;
    for (std::size_t i = 0; i < q; ++i) has11 |= cur[i] == '1' && cur[(i + 1) % q] == '1';
    if (!has11) return k;
    std::string next(q, '0');
    for (std::size_t i = 0; i < q; ++i)
      next[i] = detail::traffic_letter(cur[i], cur[(i + 1) % q], cur[(i + 2) % q]);
    cur = std::move(next);
  }
  return std::nullopt;
}

inline SuiteResult isolation(const SuiteOptions& o) {
  SuiteResult r{"isolation"};
  SuiteRng rng(o.seed);
  for (int made = 0; made < 50;) {
    const FiniteWord v = random_period(rng, 30);
    if (2 * v.weight() >= v.size() || !(v + v).contains("11")) continue;
    ++made;
    const auto expect = cyclic_isolation_steps(v, 4 * v.size());
    const std::size_t max_iter = 4 * v.size();
    const auto got = iterate_F_until_isolated(InfiniteWordSpec::periodic(v), max_iter, 4 * v.size());
    r.check(expect && got.terminated && got.iterations == *expect,
            "periodic:" + v.str() + " iterations " + std::to_string(got.iterations));
  }
  return r;
}

inline std::string random_generators(SuiteRng& rng, std::size_t max_depth) {
  std::string g;
  const std::size_t depth = 1 + rng.below(max_depth);
  for (std::size_t i = 0; i < depth; ++i) g += "DEG"[rng.below(3)];
  return g;
}

inline SuiteResult sturmian_morphism_closure(const SuiteOptions& o) {
  SuiteResult r{"sturmian-morphism-closure"};
  SuiteRng rng(o.seed);
  // z in A(y): Sturmian words of equal slope (any intercept).
  const Quadratic a1 = fibonacci_slope();
  const Quadratic a2 = Quadratic(Rational(0), Rational(1), 2) - Quadratic(1);  // sqrt 2 - 1
  std::vector<std::pair<InfiniteWordSpec, InfiniteWordSpec>> pairs;
  for (const auto& a : {a1, a2}) {
    const InfiniteWordSpec y = InfiniteWordSpec::directive(directive_of_slope(Slope(a)));
    for (const auto& rho : {Quadratic(0), Quadratic(Rational(1, 3)), a * Quadratic(2)})
      pairs.emplace_back(InfiniteWordSpec::rotation(RotationParams{Slope(a), rho}), y);
  }
  for (int i = 0; i < 10; ++i) {
    const std::string gens = random_generators(rng, 5);
    const BinaryMorphism f = morphism_from_generators(gens);
    for (const auto& [z, y] : pairs) {
      const Quadratic beta = image_frequency(f, *y.frequency());
      const std::size_t N = o.window;
      const FiniteWord fz = apply_morphism(f, z, 4 * N);
      const auto c = corridor_member(fz, sturmian_profile(beta, N), N);
      r.check(c.verdict == Verdict::consistent, gens + " on " + z.render() + ": " + mismatch(c));
    }
  }
  // The non-Sturmian example: f(z) leaves the corridor of f(y).
  const BinaryMorphism f = parse_morphism("0->100001,1->010");
  const FiniteWord fy = f.apply(FiniteWord("0011"));
  const auto c = corridor_member(f.apply(FiniteWord("01").power(20)), periodic_profile(fy, 8), 8);
  r.check(c.verdict == Verdict::refuted && c.witness && c.witness->length == 5,
          "0->100001,1->010 should refute at n=5: " + mismatch(c));
  return r;
}

inline SuiteResult rational_carpet_suite(const SuiteOptions& o) {
  SuiteResult r{"rational-carpet"};
  SuiteRng rng(o.seed);
  const std::size_t N = std::min<std::size_t>(o.window, 100);
  for (auto [p, q] : {std::pair{1LL, 2LL}, {1LL, 3LL}, {2LL, 5LL}}) {
    const RationalCarpet rc = rational_carpet(p, q);
    const CorridorProfile env = carpet_envelope(p, q, N);
    for (int i = 0; i < 20; ++i) {
      const FiniteWord w = rc.member(FiniteWord(rng.bits(400)));
      const auto c = corridor_member(w, env, N);
      r.check(c.verdict == Verdict::consistent, std::to_string(p) + "/" + std::to_string(q) + ": " + mismatch(c));
    }
  }
  return r;
}

inline SuiteResult flipping_corridor(const SuiteOptions& o) {
  SuiteResult r{"flipping-corridor"};
  SuiteRng rng(o.seed);
  const DirectiveSequence dir = DirectiveSequence::fibonacci();
  const CorridorProfile env = widened_sturmian_envelope(slope_of_directive(dir), o.window);
  for (int i = 0; i < 20; ++i) {
    const std::string bits = rng.bits(1 + rng.below(16));
    const FiniteWord w = flipping_family(dir, 3, bits, 8 * o.window);
    const auto c = corridor_member(w, env, o.window);
    r.check(c.verdict == Verdict::consistent, "bits " + bits + ": " + mismatch(c));
  }
  return r;
}

inline SuiteResult family_distinct(const SuiteOptions& o) {
  SuiteResult r{"family-distinct"};
  const InfiniteWordSpec seed = o.spec ? *o.spec : default_family_seed();
  FamilyOptions fo;
  fo.depth = 2;
  fo.window = std::max<std::size_t>(20000, 40 * o.window);
  const FamilyResult fr = construct_family(seed, fo);
  r.check(!fr.failure && fr.stages.size() == 3, "construction: " + fr.failure.value_or("too few stages"));
  if (fr.stages.size() < 2) return r;
  for (const auto& s : fr.stages) {
    r.check(s.composition_identity, "psi identity at stage " + std::to_string(s.index));
    r.check(s.ones_isolated, "1s isolated at stage " + std::to_string(s.index));
    r.check(s.preimage_has_00_11, "00 and 11 in y at stage " + std::to_string(s.index));
    if (s.image_vs_previous)
      r.check(s.image_vs_previous->verdict == Verdict::consistent, "phi(z) vs z at stage " + std::to_string(s.index));
  }
  const auto rep = verify_distinct(fr.stages);
  for (const auto& p : rep.pairs)
    r.check(p.verdict == Distinctness::distinct, "stages " + std::to_string(p.m) + "," + std::to_string(p.n) + ": " +
                                                     to_string(p.verdict));
  r.sound = false;
  return r;
}

inline SuiteResult periodic_closure(const SuiteOptions& o) {
  SuiteResult r{"periodic-closure"};
  const auto c01 = closure_of_periodic(FiniteWord("01"), o.state_cap);
  r.check(c01.representatives == std::vector<FiniteWord>{FiniteWord("01"), FiniteWord("10")}, "closure of (01)^w");
  const auto c0011 = closure_of_periodic(FiniteWord("0011"), o.state_cap);
  r.check(std::find(c0011.representatives.begin(), c0011.representatives.end(), FiniteWord("01")) !=
              c0011.representatives.end(),
          "closure of (0011)^w lacks (01)^w");
  // Shift-closed: every rotation of a representative is a representative.
  for (const auto& u : c0011.representatives) {
    const FiniteWord rot = u.substr(1) + u.prefix(1);
    r.check(std::find(c0011.representatives.begin(), c0011.representatives.end(), rot) != c0011.representatives.end(),
            "rotation of " + u.str() + " missing");
  }
  return r;
}

inline SuiteResult morse_hedlund(const SuiteOptions& o) {
  SuiteResult r{"morse-hedlund"};
  const std::size_t N = std::min<std::size_t>(o.window, 50);
  const FiniteWord fib = InfiniteWordSpec::fibonacci().prefix(16 * N + 64);
  for (std::size_t n = 1; n <= N; ++n)
    r.check(factor_complexity(fib.view(), n) == n + 1, "Fibonacci rho(" + std::to_string(n) + ")");
  r.check(balance_coefficient(fib.view(), N) == 1, "Fibonacci balance coefficient");
  r.check(!is_window_periodic(fib.view(), N).periodic, "Fibonacci flagged periodic");
  const auto per = is_window_periodic(FiniteWord("01").power(64).view(), N);
  r.check(per.periodic && per.extends_periodically && per.period == 2, "(01)^w not flagged periodic");
  const FiniteWord tm = InfiniteWordSpec::thue_morse().prefix(16 * N + 64);
  r.check(balance_coefficient(tm.view(), N) == 2, "Thue-Morse balance coefficient");
  const auto up = shortest_unbalanced_pair(tm.view(), N);
  r.check(up && up->length == 2, "Thue-Morse shortest unbalanced pair");
  return r;
}

inline SuiteResult central_roundtrip(const SuiteOptions&) {
  SuiteResult r{"central-roundtrip"};
  for (std::size_t len = 0; len <= 12; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::string s(len, '0');
      for (std::size_t i = 0; i < len; ++i) s[i] = (bits >> (len - 1 - i)) & 1 ? '1' : '0';
      const FiniteWord w(s);
      if (!is_central(w)) continue;
      const CentralDecomposition d = central_decomposition(w);
      if (!d.letter_power) {
        r.check(d.p + FiniteWord("10") + d.q == w && d.q + FiniteWord("01") + d.p == w, "decomposition of " + s);
        r.check(std::gcd(d.k, d.l) == 1 && d.k + d.l == w.size() + 2, "periods of " + s);
      }
      const StandardPair sp = standard_pair_factorization(w);
      r.check(sp.x + sp.y == w + FiniteWord("01") && is_standard_pair(sp), "pair of " + s);
    }
  }
  return r;
}

inline SuiteResult rotation_vs_directive(const SuiteOptions& o) {
  SuiteResult r{"rotation-vs-directive"};
  const std::size_t n = std::max<std::size_t>(o.window, 64);
  for (const char* lit : {"(3-sqrt(5))/2", "sqrt(2)-1", "(5-sqrt(5))/10", "(sqrt(3)-1)/2", "(sqrt(5)-1)/2"}) {
    const Slope a = Slope::parse(lit);
    const FiniteWord rot = rotation_word(RotationParams{a, a.value()}, n);
    const FiniteWord dir = characteristic_prefix(directive_of_slope(a), n);
    r.check(rot == dir, std::string("slope ") + lit);
  }
  return r;
}

}  // namespace suites

inline const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>>& suite_registry() {
  static const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>> reg{
      {"corridor-reflexive", suites::corridor_reflexive},
      {"traffic-membership", suites::traffic_membership},
      {"squeeze-membership", suites::squeeze_membership},
      {"preimage-nn", suites::preimage_obstruction_suite},
      {"isolation", suites::isolation},
      {"sturmian-morphism-closure", suites::sturmian_morphism_closure},
      {"rational-carpet", suites::rational_carpet_suite},
      {"flipping-corridor", suites::flipping_corridor},
      {"family-distinct", suites::family_distinct},
      {"periodic-closure", suites::periodic_closure},
      {"morse-hedlund", suites::morse_hedlund},
      {"central-roundtrip", suites::central_roundtrip},
      {"rotation-vs-directive", suites::rotation_vs_directive},
  };
  return reg;
}

inline SuiteResult run_suite(const std::string& id, const SuiteOptions& o) {
  const auto& reg = suite_registry();
  auto it = reg.find(id == "preimage-nⁿ" ? std::string("preimage-nn") : id);
  if (it == reg.end()) throw ConfigError("unknown lemma id '" + id + "'");
  return it->second(o);
}

}  // namespace abelsub
