#include <gtest/gtest.h>

#include "abelsub/abelian.hpp"
#include "oracles.hpp"

using namespace abelsub;
using oracle::Real;

namespace {

const InfiniteWordSpec kFib = InfiniteWordSpec::fibonacci();
const InfiniteWordSpec kTM = InfiniteWordSpec::thue_morse();

}  // namespace

TEST(Corridor, Examples) {
  const auto fib = corridor_profile(kFib, 8, default_sample(8));
  EXPECT_EQ(fib.min_weight[3], 1);
  EXPECT_EQ(fib.max_weight[3], 2);
  EXPECT_TRUE(fib.exact());
  const auto tm = corridor_profile(kTM, 8, default_sample(8));
  EXPECT_EQ(tm.min_weight[2], 0);
  EXPECT_EQ(tm.max_weight[2], 2);
  const auto p01 = corridor_profile(InfiniteWordSpec::parse("periodic:01"), 4, default_sample(4));
  EXPECT_EQ(p01.min_weight, (std::vector<long long>{0, 0, 1, 1, 2}));
  EXPECT_EQ(p01.max_weight, (std::vector<long long>{0, 1, 1, 2, 2}));
  EXPECT_THROW(corridor_profile(kFib, 10, 19), ConfigError);
}

TEST(Corridor, SturmianClosedFormMatchesEnumeration) {
  const std::string w = kFib.prefix(20000).str();
  const auto prof = sturmian_profile(fibonacci_slope(), 200);
  for (std::size_t n = 1; n <= 200; ++n) {
    const auto [lo, hi] = oracle::weight_range(w, n);
    EXPECT_EQ(prof.min_weight[n], lo) << n;
    EXPECT_EQ(prof.max_weight[n], hi) << n;
  }
}

TEST(Corridor, PeriodicClosedFormMatchesEnumeration) {
  std::mt19937_64 g(21);
  for (int i = 0; i < 30; ++i) {
    const std::string v = oracle::random_bits(g, 1 + g() % 12);
    std::string w;
    while (w.size() < 400) w += v;
    const auto prof = periodic_profile(FiniteWord(v), 40);
    for (std::size_t n = 1; n <= 40; ++n) {
      const auto [lo, hi] = oracle::weight_range(w, n);
      EXPECT_EQ(prof.min_weight[n], lo);
      EXPECT_EQ(prof.max_weight[n], hi);
    }
  }
}

TEST(Corridor, OuterBoundsAreNotExact) {
  EXPECT_EQ(carpet_envelope(1, 2, 10).provenance, Provenance::outer_bound);
  EXPECT_EQ(widened_sturmian_envelope(fibonacci_slope(), 10).provenance, Provenance::outer_bound);
  // An attained carpet envelope is promoted to exact.
  const auto tmprof = corridor_profile(kTM, 16, 4096);
  EXPECT_TRUE(tmprof.exact());
  EXPECT_EQ(tmprof.method.rfind("outer-bound-attained", 0), 0u);
}

TEST(Membership, Examples) {
  const auto c1 = corridor_member(InfiniteWordSpec::parse("periodic:01"), InfiniteWordSpec::parse("periodic:0011"), 64);
  EXPECT_EQ(c1.verdict, Verdict::consistent);
  EXPECT_TRUE(c1.sound);
  const auto c2 = corridor_member(InfiniteWordSpec::parse("periodic:0"), kTM, 16);
  ASSERT_EQ(c2.verdict, Verdict::refuted);
  EXPECT_EQ(c2.witness->length, 3u);
  EXPECT_EQ(c2.witness->weight, 0);
  EXPECT_EQ(c2.witness->allowed_min, 1);
  EXPECT_EQ(corridor_member(kFib, kFib, 128).verdict, Verdict::consistent);
}

TEST(Membership, AgreesWithBruteForceOnRandomPairs) {
  std::mt19937_64 g(23);
  for (int i = 0; i < 200; ++i) {
    const std::string v = oracle::random_bits(g, 1 + g() % 6), u = oracle::random_bits(g, 1 + g() % 6);
    std::string x, y;
    while (x.size() < 200) x += v;
    while (y.size() < 200) y += u;
    const auto cert = corridor_member(FiniteWord(y), periodic_profile(FiniteWord(v), 24), 24);
    EXPECT_EQ(cert.verdict == Verdict::consistent, oracle::abelian_consistent(y, x, 24)) << u << " vs " << v;
  }
}

TEST(AbelianComplexity, Examples) {
  for (std::size_t n = 1; n <= 50; ++n) EXPECT_EQ(abelian_complexity(kFib, n, 4096), 2u);
  EXPECT_EQ(abelian_complexity(kTM, 2, 1024), 3u);
  EXPECT_EQ(abelian_complexity(InfiniteWordSpec::parse("periodic:01"), 2, 64), 1u);
}

TEST(Balance, Examples) {
  EXPECT_EQ(balance_coefficient(kFib, 100, 4096), 1);
  EXPECT_FALSE(shortest_unbalanced_pair(kFib, 100, 4096));
  EXPECT_EQ(balance_coefficient(kTM, 100, 4096), 2);
  const auto tm = shortest_unbalanced_pair(kTM, 100, 4096);
  ASSERT_TRUE(tm);
  EXPECT_EQ(tm->length, 2u);
  EXPECT_TRUE(tm->middle.empty());
  const auto p = shortest_unbalanced_pair(InfiniteWordSpec::parse("periodic:0011"), 20, 200);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->length, 2u);
}

TEST(Balance, ShortestUnbalancedPairMatchesBruteForce) {
  std::mt19937_64 g(29);
  for (int i = 0; i < 100; ++i) {
    const std::string s = oracle::random_bits(g, 80);
    std::optional<std::size_t> expect;
    for (std::size_t n = 2; n <= 20 && !expect; ++n) {
      const auto fs = oracle::factor_set(s, n);
      for (const auto& f : fs)
        if (f.front() == '0' && f.back() == '0' && fs.count("1" + f.substr(1, n - 2) + "1")) expect = n;
    }
    const auto got = shortest_unbalanced_pair(s, 20);
    EXPECT_EQ(got ? std::optional<std::size_t>(got->length) : std::nullopt, expect) << s;
    if (got) {
      EXPECT_TRUE(FiniteWord(s).contains("0" + got->middle.str() + "0"));
      EXPECT_TRUE(FiniteWord(s).contains("1" + got->middle.str() + "1"));
    }
  }
}

TEST(FrequencyBounds, Examples) {
  const auto p = frequency_bounds(InfiniteWordSpec::parse("periodic:01"), 2, 64);
  EXPECT_EQ(p.upper[2], Rational(1, 2));
  EXPECT_EQ(p.lower[2], Rational(1, 2));
  const auto tm = frequency_bounds(kTM, 64, 4096);
  EXPECT_LE(tm.final_lower(), Rational(1, 2));
  EXPECT_GE(tm.final_upper(), Rational(1, 2));
  const auto fib = frequency_bounds(kFib, 64, 4096);
  const Quadratic a = fibonacci_slope();
  EXPECT_LE(Quadratic(fib.final_lower()), a);
  EXPECT_GE(Quadratic(fib.final_upper()), a);
  EXPECT_TRUE(fib.uniform_frequency_plausible);
}

TEST(PeriodicClosure, Examples) {
  EXPECT_EQ(closure_of_periodic(FiniteWord("01")).representatives, (std::vector<FiniteWord>{"01", "10"}));
  EXPECT_EQ(closure_of_periodic(FiniteWord("0")).representatives, (std::vector<FiniteWord>{"0"}));
  const auto c = closure_of_periodic(FiniteWord("0011")).representatives;
  EXPECT_NE(std::find(c.begin(), c.end(), FiniteWord("01")), c.end());
}

TEST(PeriodicClosure, MatchesExhaustiveOracle) {
  // Every point of A(v^w) has period |v| (length-|v| factors all weigh |v|_1),
  // so checking all 2^|v| words u against the corridor up to |v| is complete.
  std::mt19937_64 g(31);
  for (int i = 0; i < 25; ++i) {
    const std::string v = oracle::random_bits(g, 1 + g() % 10);
    std::string x;
    while (x.size() < 6 * v.size() + 20) x += v;
    std::set<std::pair<std::size_t, std::string>> expect;
    for (std::uint64_t b = 0; b < (1ull << v.size()); ++b) {
      const std::string u = oracle::all_bits(b, v.size());
      std::string y;
      while (y.size() < x.size()) y += u;
      if (!oracle::abelian_consistent(y, x, v.size())) continue;
      for (std::size_t r = 1; r <= u.size(); ++r) {
        if (u.size() % r) continue;
        std::string t;
        while (t.size() < u.size()) t += u.substr(0, r);
        if (t == u) {
          expect.insert({r, u.substr(0, r)});
          break;
        }
      }
    }
    std::vector<FiniteWord> want;
    for (const auto& [len, u] : expect) want.emplace_back(u);
    EXPECT_EQ(closure_of_periodic(FiniteWord(v)).representatives, want) << v;
  }
}

TEST(PeriodicClosure, CapRaisesWithPartialResult) {
  try {
    closure_of_periodic(FiniteWord("0011001100"), 5);
    FAIL() << "expected overflow";
  } catch (const ClosureOverflow& e) {
    EXPECT_TRUE(e.result.partial);
  }
}

TEST(RationalCarpet, Morphisms) {
  const auto half = rational_carpet(1, 2);
  EXPECT_EQ(half.phi, (BinaryMorphism{"01", "10"}));
  const auto third = rational_carpet(1, 3);
  EXPECT_EQ(third.phi, (BinaryMorphism{"001", "010"}));
  EXPECT_THROW(rational_carpet(2, 4), DomainError);
  EXPECT_THROW(rational_carpet(3, 2), DomainError);
}

TEST(RationalCarpet, FactorsStayWithinOneOfTheLine) {
  std::mt19937_64 g(37);
  for (auto [p, q] : {std::pair{1LL, 2LL}, {2LL, 5LL}, {3LL, 7LL}}) {
    const auto rc = rational_carpet(p, q);
    for (int i = 0; i < 10; ++i) {
      const std::string w = rc.member(FiniteWord(oracle::random_bits(g, 100))).str();
      for (std::size_t n = 1; n <= 40; ++n) {
        const auto [lo, hi] = oracle::weight_range(w, n);
        // |weight - n p / q| <= 1, in integers.
        EXPECT_LE(std::llabs(lo * q - static_cast<long long>(n) * p), q);
        EXPECT_LE(std::llabs(hi * q - static_cast<long long>(n) * p), q);
      }
    }
  }
}
