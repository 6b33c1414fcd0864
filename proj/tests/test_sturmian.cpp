#include <gtest/gtest.h>

#include "abelsub/flipping.hpp"
#include "abelsub/standard_pair.hpp"
#include "abelsub/sturmian.hpp"
#include "oracles.hpp"

using namespace abelsub;
using oracle::Real;

namespace {

Real fib_real() { return oracle::quad("1.5", "-0.5", 5); }

// Standard words by the recurrence itself, on strings.
std::string standard_by_recurrence(const std::vector<long long>& a, std::size_t n) {
  std::string prev = "1", cur = "0";
  for (std::size_t k = 1; k <= n; ++k) {
    std::string next;
    const long long e = a[k - 1];
    for (long long j = 0; j < e; ++j) next += cur;
    next += prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

TEST(StandardSequence, PaperValues) {
  EXPECT_EQ(standard_sequence(DirectiveSequence::finite({1, 1, 1, 1}), 4), FiniteWord("01001010"));
  EXPECT_EQ(standard_sequence(DirectiveSequence::finite({3}), 1), FiniteWord("0001"));
  EXPECT_EQ(standard_sequence(DirectiveSequence::finite({0, 2}), 1), FiniteWord("1"));
  EXPECT_EQ(standard_sequence(DirectiveSequence::fibonacci(), -1), FiniteWord("1"));
  EXPECT_EQ(standard_sequence(DirectiveSequence::fibonacci(), 0), FiniteWord("0"));
  EXPECT_THROW(standard_sequence(DirectiveSequence::finite({1, 2}), 3), RangeError);
}

TEST(StandardSequence, MatchesRecurrence) {
  for (const auto& a : std::vector<std::vector<long long>>{{1, 1, 1, 1, 1, 1}, {3, 1, 2, 4, 1}, {2, 2, 2, 2, 2}}) {
    const auto dir = DirectiveSequence::finite(a);
    for (std::size_t n = 1; n <= a.size(); ++n)
      EXPECT_EQ(standard_sequence(dir, static_cast<long long>(n)).str(), standard_by_recurrence(a, n));
  }
}

TEST(CharacteristicWord, FibonacciPrefixes) {
  EXPECT_EQ(characteristic_prefix(DirectiveSequence::fibonacci(), 8), FiniteWord("01001010"));
  // S_3 = 0010001 for directive (2,1,1,...).
  EXPECT_EQ(characteristic_prefix(DirectiveSequence::eventually_periodic({2}, {1}), 6), FiniteWord("001000"));
}

TEST(CharacteristicWord, AgreesWithMechanicalFormula) {
  // c_alpha from floor((n+1)a) - floor(na) in 50 digits.
  const std::vector<std::pair<const char*, Real>> slopes{
      {"(3-sqrt(5))/2", fib_real()},
      {"sqrt(2)-1", oracle::quad("-1", "1", 2)},
      {"(sqrt(3)-1)/2", oracle::quad("-0.5", "0.5", 3)}};
  for (const auto& [lit, val] : slopes) {
    const auto dir = directive_of_slope(Slope::parse(lit));
    EXPECT_EQ(characteristic_prefix(dir, 2000).str(), oracle::characteristic(val, 2000)) << lit;
  }
}

TEST(Directive, SlopeRoundTrip) {
  EXPECT_EQ(slope_of_directive(DirectiveSequence::fibonacci()), fibonacci_slope());
  EXPECT_EQ(directive_of_slope(Slope(fibonacci_slope())), DirectiveSequence::fibonacci());
  const auto d = directive_of_slope(Slope::parse("sqrt(2)-1"));
  EXPECT_EQ(d.render(), "1:2");
  EXPECT_EQ(slope_of_directive(d), parse_quadratic("sqrt(2)-1"));
}

TEST(StandardWord, OfRationalSlope) {
  EXPECT_EQ(standard_word_of_slope(2, 5), FiniteWord("01001"));
  EXPECT_EQ(standard_word_of_slope(1, 3), FiniteWord("001"));
  for (auto [p, q] : {std::pair{1LL, 2LL}, {3LL, 7LL}, {5LL, 8LL}}) {
    const FiniteWord s = standard_word_of_slope(p, q);
    EXPECT_EQ(s.size(), static_cast<std::size_t>(q));
    EXPECT_EQ(s.weight(), static_cast<std::size_t>(p));
    EXPECT_TRUE(is_standard_word(s));
  }
}

TEST(Central, Examples) {
  EXPECT_TRUE(is_central(FiniteWord("000")));
  EXPECT_TRUE(is_central(FiniteWord("010")));
  EXPECT_FALSE(is_central(FiniteWord("011")));
  const auto d = central_decomposition(FiniteWord("010"));
  EXPECT_EQ(d.p, FiniteWord("0"));
  EXPECT_EQ(d.q, FiniteWord(""));
  EXPECT_EQ(std::set<std::size_t>({d.k, d.l}), std::set<std::size_t>({3, 2}));
  EXPECT_THROW(central_decomposition(FiniteWord("011")), DomainError);
}

TEST(Central, MatchesPeriodDefinitionExhaustively) {
  // Central: letter power, or periods k, l coprime with |w| = k + l - 2.
  for (std::size_t len = 0; len <= 14; ++len) {
    for (std::uint64_t b = 0; b < (1ull << len); ++b) {
      const std::string s = oracle::all_bits(b, len);
      bool expect = s.find('0') == std::string::npos || s.find('1') == std::string::npos;
      for (std::size_t k = 1; k <= len + 1 && !expect; ++k) {
        const std::size_t l = len + 2 - k;
        if (l < 1 || std::gcd(k, l) != 1) continue;
        auto period = [&](std::size_t p) {
          for (std::size_t i = 0; i + p < len; ++i)
            if (s[i] != s[i + p]) return false;
          return true;
        };
        expect = period(k) && period(l);
      }
      EXPECT_EQ(is_central(FiniteWord(s)), expect) << s;
    }
  }
}

TEST(StandardPairs, GammaDelta) {
  const StandardPair base{FiniteWord("0"), FiniteWord("1")};
  EXPECT_EQ(gamma(base), (StandardPair{FiniteWord("0"), FiniteWord("01")}));
  EXPECT_EQ(delta(base), (StandardPair{FiniteWord("10"), FiniteWord("1")}));
  EXPECT_EQ(delta(delta(base)), (StandardPair{FiniteWord("110"), FiniteWord("1")}));
  EXPECT_TRUE(is_standard_pair({FiniteWord("010"), FiniteWord("01")}));
  EXPECT_FALSE(is_standard_pair({FiniteWord("01"), FiniteWord("010")}));
  EXPECT_TRUE(is_unordered_standard_pair(FiniteWord("01"), FiniteWord("010")));
}

TEST(StandardPairs, FactorizationOfCentralWords) {
  EXPECT_EQ(standard_pair_factorization(FiniteWord("010")), (StandardPair{FiniteWord("010"), FiniteWord("01")}));
  EXPECT_EQ(standard_pair_factorization(FiniteWord("00100")), (StandardPair{FiniteWord("0010"), FiniteWord("001")}));
  EXPECT_EQ(standard_pair_factorization(FiniteWord("000")), (StandardPair{FiniteWord("0"), FiniteWord("0001")}));
  EXPECT_EQ(standard_pair_factorization(FiniteWord("11")), (StandardPair{FiniteWord("110"), FiniteWord("1")}));
  EXPECT_THROW(standard_pair_factorization(FiniteWord("011")), DomainError);
}

TEST(StandardPairs, EveryReachablePairComesFromACentralWord) {
  // Breadth-first over Gamma/Delta: each pair (x, y) with |xy| >= 2 has
  // xy = w01 or w10 for a central w.
  std::vector<StandardPair> layer{{FiniteWord("0"), FiniteWord("1")}};
  for (int depth = 0; depth < 8; ++depth) {
    std::vector<StandardPair> next;
    for (const auto& p : layer) {
      const FiniteWord xy = p.x + p.y;
      const FiniteWord w = xy.prefix(xy.size() - 2);
      EXPECT_TRUE(is_central(w)) << xy.str();
      if (xy.ends_with("01")) { EXPECT_EQ(standard_pair_factorization(w), p); }
      next.push_back(gamma(p));
      next.push_back(delta(p));
    }
    layer = std::move(next);
  }
}

TEST(Rotation, Examples) {
  const Slope a(fibonacci_slope());
  EXPECT_EQ(rotation_word({a, a.value()}, 8), FiniteWord("01001010"));
  EXPECT_EQ(rotation_word({a, Quadratic(0)}, 3), FiniteWord("001"));
  EXPECT_EQ(rotation_word({a, Quadratic(1) - a.value()}, 1), FiniteWord("1"));
  EXPECT_THROW(rotation_word({Slope::ratio(1, 2), Quadratic(0)}, 4), DomainError);
}

TEST(Rotation, MatchesMechanicalWordAwayFromBoundaries) {
  // Intercept 1/3 never hits the discontinuities for an irrational slope, so
  // the interval coding equals the lower mechanical word floor((n+1)a + r) -
  // floor(na + r) shifted by the convention 0 in I0 = [0, 1 - a).
  const Slope a = Slope::parse("sqrt(2)-1");
  const Real av = oracle::quad("-1", "1", 2);
  const Real r = Real(1) / 3;
  EXPECT_EQ(rotation_word({a, Quadratic(Rational(1, 3))}, 3000).str(), oracle::lower_mechanical(av, r, 3000));
}

TEST(Rotation, EndpointConventions) {
  const Slope a(fibonacci_slope());
  RotationParams p{a, Quadratic(0)};
  p.zero_in_I0 = false;
  EXPECT_EQ(rotation_word(p, 1), FiniteWord("1"));
  RotationParams q{a, Quadratic(1) - a.value()};
  q.one_minus_alpha_in_I1 = false;
  EXPECT_EQ(rotation_word(q, 1), FiniteWord("0"));
}

TEST(Flipping, AllZeroBitsGiveTheCharacteristicWord) {
  const auto dir = DirectiveSequence::fibonacci();
  EXPECT_EQ(flipping_family(dir, 3, "0", 3000), characteristic_prefix(dir, 3000));
  EXPECT_THROW(flipping_family(dir, 2, "0", 10), DomainError);
}

TEST(Flipping, FlipLastTwo) {
  EXPECT_EQ(flip_last_two(FiniteWord("01001")), FiniteWord("01010"));
  EXPECT_EQ(flip_last_two(FiniteWord("010")), FiniteWord("001"));
}

TEST(Flipping, EveryFlippedWordStaysInTheWidenedCorridor) {
  // Oracle: factor weights against floor(n a) - 1 .. ceil(n a) + 1 in 50 digits.
  const auto dir = DirectiveSequence::fibonacci();
  const Real a = fib_real();
  for (const char* bits : {"1", "10", "0110", "111000"}) {
    const std::string w = flipping_family(dir, 3, bits, 4000).str();
    for (std::size_t n = 1; n <= 60; ++n) {
      const auto [lo, hi] = oracle::weight_range(w, n);
      EXPECT_GE(lo, static_cast<int>(floor(Real(n) * a)) - 1);
      EXPECT_LE(hi, static_cast<int>(ceil(Real(n) * a)) + 1);
    }
  }
}
