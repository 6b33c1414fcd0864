#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "abelsub/word_spec.hpp"
#include "oracles.hpp"

using namespace abelsub;

TEST(WordSpec, Prefixes) {
  EXPECT_EQ(InfiniteWordSpec::fibonacci().prefix(8), FiniteWord("01001010"));
  EXPECT_EQ(InfiniteWordSpec::thue_morse().prefix(8), FiniteWord("01101001"));
  EXPECT_EQ(InfiniteWordSpec::periodic(FiniteWord("01")).prefix(5), FiniteWord("01010"));
  EXPECT_EQ(InfiniteWordSpec::parse("dir:2:1").prefix(6), FiniteWord("001000"));
}

TEST(WordSpec, ThueMorseMatchesBitParity) {
  const FiniteWord tm = InfiniteWordSpec::thue_morse().prefix(4096);
  for (std::size_t i = 0; i < tm.size(); ++i) EXPECT_EQ(tm.bit(i), __builtin_popcountll(i) & 1) << i;
}

TEST(WordSpec, ParseRenderRoundTrip) {
  for (const char* lit : {"fib", "tm", "periodic:0011", "dir:2:1,3", "dir:1,2,3:4", "morphic:0->001111,1->0:0",
                          "carpet:2/5:tm", "flip:3:0110", "pair:010,01:fib"}) {
    const InfiniteWordSpec s = InfiniteWordSpec::parse(lit);
    EXPECT_EQ(s.render(), lit);
    EXPECT_EQ(InfiniteWordSpec::parse(s.render()), s);
    EXPECT_EQ(InfiniteWordSpec::parse(s.render()).prefix(300), s.prefix(300));
  }
  const InfiniteWordSpec rot = InfiniteWordSpec::parse("rot:sqrt(2)-1:1/3");
  EXPECT_EQ(InfiniteWordSpec::parse(rot.render()).prefix(500), rot.prefix(500));
  const InfiniteWordSpec d1 = InfiniteWordSpec::parse("dir:1");
  EXPECT_EQ(InfiniteWordSpec::parse(d1.render()), d1);
  EXPECT_EQ(d1.prefix(300), FiniteWord("01").power(150));  // finite sequence: (S_1)^omega
}

TEST(WordSpec, Errors) {
  EXPECT_THROW(InfiniteWordSpec::parse("nonsense:1"), ConfigError);
  EXPECT_THROW(InfiniteWordSpec::parse("periodic:"), ConfigError);
  EXPECT_THROW(InfiniteWordSpec::parse("morphic:0->1,1->0:0"), ConfigError);  // not prolongable
  EXPECT_THROW(InfiniteWordSpec::parse("rot:1/2:0"), ConfigError);            // rational slope
  EXPECT_THROW(InfiniteWordSpec::parse("pair:01,010:fib"), DomainError);
  EXPECT_THROW(InfiniteWordSpec::parse("carpet:2/4:fib"), DomainError);
}

TEST(WordSpec, Frequencies) {
  EXPECT_EQ(*InfiniteWordSpec::fibonacci().frequency(), fibonacci_slope());
  EXPECT_EQ(*InfiniteWordSpec::thue_morse().frequency(), Quadratic(Rational(1, 2)));
  EXPECT_EQ(*InfiniteWordSpec::parse("periodic:010").frequency(), Quadratic(Rational(1, 3)));
  EXPECT_EQ(*InfiniteWordSpec::parse("carpet:2/5:fib").frequency(), Quadratic(Rational(2, 5)));
}

TEST(WordSpec, MorphicFixedPointIsFixed) {
  const InfiniteWordSpec s = InfiniteWordSpec::parse("morphic:0->001111,1->0:0");
  const FiniteWord w = s.prefix(5000);
  EXPECT_EQ(w.str().substr(0, 4000), oracle::morph(w.str(), "001111", "0").substr(0, 4000));
}

TEST(WordSpec, CarpetAndPairProducts) {
  const InfiniteWordSpec c = InfiniteWordSpec::parse("carpet:1/3:periodic:01");
  EXPECT_EQ(c.prefix(12), FiniteWord("001010001010"));
  const InfiniteWordSpec p = InfiniteWordSpec::parse("pair:010,01:periodic:0011");
  EXPECT_EQ(p.prefix(10), FiniteWord("0100100101"));
}

TEST(WordSpec, PeriodicSturmian) {
  EXPECT_EQ(periodic_sturmian(FiniteWord("010")).prefix(6), FiniteWord("010010"));
  EXPECT_THROW(periodic_sturmian(FiniteWord("011")), DomainError);
}

TEST(WordSpec, FileBacked) {
  const std::string path = ::testing::TempDir() + "abelsub_word.txt";
  {
    std::ofstream f(path);
    f << "0110100110010110\n";
  }
  const InfiniteWordSpec s = InfiniteWordSpec::parse("file:" + path);
  EXPECT_EQ(s.prefix(8), FiniteWord("01101001"));
  EXPECT_THROW(s.prefix(100), RangeError);
  std::remove(path.c_str());
}
