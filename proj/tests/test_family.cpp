#include <gtest/gtest.h>

#include "abelsub/family.hpp"
#include "oracles.hpp"

using namespace abelsub;

namespace {

const FamilyResult& default_run() {
  static const FamilyResult r = [] {
    FamilyOptions o;
    o.depth = 2;
    o.window = 20000;
    return construct_family(default_family_seed(), o);
  }();
  return r;
}

}  // namespace

TEST(Family, DefaultSeedBuildsThreeStages) {
  const FamilyResult& r = default_run();
  ASSERT_FALSE(r.failure) << *r.failure;
  ASSERT_EQ(r.stages.size(), 3u);
  // (5 - sqrt 5)/5 > 1/2: the seed is exchanged first.
  EXPECT_TRUE(r.seed_exchanged);
  for (std::size_t i = 1; i < r.stages.size(); ++i) EXPECT_GT(r.stages[i].pair_length, r.stages[i - 1].pair_length);
}

TEST(Family, StageInvariants) {
  const FamilyResult& r = default_run();
  for (const auto& s : r.stages) {
    EXPECT_TRUE(s.composition_identity) << s.index;
    EXPECT_TRUE(s.ones_isolated) << s.index;
    EXPECT_FALSE(s.z_window.contains("11"));
    // x_n = psi_n(z_n).
    EXPECT_EQ(s.psi.apply(s.z_window), s.x_window);
    // The pair comes from the central middle: w'01 = xy.
    EXPECT_EQ(s.pair.x + s.pair.y, s.unbalanced_middle + FiniteWord("01"));
    if (s.index > 0) {
      EXPECT_TRUE(s.preimage_has_00_11);
      ASSERT_TRUE(s.image_vs_previous);
      EXPECT_EQ(s.image_vs_previous->verdict, Verdict::consistent);
      EXPECT_LT(2 * s.y_window.weight(), s.y_window.size());
    }
  }
}

TEST(Family, PsiIsTheProductOfThePhis) {
  const FamilyResult& r = default_run();
  BinaryMorphism psi = identity_morphism();
  for (const auto& s : r.stages) {
    EXPECT_EQ(s.psi, psi);
    psi = compose(psi, s.phi);
  }
}

TEST(Family, StagesStayInTheClosureOfTheSeed) {
  // E(x_n) against the seed corridor, checked by brute force on a sample.
  const FamilyResult& r = default_run();
  const std::string seed = default_family_seed().prefix(6000).str();
  for (const auto& s : r.stages) {
    const std::string x = s.x_window.exchanged().str().substr(0, 1500);
    EXPECT_TRUE(oracle::abelian_consistent(x, seed, 24)) << s.index;
  }
}

TEST(Family, StagesPairwiseDistinct) {
  const DistinctnessReport rep = verify_distinct(default_run().stages);
  EXPECT_TRUE(rep.all_distinct);
  EXPECT_EQ(rep.pairs.size(), 3u);
  for (const auto& p : rep.pairs) {
    EXPECT_TRUE(p.differ_at_min || p.differ_at_max);
    EXPECT_TRUE(p.pair_length_grows);
  }
}

TEST(Family, StageAgainstItselfIsNotDistinct) {
  const auto& s = default_run().stages[0];
  EXPECT_EQ(compare_stages(s, s).verdict, Distinctness::not_distinct);
  EXPECT_THROW(verify_distinct({s}), ConfigError);
}

TEST(Family, BalancedSeedFailsWithDiagnostic) {
  FamilyOptions o;
  o.depth = 1;
  o.window = 2000;
  const FamilyResult r = construct_family(InfiniteWordSpec::fibonacci(), o);
  ASSERT_TRUE(r.failure);
  EXPECT_NE(r.failure->find("unbalanced"), std::string::npos);
}

TEST(Family, ShortWindowIsInconclusiveNotWrong) {
  FamilyOptions o;
  o.depth = 2;
  o.window = 300;
  const FamilyResult r = construct_family(default_family_seed(), o);
  if (r.stages.size() >= 2) {
    for (const auto& p : verify_distinct(r.stages).pairs) EXPECT_NE(p.verdict, Distinctness::not_distinct);
  }
}
