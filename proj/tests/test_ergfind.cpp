#include "soldyn/autdyn.hpp"
#include "soldyn/ergfind.hpp"
#include "soldyn/groupdyn.hpp"

#include "fixtures.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace soldyn;
using namespace soldyn::testing;
using examples::golden_mean;
using examples::rotation_order4;
using examples::unipotent2;

namespace {

GenSet one(const RatMatrix& m) { return solenoid({m}); }

LowerCentralSeries series_of(const GenSet& g) { return verify_nilpotent(g).series; }

}  // namespace

TEST(FindNondistal, DiagonalPair) {
  auto g = solenoid({diag({2, 1}), diag({1, 2})});
  auto pick = find_nondistal_element(g, series_of(g), 4);
  ASSERT_TRUE(pick.has_value());
  EXPECT_EQ(to_string(g, pick->element), "g1");
  EXPECT_EQ(pick->level, 1u);
}

TEST(FindNondistal, DistalGroupsHaveNone) {
  for (const auto& m : {unipotent2(), rotation_order4()}) {
    auto g = one(m);
    EXPECT_FALSE(find_nondistal_element(g, series_of(g), 4).has_value());
  }
}

TEST(FindNondistal, PickIsNonDistalAndItsLevelBelowIsDistal) {
  auto g = solenoid({examples::heisenberg_pair()[0] * Rat(2), examples::heisenberg_pair()[1]});
  auto s = series_of(g);
  auto pick = find_nondistal_element(g, s, 3);
  ASSERT_TRUE(pick.has_value());
  EXPECT_FALSE(is_distal_auto(pick->element.matrix).distal);
  EXPECT_EQ(evaluate(g, pick->element.letters), pick->element.matrix);
  const auto below = s.level_generators(pick->level);
  if (!below.empty()) {
    std::vector<RatMatrix> mats;
    for (const auto& w : below) mats.push_back(w.matrix);
    EXPECT_TRUE(distal_series_group(solenoid(mats)).distal);
  }
}

TEST(FindErgodic, DiagonalPair) {
  auto g = solenoid({diag({2, 1}), diag({1, 2})});
  auto res = find_ergodic_nilpotent(g);
  ASSERT_TRUE(res.found.has_value());
  EXPECT_TRUE(is_ergodic_auto(res.found->matrix).ergodic);
  EXPECT_LE(res.found->length(), 2u);
  EXPECT_EQ(evaluate(g, res.found->letters), res.found->matrix);
}

TEST(FindErgodic, SingleErgodicGenerator) {
  auto res = find_ergodic_nilpotent(one(golden_mean()));
  ASSERT_TRUE(res.found.has_value());
  EXPECT_EQ(res.found->letters, std::vector<int>{1});
}

TEST(FindErgodic, GammaPlusIsNotNilpotent) {
  auto gp = examples::gamma_plus_genset(one(golden_mean()), {QVec{1, 0}, QVec{0, 1}});
  try {
    find_ergodic_nilpotent(gp);
    FAIL() << "expected NotNilpotent";
  } catch (const NotNilpotent& e) {
    ASSERT_TRUE(e.witness().has_value());
    EXPECT_FALSE(e.witness()->matrix.is_identity());
  }
}

TEST(FindErgodic, NonErgodicGroupIsRejected) {
  EXPECT_THROW(find_ergodic_nilpotent(one(rotation_order4())), NotErgodicGroup);
  EXPECT_THROW(find_ergodic_nilpotent(one(unipotent2())), NotErgodicGroup);
}

TEST(FindErgodic, ZeroCapsAreReportedAsExhausted) {
  auto g = solenoid({diag({2, 1}), diag({1, 2})});
  SearchLimits limits;
  limits.word_cap = 0;
  limits.power_cap = 0;
  try {
    find_ergodic_nilpotent(g, limits);
    FAIL() << "expected CapsExhausted";
  } catch (const CapsExhausted& e) {
    EXPECT_FALSE(e.partial().found.has_value());
    EXPECT_FALSE(e.partial().diagnostics.empty());
  }
}

TEST(FindErgodic, FixtureCorpusIsSoundWithValidFiltrations) {
  for (const auto& f : nilpotent_ergodic_fixtures()) {
    ASSERT_TRUE(is_ergodic_group(f.group).ergodic) << f.name;
    auto res = find_ergodic_nilpotent(f.group);
    ASSERT_TRUE(res.found.has_value()) << f.name;
    EXPECT_TRUE(is_ergodic_auto(res.found->matrix).ergodic) << f.name;
    EXPECT_EQ(evaluate(f.group, res.found->letters), res.found->matrix) << f.name;
    if (res.from_fallback) continue;
    ASSERT_FALSE(res.filtration.empty()) << f.name;
    std::size_t prev = f.group.dim();
    for (const auto& step : res.filtration) {
      EXPECT_LT(step.quotient_dual.dim(), prev) << f.name;
      prev = step.quotient_dual.dim();
      for (const auto& m : f.group.gens()) EXPECT_TRUE(step.quotient_dual.is_invariant(m)) << f.name;
    }
    EXPECT_TRUE(res.filtration.back().quotient_dual.is_zero()) << f.name;
  }
}
