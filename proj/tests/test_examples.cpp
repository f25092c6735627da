#include "soldyn/autdyn.hpp"
#include "soldyn/cyclo.hpp"
#include "soldyn/examples.hpp"
#include "soldyn/exactlin.hpp"
#include "soldyn/groupdyn.hpp"

#include "fixtures.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace soldyn;
using namespace soldyn::testing;
using namespace soldyn::examples;

TEST(Tower, SmallCases) {
  EXPECT_EQ(tower_alpha(1), (RatMatrix{{1}}));
  EXPECT_EQ(tower_alpha(2), (RatMatrix{{1, 1}, {0, 1}}));
  EXPECT_EQ(tower_alpha(3), (RatMatrix{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));
  EXPECT_THROW(tower_alpha(0), std::invalid_argument);
}

TEST(Tower, UnipotentWithOneDimensionalLayers) {
  for (std::size_t k = 1; k <= 8; ++k) {
    const RatMatrix a = tower_alpha(k);
    EXPECT_TRUE((a - RatMatrix::identity(k)).pow(k).is_zero()) << k;
    EXPECT_TRUE(torus_validate(a));
    auto v = distal_series_group(solenoid({a}));
    EXPECT_TRUE(v.distal) << k;
    ASSERT_EQ(v.series.finite_layers(), k) << k;
    for (std::size_t i = 0; i + 1 < v.series.chain.size(); ++i)
      EXPECT_EQ(v.series.chain[i + 1].dim() - v.series.chain[i].dim(), 1u) << k;
  }
}

TEST(GammaPlus, LiftExamples) {
  EXPECT_EQ(gamma_plus_lift(RatMatrix{{1}}, QVec{0}), RatMatrix::identity(2));
  EXPECT_EQ(gamma_plus_lift(RatMatrix{{2}}, QVec{0}), (RatMatrix{{2, 0}, {0, 1}}));
  EXPECT_EQ(gamma_plus_lift(golden_mean(), QVec{1, 0}), (RatMatrix{{1, 1, 1}, {1, 0, 0}, {0, 0, 1}}));
}

TEST(GammaPlus, LiftAlwaysHasEigenvalueOne) {
  Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
    QVec w(n);
    for (auto& x : w) x = rand_int(rng, -3, 3);
    const RatMatrix m = gamma_plus_lift(random_invertible_int_matrix(rng, n, -3, 3), w);
    EXPECT_FALSE(is_ergodic_auto(m).ergodic);
  }
}

TEST(GammaPlus, GoldenWithBothTranslationsIsErgodic) {
  auto g = gamma_plus_genset(solenoid({golden_mean()}), {QVec{1, 0}, QVec{0, 1}});
  EXPECT_EQ(g.dim(), 3u);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.label(1), "t1");
  EXPECT_TRUE(is_ergodic_group(g).ergodic);
}

TEST(GammaPlus, NeedsANonzeroTranslation) {
  EXPECT_THROW(gamma_plus_genset(solenoid({golden_mean()}), {}), std::invalid_argument);
  EXPECT_THROW(gamma_plus_genset(solenoid({golden_mean()}), {QVec{0, 0}}), std::invalid_argument);
}

TEST(GammaPlus, OneDimensionalBaseHasNoErgodicElement) {
  auto g = gamma_plus_genset(solenoid({RatMatrix{{2}}}), {QVec{1}});
  EXPECT_EQ(g.dim(), 2u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(is_ergodic_group(g).ergodic);
  for (const auto& w : element_enumerate(g, 4)) EXPECT_FALSE(is_ergodic_auto(w.matrix).ergodic);
}

TEST(GammaPlus, EveryElementFixesACharacterDirection) {
  for (const auto& g : {gamma_plus_genset(solenoid({golden_mean()}), {QVec{1, 0}, QVec{0, 1}}),
                        gamma_plus_genset(solenoid({RatMatrix{{2}}}), {QVec{1}})}) {
    for (const auto& w : element_enumerate(g, 4)) {
      auto ord = root_of_unity_eigenvalue(w.matrix);
      ASSERT_TRUE(ord.has_value());
      EXPECT_EQ(*ord, 1u);
    }
  }
}

TEST(GammaPlus, LiftsCompose) {
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    const RatMatrix a = random_invertible_rat_matrix(rng, n);
    const RatMatrix b = random_invertible_rat_matrix(rng, n);
    QVec w(n), w2(n);
    for (std::size_t k = 0; k < n; ++k) {
      w[k] = rand_int(rng, -4, 4);
      w2[k] = Rat(rand_int(rng, -4, 4).get_num(), rand_int(rng, 1, 4).get_num());
      w2[k].canonicalize();
    }
    QVec aw2 = a.apply(w2);
    for (std::size_t k = 0; k < n; ++k) aw2[k] += w[k];
    EXPECT_EQ(gamma_plus_lift(a, w) * gamma_plus_lift(b, w2), gamma_plus_lift(a * b, aw2));
  }
}

TEST(Fixtures, Deterministic) {
  EXPECT_EQ(golden_mean(), golden_mean());
  EXPECT_EQ(tower_alpha(5), tower_alpha(5));
  EXPECT_EQ(heisenberg_pair(), heisenberg_pair());
  auto base = solenoid({golden_mean()});
  EXPECT_EQ(gamma_plus_genset(base, {QVec{1, 0}}).gens(), gamma_plus_genset(base, {QVec{1, 0}}).gens());
}
