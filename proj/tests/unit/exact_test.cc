// Copyright 2026 The Bimatrix Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <map>

#include <gtest/gtest.h>

#include "bimatrix/errors.h"
#include "bimatrix/exact/k_uniform.h"
#include "bimatrix/exact/lcp.h"
#include "bimatrix/exact/lemke_howson.h"
#include "bimatrix/exact/support_enumeration.h"
#include "bimatrix/metrics.h"
#include "oracle/oracles.h"

namespace bimatrix::exact {
namespace {

Matrix M2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

BimatrixGame BattleOfSexes() {
  return BimatrixGame::FromNormalized(M2(1, 0, 0, 0.5), M2(0.5, 0, 0, 1));
}

BimatrixGame MatchingPennies() {
  const Matrix raw = M2(1, -1, -1, 1);
  return BimatrixGame::Normalize(raw, -raw);
}

BimatrixGame RandomGame(int m, int n, uint32_t seed) {
  return BimatrixGame::FromNormalized(oracle::UniformMatrix(m, n, 2 * seed + 17),
                                      oracle::UniformMatrix(m, n, 2 * seed + 18));
}

double Distance(const MixedProfile& a, const MixedProfile& b) {
  return std::max((a.x - b.x).cwiseAbs().maxCoeff(), (a.y - b.y).cwiseAbs().maxCoeff());
}

TEST(SupportEnumerationTest, BattleOfSexesHasThreeEquilibria) {
  const auto result = SupportEnumeration(BattleOfSexes());
  ASSERT_EQ(result.equilibria.size(), 3u);
  EXPECT_EQ(Distance(result.equilibria[0], MixedProfile::Pure(2, 2, 0, 0)), 0.0);
  EXPECT_EQ(Distance(result.equilibria[1], MixedProfile::Pure(2, 2, 1, 1)), 0.0);
  Vector x, y;
  ASSERT_TRUE(oracle::MixedEquilibrium2x2(BattleOfSexes().R(), BattleOfSexes().C(), &x, &y));
  EXPECT_NEAR(x[0], 2.0 / 3, 1e-15);
  EXPECT_NEAR(y[0], 1.0 / 3, 1e-15);
  EXPECT_LE(Distance(result.equilibria[2], {x, y}), 1e-12);
}

TEST(SupportEnumerationTest, MatchingPenniesUnique) {
  const auto result = SupportEnumeration(MatchingPennies());
  ASSERT_EQ(result.equilibria.size(), 1u);
  EXPECT_LE(Distance(result.equilibria[0], MixedProfile::Uniform(2, 2)), 1e-12);
}

TEST(SupportEnumerationTest, OneByOne) {
  const auto g = BimatrixGame::FromNormalized(Matrix::Constant(1, 1, 0.3), Matrix::Constant(1, 1, 0.7));
  const auto result = SupportEnumeration(g);
  ASSERT_EQ(result.equilibria.size(), 1u);
  EXPECT_EQ(result.equilibria[0].x[0], 1.0);
}

TEST(SupportEnumerationTest, RandomGamesOddCountAndExact) {
  for (uint32_t seed = 0; seed < 30; ++seed) {
    const BimatrixGame g = RandomGame(4, 4, seed);
    const auto result = SupportEnumeration(g);
    EXPECT_EQ(result.equilibria.size() % 2, 1u) << seed;
    for (const auto& e : result.equilibria) EXPECT_LE(EpsilonOf(g, e).epsilon, 1e-8);
  }
}

TEST(KUniformTest, MatchingPenniesK2) {
  const auto result = KUniformSearch(MatchingPennies(), 2);
  EXPECT_TRUE(result.exhausted);
  EXPECT_EQ(result.metric, 0.0);
  EXPECT_LE(Distance(result.best, MixedProfile::Uniform(2, 2)), 1e-15);
  EXPECT_EQ(result.evaluated, 9);
}

TEST(KUniformTest, KOneIsBestPureProfile) {
  for (uint32_t seed = 0; seed < 10; ++seed) {
    const BimatrixGame g = RandomGame(4, 5, seed);
    for (SearchTarget target : {SearchTarget::kEpsilon, SearchTarget::kWsEpsilon}) {
      KUniformOptions options;
      options.target = target;
      const auto result = KUniformSearch(g, 1, options);
      double best = 2.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 5; ++j) {
          const auto p = MixedProfile::Pure(4, 5, i, j);
          const auto brute = oracle::PureDeviationMetrics(g.R(), g.C(), p.x, p.y);
          const double v = target == SearchTarget::kEpsilon
                               ? std::max(brute.regret_row, brute.regret_col)
                               : brute.ws;
          best = std::min(best, v);
        }
      EXPECT_NEAR(result.metric, best, 1e-12);
    }
  }
}

TEST(KUniformTest, MetricMatchesOracleAndCountsPairs) {
  const BimatrixGame g = RandomGame(3, 4, 5);
  KUniformOptions options;
  options.target = SearchTarget::kWsEpsilon;
  const auto result = KUniformSearch(g, 3, options);
  EXPECT_TRUE(result.exhausted);
  EXPECT_EQ(result.evaluated, oracle::MultisetCount(3, 3) * oracle::MultisetCount(4, 3));
  const auto brute = oracle::PureDeviationMetrics(g.R(), g.C(), result.best.x, result.best.y);
  EXPECT_NEAR(result.metric, brute.ws, 1e-12);
}

TEST(KUniformTest, BudgetAndStop) {
  const BimatrixGame g = RandomGame(5, 5, 9);
  KUniformOptions options;
  options.budget = 10;
  const auto limited = KUniformSearch(g, 4, options);
  EXPECT_TRUE(limited.budget_hit);
  EXPECT_EQ(limited.evaluated, 10);
  options.budget = 0;
  try {
    KUniformSearch(g, 2, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetZero);
  }
  options.budget = 1000000;
  options.stop_at = 1.0;
  const auto stopped = KUniformSearch(g, 2, options);
  EXPECT_TRUE(stopped.stopped_early);
  EXPECT_EQ(stopped.evaluated, 1);
}

TEST(KUniformTest, Sizes) {
  EXPECT_EQ(Kappa(0.1), 461);
  EXPECT_EQ(KForApproxNe(0.5, 10), 111);  // 12 ln 10 / 0.25 = 110.5
  EXPECT_EQ(KForWsne(0.5, 10), 24);       // 2 ln 20 / 0.25 = 23.97
}

TEST(LcpTest, OneByOneBlocks) {
  const LcpInstance lcp = LcpFromBlocks(Matrix::Constant(1, 1, 2.0), Matrix::Constant(1, 1, 3.0));
  Vector z(2);
  z << 1.0 / 3, 1.0 / 2;
  EXPECT_LE(ComplementarityResidual(lcp, z), 1e-15);
  const MixedProfile p = ProfileFromLcpSolution(lcp, z);
  EXPECT_EQ(p.x[0], 1.0);
  EXPECT_EQ(p.y[0], 1.0);
}

TEST(LcpTest, ShapeAndEquilibriaAreSolutions) {
  const BimatrixGame g = RandomGame(2, 3, 1);
  const LcpInstance lcp = ToLcp(g);
  EXPECT_EQ(lcp.M.rows(), 5);
  EXPECT_EQ(lcp.q, -Vector::Ones(5));
  EXPECT_GE(lcp.M.topRightCorner(2, 3).minCoeff(), 1.0);
  const auto zero_min = BimatrixGame::FromNormalized(M2(0, 1, 1, 1), M2(1, 1, 1, 1));
  EXPECT_EQ(ToLcp(zero_min).row_block.maxCoeff(), 2.0);
  for (const auto& e : SupportEnumeration(g).equilibria) {
    EXPECT_LE(ComplementarityResidual(lcp, LcpSolutionFromProfile(lcp, e)), 1e-12);
  }
}

TEST(LemkeHowsonTest, OneByOne) {
  const auto g = BimatrixGame::FromNormalized(Matrix::Constant(1, 1, 0.2), Matrix::Constant(1, 1, 0.9));
  const auto result = LemkeHowson(g);
  EXPECT_EQ(result.profile.x[0], 1.0);
  EXPECT_EQ(result.profile.y[0], 1.0);
}

TEST(LemkeHowsonTest, MatchingPenniesEveryLabel) {
  for (int label = 1; label <= 4; ++label) {
    LemkeHowsonOptions options;
    options.initial_label = label;
    const auto result = LemkeHowson(MatchingPennies(), options);
    EXPECT_LE(Distance(result.profile, MixedProfile::Uniform(2, 2)), 1e-12);
  }
}

TEST(LemkeHowsonTest, DegenerateGameTerminates) {
  const auto g = BimatrixGame::FromNormalized(M2(1, 0, 0, 0), M2(1, 0, 0, 0));
  for (int label = 1; label <= 4; ++label) {
    LemkeHowsonOptions options;
    options.initial_label = label;
    const auto result = LemkeHowson(g, options);
    EXPECT_LE(EpsilonOf(g, result.profile).epsilon, 1e-9);
  }
}

TEST(LemkeHowsonTest, HeldLabelsInvariant) {
  const BimatrixGame g = RandomGame(6, 5, 3);
  for (int label = 1; label <= 11; ++label) {
    LemkeHowsonOptions options;
    options.initial_label = label;
    options.on_pivot = [&](const TableauState& s) {
      std::map<int, int> held;
      for (int l = 1; l <= 11; ++l) {
        held[l] += std::find(s.row_basis.begin(), s.row_basis.end(), l) == s.row_basis.end();
        held[l] += std::find(s.col_basis.begin(), s.col_basis.end(), l) == s.col_basis.end();
      }
      int duplicates = 0;
      for (auto [l, count] : held) {
        if (l != s.dropped_label) {
          EXPECT_GE(count, 1) << "label " << l;
        }
        duplicates += count == 2;
      }
      EXPECT_LE(duplicates, 1);
    };
    LemkeHowson(g, options);
  }
}

TEST(LemkeHowsonTest, MatchesSupportEnumerationOnRandomGames) {
  for (uint32_t seed = 0; seed < 50; ++seed) {
    const BimatrixGame g = RandomGame(5, 5, 1000 + seed);
    const auto all = SupportEnumeration(g).equilibria;
    const auto lh = LemkeHowson(g).profile;
    double nearest = 1.0;
    for (const auto& e : all) nearest = std::min(nearest, Distance(e, lh));
    EXPECT_LE(nearest, 1e-6) << seed;
    EXPECT_EQ(all.size() % 2, 1u);
  }
}

TEST(LemkeHowsonTest, ExactArithmeticAgrees) {
  const BimatrixGame g = RandomGame(4, 4, 7);
  for (int label = 1; label <= 8; ++label) {
    LemkeHowsonOptions options;
    options.initial_label = label;
    const auto floating = LemkeHowson(g, options);
    options.exact_arithmetic = true;
    const auto exact = LemkeHowson(g, options);
    EXPECT_LE(Distance(floating.profile, exact.profile), 1e-9);
    EXPECT_EQ(floating.pivots, exact.pivots);
  }
}

TEST(LemkeHowsonTest, ErrorsOnCapAndLabel) {
  const BimatrixGame g = RandomGame(8, 8, 2);
  LemkeHowsonOptions options;
  options.pivot_cap = 1;
  try {
    LemkeHowson(g, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPivotCapExceeded);
  }
  options.pivot_cap = 0;
  options.initial_label = 17;
  EXPECT_THROW(LemkeHowson(g, options), Error);
}

}  // namespace
}  // namespace bimatrix::exact
