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

#include <gtest/gtest.h>

#include "bimatrix/errors.h"
#include "bimatrix/metrics.h"
#include "bimatrix/wsne/wsne.h"
#include "oracle/oracles.h"

namespace bimatrix::wsne {
namespace {

Matrix M2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

BimatrixGame MatchingPennies() {
  const Matrix raw = M2(1, -1, -1, 1);
  return BimatrixGame::Normalize(raw, -raw);
}

BimatrixGame RandomGame(int m, int n, uint32_t seed) {
  return BimatrixGame::FromNormalized(oracle::UniformMatrix(m, n, 2 * seed + 301),
                                      oracle::UniformMatrix(m, n, 2 * seed + 302));
}

BimatrixGame RandomZeroSum(int n, uint32_t seed) {
  const Matrix raw = oracle::UniformMatrix(n, n, seed + 501);
  return BimatrixGame::Normalize(raw, -raw);
}

double OracleWs(const BimatrixGame& g, const MixedProfile& p) {
  return oracle::PureDeviationMetrics(g.R(), g.C(), p.x, p.y).ws;
}

void ExpectConsistent(const BimatrixGame& g, const WsneResult& r) {
  EXPECT_NEAR(r.ws_epsilon, OracleWs(g, r.profile), 1e-12);
  EXPECT_LE(r.epsilon, r.ws_epsilon + 1e-12);
}

TEST(BestPure, FindsPureNash) {
  const BimatrixGame g =
      BimatrixGame::FromNormalized(M2(0.2, 0, 0, 1), M2(0, 0.3, 0, 1));
  const MixedProfile p = BestPureWsProfile(g);
  EXPECT_EQ(p.x[1], 1.0);
  EXPECT_EQ(p.y[1], 1.0);
}

TEST(Ks07, PureProfileWins) {
  const BimatrixGame g = BimatrixGame::FromNormalized(M2(1, 0, 0, 0.2), M2(1, 0.3, 0, 0));
  const WsneResult r = Ks07(g);
  EXPECT_EQ(r.tactic, Tactic::kPure);
  EXPECT_EQ(r.profile.x[0], 1.0);
  EXPECT_EQ(r.profile.y[0], 1.0);
  EXPECT_EQ(r.ws_epsilon, 0.0);
}

TEST(Ks07, ZeroSumIsExact) {
  for (uint32_t s = 0; s < 10; ++s) {
    const BimatrixGame g = RandomZeroSum(8, s);
    Ks07Options zero_sum_first;
    zero_sum_first.pure_first = false;
    const WsneResult r = Ks07(g, zero_sum_first);
    EXPECT_LE(r.ws_epsilon, 1e-8);
  }
}

TEST(Ks07, GuaranteeAndZeroSumBound) {
  for (uint32_t s = 0; s < 30; ++s) {
    const BimatrixGame g = RandomGame(3 + s % 6, 2 + s % 9, s);
    const WsneResult r = Ks07(g);
    ExpectConsistent(g, r);
    EXPECT_LE(r.ws_epsilon, kKsBound + 1e-9);
    Ks07Options zero_sum_first;
    zero_sum_first.pure_first = false;
    const WsneResult z = Ks07(g, zero_sum_first);
    if (z.tactic == Tactic::kZeroSum) {
      const Matrix sum = -(g.R() + g.C());
      EXPECT_LE(z.ws_epsilon, 0.5 * (sum.maxCoeff() - sum.minCoeff()) + 1e-9);
    }
  }
}

TEST(Fgss12, MatchingPenniesSubgame) {
  const WsneResult r = Fgss12(MatchingPennies());
  EXPECT_NEAR(r.ws_epsilon, 0.0, 1e-12);
  EXPECT_NEAR(r.profile.x[0], 0.5, 1e-12);
  EXPECT_NEAR(r.profile.y[0], 0.5, 1e-12);
}

TEST(Fgss12, PairScanIsOptimalOnTwoByTwo) {
  // On a 2x2 game every profile with full support is in the scan, so nothing
  // on a fine grid beats it.
  for (uint32_t s = 0; s < 10; ++s) {
    const BimatrixGame g = RandomGame(2, 2, 40 + s);
    const WsneResult r = Fgss12(g);
    ExpectConsistent(g, r);
    double grid = 1.0;
    for (int a = 0; a <= 100; ++a) {
      for (int b = 0; b <= 100; ++b) {
        Vector x(2), y(2);
        x << a / 100.0, 1 - a / 100.0;
        y << b / 100.0, 1 - b / 100.0;
        grid = std::min(grid, OracleWs(g, {x, y}));
      }
    }
    EXPECT_LE(r.ws_epsilon, grid + 1e-12);
  }
}

TEST(Fgss12, GuaranteeOnRandomGames) {
  for (uint32_t s = 0; s < 10; ++s) {
    const BimatrixGame g = RandomGame(6, 7, 60 + s);
    const WsneResult r = Fgss12(g);
    EXPECT_EQ(r.status, WsneStatus::kOk);
    ExpectConsistent(g, r);
    EXPECT_LE(r.ws_epsilon, 0.6607 + 1e-9);
  }
}

TEST(Fgss12, LargeGameReportsTimeout) {
  // Cyclic game without a pure NE, so the scan is not skipped by early exit.
  Matrix r_pay = Matrix::Zero(6, 6);
  Matrix c_pay = Matrix::Zero(6, 6);
  for (int i = 0; i < 6; ++i) {
    r_pay(i, i) = 1.0;
    c_pay(i, (i + 1) % 6) = 1.0;
  }
  Fgss12Options opts;
  opts.size_cap_2x2 = 5;
  const WsneResult r = Fgss12(BimatrixGame::FromNormalized(r_pay, c_pay), opts);
  EXPECT_EQ(r.status, WsneStatus::kTimeout);
  EXPECT_LE(r.ws_epsilon, 1.0);
}

TEST(Cdffjs06528, ZeroSumIsExact) {
  for (uint32_t s = 0; s < 10; ++s) {
    const BimatrixGame g = RandomZeroSum(10, 20 + s);
    const WsneResult r = Cdffjs15_06528(g);
    EXPECT_EQ(r.tactic, Tactic::kZeroSum);
    EXPECT_LE(r.ws_epsilon, 1e-8);
  }
}

TEST(Cdffjs06528, GuaranteeOnRandomGames) {
  for (uint32_t s = 0; s < 30; ++s) {
    const BimatrixGame g = RandomGame(2 + s % 9, 2 + (s * 7) % 10, 80 + s);
    const WsneResult r = Cdffjs15_06528(g);
    EXPECT_EQ(r.status, WsneStatus::kOk);
    ExpectConsistent(g, r);
    EXPECT_LE(r.ws_epsilon, kCdffjsWsBound + 1e-9);
  }
}

TEST(Dfm22, LowPayoffBranch) {
  // The row player's maxmin value is 0, so branch one applies.
  const BimatrixGame g = BimatrixGame::FromNormalized(M2(1, 0, 0, 1), M2(0, 0.2, 0.3, 0));
  const WsneResult r = Dfm22_12(g);
  EXPECT_EQ(r.tactic, Tactic::kLowPayoff);
  EXPECT_LE(r.ws_epsilon, 0.5 + 1e-12);
}

TEST(Dfm22, ZeroSumUsesLowHighBranch) {
  for (uint32_t s = 0; s < 10; ++s) {
    const BimatrixGame g = RandomZeroSum(10, 40 + s);
    const WsneResult r = Dfm22_12(g);
    EXPECT_EQ(r.status, WsneStatus::kOk);
    EXPECT_LE(r.ws_epsilon, 0.5 + 0.1 + 1e-9);
    ExpectConsistent(g, r);
  }
}

TEST(Dfm22, HighPayoffBranch) {
  // Both maxmin values are 0.8 and every column earns 0.8 against any row
  // mixture, so only the k-uniform search remains. It stops at the pure NE.
  const Matrix pay = M2(1, 0.6, 0.6, 1);
  const BimatrixGame g = BimatrixGame::FromNormalized(pay, pay);
  Dfm22Options opts;
  opts.search_budget = 1000;
  const WsneResult r = Dfm22_12(g, opts);
  EXPECT_EQ(r.tactic, Tactic::kHighPayoff);
  EXPECT_EQ(r.status, WsneStatus::kOk);
  EXPECT_LE(r.ws_epsilon, 0.5 + opts.delta + 1e-9);
}

TEST(Dfm22, RejectsBadArguments) {
  Dfm22Options opts;
  opts.delta = 0.0;
  EXPECT_THROW(Dfm22_12(MatchingPennies(), opts), Error);
  opts.delta = 0.1;
  opts.search_budget = 0;
  EXPECT_THROW(Dfm22_12(MatchingPennies(), opts), Error);
}

TEST(Names, TacticsAndStatuses) {
  EXPECT_STREQ(TacticName(Tactic::kSubgame2x2), "subgame_2x2");
  EXPECT_STREQ(WsneStatusName(WsneStatus::kPrecisionError), "precision_error");
}

}  // namespace
}  // namespace bimatrix::wsne
