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

#include <cmath>

#include <gtest/gtest.h>

#include "bimatrix/errors.h"
#include "bimatrix/game.h"
#include "bimatrix/metrics.h"
#include "bimatrix/piecewise_linear.h"
#include "bimatrix/rng.h"
#include "oracle/oracles.h"

namespace bimatrix {
namespace {

Matrix M2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Vector V2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

BimatrixGame ExampleGame() {
  return BimatrixGame::Normalize(M2(1.0 / 3, 0, 1, 1), M2(1.0 / 3, 1, 0, 1));
}

TEST(NormalizeTest, PlusMinusOneRange) {
  const Matrix raw = M2(1, -1, -1, 1);
  const BimatrixGame g = BimatrixGame::Normalize(raw, -raw);
  EXPECT_EQ(g.R(), M2(1, 0, 0, 1));
  EXPECT_EQ(g.C(), M2(0, 1, 1, 0));
}

TEST(NormalizeTest, ConstantMatrixMapsToZeros) {
  const Matrix raw = Matrix::Constant(2, 2, 5.0);
  const BimatrixGame g = BimatrixGame::Normalize(raw, raw);
  EXPECT_TRUE(g.R().isZero());
  EXPECT_TRUE(g.C().isZero());
  EXPECT_EQ(g.row_map().scale, 1.0);
}

TEST(NormalizeTest, UnitRangeIsUnchanged) {
  const BimatrixGame g = ExampleGame();
  EXPECT_EQ(g.R(), M2(1.0 / 3, 0, 1, 1));
  EXPECT_EQ(g.C(), M2(1.0 / 3, 1, 0, 1));
}

TEST(NormalizeTest, RejectsNonFiniteAndShapes) {
  Matrix bad = M2(1, 0, 0, NAN);
  try {
    BimatrixGame::Normalize(bad, M2(0, 0, 0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFinitePayoff);
  }
  try {
    BimatrixGame::Normalize(Matrix::Zero(2, 3), Matrix::Zero(3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeMismatch);
  }
}

TEST(NormalizeTest, RecoversRawPayoffs) {
  const Matrix raw_r = 7.0 * oracle::UniformMatrix(4, 5, 1).array() - 3.0;
  const Matrix raw_c = -2.0 * oracle::UniformMatrix(4, 5, 2).array() + 11.0;
  const BimatrixGame g = BimatrixGame::Normalize(raw_r, raw_c);
  EXPECT_LE((g.RawR() - raw_r).cwiseAbs().maxCoeff(), 1e-12 * raw_r.cwiseAbs().maxCoeff());
  EXPECT_LE((g.RawC() - raw_c).cwiseAbs().maxCoeff(), 1e-12 * raw_c.cwiseAbs().maxCoeff());
  EXPECT_GE(g.R().minCoeff(), 0.0);
  EXPECT_LE(g.C().maxCoeff(), 1.0);
}

TEST(MetricsTest, ExampleGameValues) {
  const BimatrixGame g = ExampleGame();
  const MixedProfile p{V2(0, 1), V2(0.1, 0.9)};
  const ApproxReport r = EpsilonOf(g, p);
  EXPECT_NEAR(r.epsilon, 0.1, 1e-15);
  EXPECT_EQ(WsEpsilonOf(g, p), 1.0);
}

TEST(MetricsTest, MatchingPenniesUniformIsExact) {
  const Matrix raw = M2(1, -1, -1, 1);
  const BimatrixGame g = BimatrixGame::Normalize(raw, -raw);
  const ApproxReport r = EpsilonOf(g, MixedProfile::Uniform(2, 2));
  EXPECT_EQ(r.epsilon, 0.0);
  EXPECT_EQ(r.ws_epsilon, 0.0);
}

TEST(MetricsTest, CoordinationOffDiagonal) {
  const BimatrixGame g = BimatrixGame::FromNormalized(M2(1, 0, 0, 0.5), M2(1, 0, 0, 0.5));
  const MixedProfile p = MixedProfile::Pure(2, 2, 0, 1);
  const auto brute = oracle::PureDeviationMetrics(g.R(), g.C(), p.x, p.y);
  const ApproxReport r = EpsilonOf(g, p);
  EXPECT_EQ(r.regret_row, brute.regret_row);
  EXPECT_EQ(r.regret_col, brute.regret_col);
  EXPECT_EQ(r.epsilon, 1.0);
}

TEST(MetricsTest, EmptySupportAndDimensions) {
  const BimatrixGame g = ExampleGame();
  const BimatrixGame g3 = BimatrixGame::FromNormalized(Matrix::Zero(3, 3), Matrix::Zero(3, 3));
  try {
    WsEpsilonOf(g3, MixedProfile::Uniform(3, 3), 0.4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySupport);
  }
  const MixedProfile tiny{V2(1e-11, 1 - 1e-11), V2(0.5, 0.5)};
  EXPECT_NO_THROW(WsEpsilonOf(g, tiny));
  try {
    EpsilonOf(g, MixedProfile::Uniform(3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(MetricsTest, AgreesWithPureDeviationOracle) {
  for (uint32_t seed = 0; seed < 200; ++seed) {
    const BimatrixGame g = BimatrixGame::FromNormalized(
        oracle::UniformMatrix(6, 6, 3 * seed), oracle::UniformMatrix(6, 6, 3 * seed + 1));
    const MixedProfile p{oracle::UniformSimplexPoint(6, 7 * seed),
                         oracle::UniformSimplexPoint(6, 7 * seed + 3)};
    const ApproxReport r = EpsilonOf(g, p);
    const auto brute = oracle::PureDeviationMetrics(g.R(), g.C(), p.x, p.y);
    EXPECT_NEAR(r.regret_row, brute.regret_row, 1e-12);
    EXPECT_NEAR(r.regret_col, brute.regret_col, 1e-12);
    EXPECT_NEAR(r.ws_epsilon, std::max(brute.ws, r.epsilon), 1e-12);
    EXPECT_LE(r.epsilon, r.ws_epsilon + 1e-12);
    EXPECT_GE(r.exploitability, r.epsilon);
    EXPECT_LE(r.exploitability, 2 * r.epsilon + 1e-15);
  }
}

TEST(BestResponseTest, TieBreaksLow) {
  const Matrix raw = M2(1, -1, -1, 1);
  const BimatrixGame g = BimatrixGame::Normalize(raw, -raw);
  EXPECT_EQ(BestResponse(g, V2(1, 0), Player::kRow), 0);
  EXPECT_EQ(BestResponse(g, V2(0.5, 0.5), Player::kRow), 0);
  EXPECT_EQ(BestResponse(ExampleGame(), V2(0, 1), Player::kCol), 1);
  EXPECT_THROW(BestResponse(g, Vector::Ones(3) / 3, Player::kCol), Error);
}

TEST(BestResponseTest, InvariantUnderNormalization) {
  const Matrix raw_r = 10.0 * oracle::UniformMatrix(5, 4, 11).array() - 4.0;
  const Matrix raw_c = 3.0 * oracle::UniformMatrix(5, 4, 12).array();
  const BimatrixGame g = BimatrixGame::Normalize(raw_r, raw_c);
  for (uint32_t s = 0; s < 20; ++s) {
    const Vector y = oracle::UniformSimplexPoint(4, s);
    const Vector x = oracle::UniformSimplexPoint(5, 100 + s);
    Eigen::Index raw_row, raw_col;
    (raw_r * y).maxCoeff(&raw_row);
    (raw_c.transpose() * x).maxCoeff(&raw_col);
    EXPECT_EQ(BestResponse(g, y, Player::kRow), raw_row);
    EXPECT_EQ(BestResponse(g, x, Player::kCol), raw_col);
  }
}

TEST(EnvelopeTest, BeatsDenseGrid) {
  for (uint32_t seed = 0; seed < 100; ++seed) {
    const Matrix coef = oracle::UniformMatrix(7, 2, seed);
    std::vector<Line> lines;
    for (int k = 0; k < 7; ++k) lines.push_back({coef(k, 0), 2.0 * coef(k, 1) - 1.0});
    const EnvelopeMinimum best = MinimizeMaxOfLines(lines);
    for (int g = 0; g <= 1000; ++g) {
      const double t = g / 1000.0;
      double value = -1e300;
      for (const Line& l : lines) value = std::max(value, l.At(t));
      EXPECT_LE(best.value, value + 1e-12);
    }
    const EnvelopeMinimum up = MaximizeMinOfLines(lines);
    for (int g = 0; g <= 1000; ++g) {
      const double t = g / 1000.0;
      double value = 1e300;
      for (const Line& l : lines) value = std::min(value, l.At(t));
      EXPECT_GE(up.value, value - 1e-12);
    }
  }
}

TEST(RngTest, CounterIsPureFunction) {
  CounterRng a(42, 0), b(42, 0), c(42, 1);
  EXPECT_EQ(a.WordAt(17), b.WordAt(17));
  EXPECT_NE(a.WordAt(17), c.WordAt(17));
  for (int k = 0; k < 5; ++k) EXPECT_EQ(a.NextUnit(), b.UnitAt(k));
  // Reference values of the documented construction.
  EXPECT_EQ(Mix64(0), 0u);
  EXPECT_EQ(Mix64(0x9E3779B97F4A7C15ULL), 0xE220A8397B1DCDAFULL);
}

TEST(RngTest, UniformMean) {
  CounterRng rng(7, 3);
  double sum = 0.0;
  const int draws = 1000000;
  for (int k = 0; k < draws; ++k) sum += rng.NextUnit();
  EXPECT_NEAR(sum / draws, 0.5, 0.001);
}

}  // namespace
}  // namespace bimatrix
