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

#include <cstdio>
#include <filesystem>

#include <gtest/gtest.h>

#include "bimatrix/errors.h"
#include "bimatrix/io/game_io.h"
#include "bimatrix/io/generators.h"
#include "bimatrix/metrics.h"
#include "bimatrix/rng.h"

namespace bimatrix::io {
namespace {

GameSpec Random(GameFamily family, int m, int n, uint64_t seed) {
  GameSpec s;
  s.family = family;
  s.rows = m;
  s.cols = n;
  s.seed = seed;
  return s;
}

TEST(Generate, DeterministicAndInRange) {
  const GameSpec spec = Random(GameFamily::kRandomGeneral, 10, 10, 0);
  const BimatrixGame a = Generate(spec);
  const BimatrixGame b = Generate(spec);
  EXPECT_EQ(a.R(), b.R());
  EXPECT_EQ(a.C(), b.C());
  EXPECT_GE(a.R().minCoeff(), 0.0);
  EXPECT_LE(a.C().maxCoeff(), 1.0);
  EXPECT_NE(a.R(), a.C());
}

TEST(Generate, DocumentedStreamLayout) {
  const BimatrixGame g = Generate(Random(GameFamily::kRandomGeneral, 3, 4, 77));
  EXPECT_EQ(g.R()(2, 1), CounterRng(77, 0).UnitAt(2 * 4 + 1));
  EXPECT_EQ(g.C()(1, 3), CounterRng(77, 1).UnitAt(1 * 4 + 3));
}

TEST(Generate, ZeroSumComplements) {
  const BimatrixGame g = Generate(Random(GameFamily::kRandomZeroSum, 6, 5, 3));
  EXPECT_LT(((g.R() + g.C()).array() - 1.0).abs().maxCoeff(), 1e-12);
  EXPECT_EQ(g.R().minCoeff(), 0.0);
  EXPECT_EQ(g.R().maxCoeff(), 1.0);
}

TEST(Generate, UniformMarginals) {
  const BimatrixGame g = Generate(Random(GameFamily::kRandomGeneral, 1000, 1000, 11));
  EXPECT_GE(g.R().mean(), 0.499);
  EXPECT_LE(g.R().mean(), 0.501);
}

TEST(Generate, RejectsBadSizes) {
  EXPECT_THROW(Generate(Random(GameFamily::kRandomGeneral, 0, 3, 1)), Error);
}

TEST(Fixtures, WsneDiffExample) {
  const BimatrixGame g = Fixture("wsne-diff");
  EXPECT_DOUBLE_EQ(g.R()(0, 0), 1.0 / 3.0);
  EXPECT_EQ(g.C()(0, 1), 1.0);
  Vector x(2), y(2);
  x << 0.0, 1.0;
  y << 0.1, 0.9;
  const ApproxReport r = EpsilonOf(g, {x, y});
  EXPECT_NEAR(r.epsilon, 0.1, 1e-12);
  EXPECT_NEAR(r.ws_epsilon, 1.0, 1e-12);
}

TEST(Fixtures, AllNamesResolve) {
  for (const std::string& name : FixtureNames()) EXPECT_NO_THROW(Fixture(name)) << name;
  try {
    Fixture("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownFixture);
  }
}

TEST(GameIo, RoundTripIsExact) {
  for (const BimatrixGame& g :
       {Fixture("wsne-diff"), Generate(Random(GameFamily::kRandomGeneral, 7, 5, 9)),
        Generate(Random(GameFamily::kRandomZeroSum, 4, 6, 2))}) {
    const BimatrixGame back = ParseGame(FormatGame(g));
    EXPECT_EQ(back.R(), g.R());
    EXPECT_EQ(back.C(), g.C());
  }
}

TEST(GameIo, FileRoundTrip) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "bimatrix_io_test.game").string();
  const BimatrixGame g = Fixture("rps");
  WriteGame(g, path);
  const BimatrixGame back = ReadGame(path);
  EXPECT_EQ(back.R(), g.R());
  std::remove(path.c_str());
  EXPECT_THROW(ReadGame(path), Error);
}

TEST(GameIo, CommentsAndRawPayoffs) {
  const BimatrixGame g = ParseGame("# header follows\n2 2\n3 -1 # row one\n-1 1\n\n0 2\n2 0\n");
  EXPECT_EQ(g.R()(0, 0), 1.0);
  EXPECT_EQ(g.R()(0, 1), 0.0);
  EXPECT_EQ(g.RawR()(0, 0), 3.0);
  EXPECT_EQ(g.C()(0, 1), 1.0);
}

TEST(GameIo, MalformedHeaderReportsLineOne) {
  try {
    ParseGame("2 x\n1 0\n0 1\n\n1 0\n0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 3);
  }
  EXPECT_THROW(ParseGame("2\n"), ParseError);
}

TEST(GameIo, BadNumberPosition) {
  try {
    ParseGame("2 2\n1 0\n0 1\n\n1 0.5.5\n0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(GameIo, ShapeMismatch) {
  try {
    ParseGame("2 2\n1 0\n0 1\n1 1\n\n1 0\n0 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeMismatch);
  }
  try {
    ParseGame("2 2\n1 0 1\n0 1\n\n1 0\n0 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeMismatch);
  }
}

TEST(ProfileIo, RoundTrip) {
  const MixedProfile p = MixedProfile::Uniform(3, 2);
  const MixedProfile q = ParseProfile(FormatProfile(p));
  EXPECT_EQ(p.x, q.x);
  EXPECT_EQ(p.y, q.y);
  EXPECT_THROW(ParseProfile("0.5 0.5\n"), ParseError);
}

TEST(Families, NamesRoundTrip) {
  EXPECT_EQ(ParseGameFamily("random_zero_sum"), GameFamily::kRandomZeroSum);
  EXPECT_THROW(ParseGameFamily("gamut"), Error);
}

}  // namespace
}  // namespace bimatrix::io
