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

#include "bimatrix/io/generators.h"

#include "bimatrix/errors.h"
#include "bimatrix/io/game_io.h"
#include "bimatrix/rng.h"

namespace bimatrix::io {
namespace {

Matrix UniformMatrix(int m, int n, uint64_t seed, uint64_t stream) {
  const CounterRng rng(seed, stream);
  Matrix out(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      out(i, j) = rng.UnitAt(static_cast<uint64_t>(i) * n + j);
    }
  }
  return out;
}

Matrix Rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix out(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (double v : row) out(i, j++) = v;
    ++i;
  }
  return out;
}

}  // namespace

BimatrixGame Generate(const GameSpec& spec) {
  switch (spec.family) {
    case GameFamily::kFixture:
      return Fixture(spec.name);
    case GameFamily::kFile:
      return ReadGame(spec.name);
    case GameFamily::kRandomGeneral:
    case GameFamily::kRandomZeroSum:
      break;
  }
  if (spec.rows <= 0 || spec.cols <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "game sizes must be positive");
  }
  const Matrix r = UniformMatrix(spec.rows, spec.cols, spec.seed, 0);
  if (spec.family == GameFamily::kRandomZeroSum) return BimatrixGame::Normalize(r, -r);
  return BimatrixGame::FromNormalized(r, UniformMatrix(spec.rows, spec.cols, spec.seed, 1));
}

BimatrixGame Fixture(const std::string& name) {
  if (name == "wsne-diff") {
    return BimatrixGame::FromNormalized(Rows({{1.0 / 3.0, 0.0}, {1.0, 1.0}}),
                                        Rows({{1.0 / 3.0, 1.0}, {0.0, 1.0}}));
  }
  if (name == "matching-pennies") {
    const Matrix raw = Rows({{1.0, -1.0}, {-1.0, 1.0}});
    return BimatrixGame::Normalize(raw, -raw);
  }
  if (name == "battle-of-sexes") {
    return BimatrixGame::FromNormalized(Rows({{1.0, 0.0}, {0.0, 0.5}}),
                                        Rows({{0.5, 0.0}, {0.0, 1.0}}));
  }
  if (name == "rps") {
    const Matrix raw = Rows({{0.0, -1.0, 1.0}, {1.0, 0.0, -1.0}, {-1.0, 1.0, 0.0}});
    return BimatrixGame::Normalize(raw, -raw);
  }
  throw Error(ErrorCode::kUnknownFixture, "unknown fixture '" + name + "'");
}

std::vector<std::string> FixtureNames() {
  return {"wsne-diff", "matching-pennies", "battle-of-sexes", "rps"};
}

const char* GameFamilyName(GameFamily family) {
  switch (family) {
    case GameFamily::kRandomZeroSum: return "random_zero_sum";
    case GameFamily::kRandomGeneral: return "random_general";
    case GameFamily::kFixture: return "fixture";
    case GameFamily::kFile: return "file";
  }
  return "unknown";
}

GameFamily ParseGameFamily(const std::string& name) {
  for (GameFamily f : {GameFamily::kRandomZeroSum, GameFamily::kRandomGeneral,
                       GameFamily::kFixture, GameFamily::kFile}) {
    if (name == GameFamilyName(f)) return f;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown game family '" + name + "'");
}

}  // namespace bimatrix::io
