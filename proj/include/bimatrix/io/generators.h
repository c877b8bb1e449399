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

#ifndef BIMATRIX_IO_GENERATORS_H_
#define BIMATRIX_IO_GENERATORS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "bimatrix/game.h"

namespace bimatrix::io {

enum class GameFamily { kRandomZeroSum, kRandomGeneral, kFixture, kFile };

struct GameSpec {
  GameFamily family = GameFamily::kRandomGeneral;
  int rows = 0;
  int cols = 0;
  uint64_t seed = 0;
  // Fixture name or file path.
  std::string name;
};

// Random families draw R from stream 0 and C from stream 1 of
// CounterRng(seed, stream), entry (i, j) at counter i * n + j.
//   random_general:  R, C uniform on [0,1), used as they are.
//   random_zero_sum: raw C = -R, then both matrices are normalized.
BimatrixGame Generate(const GameSpec& spec);

// wsne-diff, matching-pennies, battle-of-sexes, rps.
BimatrixGame Fixture(const std::string& name);
std::vector<std::string> FixtureNames();

const char* GameFamilyName(GameFamily family);
// Accepts the names printed by GameFamilyName.
GameFamily ParseGameFamily(const std::string& name);

}  // namespace bimatrix::io

#endif  // BIMATRIX_IO_GENERATORS_H_
