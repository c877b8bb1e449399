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

#ifndef BIMATRIX_IO_GAME_IO_H_
#define BIMATRIX_IO_GAME_IO_H_

#include <string>

#include "bimatrix/game.h"

namespace bimatrix::io {

// Text format:
//   m n
//   m lines of n numbers (R)
//   <blank line>
//   m lines of n numbers (C)
// '#' starts a comment. Blank lines are ignored when reading.
//
// A game whose entries all lie in [0,1] is kept as written; anything else is
// normalized per player. Written files hold the normalized matrices with 17
// significant digits, so ReadGame(WriteGame(g)) reproduces g exactly.
BimatrixGame ParseGame(const std::string& text);
std::string FormatGame(const BimatrixGame& game);

BimatrixGame ReadGame(const std::string& path);
void WriteGame(const BimatrixGame& game, const std::string& path);

// Profile files: line 1 holds x, line 2 holds y.
MixedProfile ParseProfile(const std::string& text);
MixedProfile ReadProfile(const std::string& path);
std::string FormatProfile(const MixedProfile& profile);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace bimatrix::io

#endif  // BIMATRIX_IO_GAME_IO_H_
