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

#ifndef BIMATRIX_WSNE_WSNE_H_
#define BIMATRIX_WSNE_WSNE_H_

#include <cstdint>
#include <string>

#include "bimatrix/deadline.h"
#include "bimatrix/game.h"

namespace bimatrix::wsne {

enum class Tactic {
  kPure,
  kZeroSum,
  kShifted,
  kSubgame2x2,
  kKUniform,
  kLowPayoff,
  kLowHigh,
  kHighPayoff,
};

enum class WsneStatus { kOk, kTimeout, kPrecisionError };

const char* TacticName(Tactic tactic);
const char* WsneStatusName(WsneStatus status);

struct WsneResult {
  std::string algorithm;
  MixedProfile profile;
  double ws_epsilon = 1.0;
  double epsilon = 1.0;
  Tactic tactic = Tactic::kPure;
  WsneStatus status = WsneStatus::kOk;
  int lp_calls = 0;
};

// Pure profile of smallest ws_epsilon, first in row-major order.
MixedProfile BestPureWsProfile(const BimatrixGame& game);

struct Ks07Options {
  // Evaluate the zero-sum candidate before the pure scan; ties go to the
  // candidate evaluated first.
  bool pure_first = true;
};

// Guarantee 2/3. Best pure profile against the NE of (D, -D), D = (R - C)/2.
WsneResult Ks07(const BimatrixGame& game, const Ks07Options& options = {});

struct Fgss12Options {
  // The 2x2 support scan is skipped with a timeout status above this size.
  int size_cap_2x2 = 30;
  Deadline deadline;
};

// Guarantee 0.6607. Pure scan (early exit on a pure NE), then the NE of
// (D, -D) re-weighted on its support, then every 2x2 support.
WsneResult Fgss12(const BimatrixGame& game, const Fgss12Options& options = {});

// Guarantee 0.6528.
WsneResult Cdffjs15_06528(const BimatrixGame& game);

struct Dfm22Options {
  double delta = 0.1;
  int64_t search_budget = 1000000;
  Deadline deadline;
};

// Guarantee 1/2 + delta.
WsneResult Dfm22_12(const BimatrixGame& game, const Dfm22Options& options = {});

inline constexpr double kKsBound = 2.0 / 3.0;
inline constexpr double kFgssBound = 2.0 / 3.0 - 0.005913759;
inline constexpr double kCdffjsWsBound = 0.6528;
inline constexpr double kCdffjsZ = 0.013906376;

}  // namespace bimatrix::wsne

#endif  // BIMATRIX_WSNE_WSNE_H_
