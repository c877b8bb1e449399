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

#ifndef BIMATRIX_APPROX_TS_H_
#define BIMATRIX_APPROX_TS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "bimatrix/approx/search_mix.h"
#include "bimatrix/deadline.h"
#include "bimatrix/game.h"

namespace bimatrix::approx {

enum class InitMode { kRandom, kUniform, kCustom };

struct TsOptions {
  double delta = 1e-3;
  int round_cap = 20000;
  InitMode init = InitMode::kRandom;
  uint64_t seed = 0;
  // Used when init == kCustom.
  std::optional<MixedProfile> initial_profile;
  double active_tol = 1e-8;
  // Below this f the descent stops: f is already converging to zero.
  double f_exit = 1e-9;
  Deadline deadline;
};

enum class TsTermination { kStationary, kSmallObjective, kNoProgress, kRoundCap, kTimeout };

// State of the descent for f(x, y) = max(f_R, f_C) with
// f_R = max(Ry) - x'Ry and f_C = max(C'x) - x'Cy.
struct TsState {
  MixedProfile profile;
  double f_row = 0.0;
  double f_col = 0.0;
  double f = 0.0;
  // Minimum Dini derivative found by the last direction LP.
  double dini_value = 0.0;
  // Dual byproduct of the direction LP: multipliers (rho w, (1 - rho) z).
  double rho = 0.0;
  Vector w;
  Vector z;
  int rounds = 0;
  int lp_calls = 0;
  double delta = 1e-3;
  // f after each completed round.
  std::vector<double> f_history;
  TsTermination termination = TsTermination::kStationary;
};

// Runs the descent to a delta-stationary point.
TsState TsDescent(const BimatrixGame& game, const TsOptions& options = {});

// Mixing phases on a finished descent.
SearchMixResult MixTs07(const BimatrixGame& game, const TsState& state);
SearchMixResult MixDfm22(const BimatrixGame& game, const TsState& state);

// Descent followed by the respective mixing phase.
SearchMixResult Ts07(const BimatrixGame& game, const TsOptions& options = {},
                     TsState* state_out = nullptr);
SearchMixResult Dfm22_13(const BimatrixGame& game, const TsOptions& options = {},
                         TsState* state_out = nullptr);

// 4b(1-b)(1+b^2) = 1 has smallest real root 0.339332; checks use 0.3393.
inline constexpr double kTsBound = 0.3393;

}  // namespace bimatrix::approx

#endif  // BIMATRIX_APPROX_TS_H_
