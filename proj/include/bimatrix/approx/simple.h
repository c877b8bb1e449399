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

#ifndef BIMATRIX_APPROX_SIMPLE_H_
#define BIMATRIX_APPROX_SIMPLE_H_

#include "bimatrix/approx/search_mix.h"
#include "bimatrix/game.h"

namespace bimatrix::approx {

// Guarantee 3/4. Mixes the argmax cells of R and C equally.
SearchMixResult Kps06(const BimatrixGame& game);

// Guarantee 1/2. start_row is 1-based.
SearchMixResult Dmp06(const BimatrixGame& game, int start_row);

// Guarantee (3 - sqrt 5)/2. Uses the threshold rule, so final is not an
// argmin over candidates: above the threshold the mixture is returned even
// when the zero-sum profile is better.
SearchMixResult Cdffjs15_038(const BimatrixGame& game);

// Guarantee 1/2 - sqrt(6)/18 (~0.3639), reported as 0.3664 with slack.
SearchMixResult Bbm07(const BimatrixGame& game);

inline constexpr double kCdffjs038Bound = 0.3819660112501051;  // (3 - sqrt 5)/2
inline constexpr double kBbmNoMixThreshold = 0.36391723651204566;  // 1/2 - sqrt(6)/18

}  // namespace bimatrix::approx

#endif  // BIMATRIX_APPROX_SIMPLE_H_
