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

#ifndef BIMATRIX_APPROX_MIXING_H_
#define BIMATRIX_APPROX_MIXING_H_

#include "bimatrix/game.h"

namespace bimatrix::approx {

struct SegmentOptimum {
  double t = 0.0;
  double epsilon = 0.0;
  MixedProfile profile;
};

// Minimizes epsilon of ((1-t) from + t to, y) over t in [0,1]. Both regrets
// are maxima of lines in t, so the minimum is exact.
SegmentOptimum MinimizeOverRowSegment(const BimatrixGame& game, const Vector& from,
                                      const Vector& to, const Vector& y);

// Same for (x, (1-t) from + t to).
SegmentOptimum MinimizeOverColSegment(const BimatrixGame& game, const Vector& x,
                                      const Vector& from, const Vector& to);

}  // namespace bimatrix::approx

#endif  // BIMATRIX_APPROX_MIXING_H_
