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

#ifndef BIMATRIX_PIECEWISE_LINEAR_H_
#define BIMATRIX_PIECEWISE_LINEAR_H_

#include <span>
#include <vector>

namespace bimatrix {

struct Line {
  double intercept = 0.0;
  double slope = 0.0;

  double At(double t) const { return intercept + slope * t; }
};

struct EnvelopeMinimum {
  double t = 0.0;
  double value = 0.0;
};

// Exact minimizer of t -> max_k lines[k](t) over [lo, hi]. The function is
// convex, so the minimum sits at an endpoint or at a breakpoint of the upper
// envelope; ties resolve to the smallest t.
EnvelopeMinimum MinimizeMaxOfLines(std::span<const Line> lines, double lo = 0.0,
                                   double hi = 1.0);

// Same problem for max-of-min: t -> min_k lines[k](t), which is concave.
EnvelopeMinimum MaximizeMinOfLines(std::span<const Line> lines, double lo = 0.0,
                                   double hi = 1.0);

}  // namespace bimatrix

#endif  // BIMATRIX_PIECEWISE_LINEAR_H_
