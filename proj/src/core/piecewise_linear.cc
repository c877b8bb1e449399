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

#include "bimatrix/piecewise_linear.h"

#include <algorithm>
#include <limits>

#include "bimatrix/errors.h"

namespace bimatrix {
namespace {

double Crossing(const Line& a, const Line& b) {
  return (a.intercept - b.intercept) / (b.slope - a.slope);
}

}  // namespace

EnvelopeMinimum MinimizeMaxOfLines(std::span<const Line> lines, double lo,
                                   double hi) {
  if (lines.empty() || !(lo <= hi)) {
    throw Error(ErrorCode::kInvalidArgument,
                "need at least one line and a non-empty interval");
  }
  std::vector<Line> sorted(lines.begin(), lines.end());
  std::sort(sorted.begin(), sorted.end(), [](const Line& a, const Line& b) {
    return a.slope < b.slope || (a.slope == b.slope && a.intercept > b.intercept);
  });

  // Upper envelope, slopes increasing from left to right.
  std::vector<Line> hull;
  hull.reserve(sorted.size());
  for (const Line& line : sorted) {
    if (!hull.empty() && hull.back().slope == line.slope) continue;
    while (hull.size() >= 2 &&
           Crossing(hull[hull.size() - 2], line) <=
               Crossing(hull[hull.size() - 2], hull.back())) {
      hull.pop_back();
    }
    hull.push_back(line);
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  EnvelopeMinimum best{lo, kInf};
  double left = -kInf;
  for (size_t k = 0; k < hull.size(); ++k) {
    const double right = k + 1 < hull.size() ? Crossing(hull[k], hull[k + 1]) : kInf;
    const double a = std::max(left, lo);
    const double b = std::min(right, hi);
    left = right;
    if (a > b) continue;
    const double t = hull[k].slope >= 0.0 ? a : b;
    const double value = hull[k].At(t);
    if (value < best.value) best = {t, value};
  }

  double exact = -kInf;
  for (const Line& line : lines) exact = std::max(exact, line.At(best.t));
  best.value = exact;
  return best;
}

EnvelopeMinimum MaximizeMinOfLines(std::span<const Line> lines, double lo,
                                   double hi) {
  std::vector<Line> negated;
  negated.reserve(lines.size());
  for (const Line& line : lines) negated.push_back({-line.intercept, -line.slope});
  EnvelopeMinimum result = MinimizeMaxOfLines(negated, lo, hi);
  result.value = -result.value;
  return result;
}

}  // namespace bimatrix
