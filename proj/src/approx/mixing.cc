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

#include "bimatrix/approx/mixing.h"

#include <algorithm>
#include <vector>

#include "bimatrix/approx/search_mix.h"
#include "bimatrix/metrics.h"
#include "bimatrix/piecewise_linear.h"

namespace bimatrix::approx {

const char* RunStatusName(RunStatus status) {
  switch (status) {
    case RunStatus::kOk:
      return "ok";
    case RunStatus::kTimeout:
      return "timeout";
    case RunStatus::kPrecisionError:
      return "precision_error";
    case RunStatus::kRoundCapExceeded:
      return "round_cap";
  }
  return "unknown";
}

void AddCandidate(const BimatrixGame& game, const MixedProfile& profile,
                  const std::string& label, SearchMixResult* result) {
  result->candidates.push_back({profile, EpsilonOf(game, profile).epsilon, label});
}

void SelectArgmin(SearchMixResult* result) {
  const Candidate* best = nullptr;
  for (const Candidate& c : result->candidates) {
    if (best == nullptr || c.epsilon < best->epsilon) best = &c;
  }
  if (best != nullptr) result->final = best->profile;
}

void SwapRoles(SearchMixResult* result) {
  result->final = result->final.Swapped();
  result->pre_mix = result->pre_mix.Swapped();
  for (Candidate& c : result->candidates) c.profile = c.profile.Swapped();
}

namespace {

Vector Lerp(const Vector& from, const Vector& to, double t) {
  return CleanStrategy((1.0 - t) * from + t * to);
}

}  // namespace

SegmentOptimum MinimizeOverRowSegment(const BimatrixGame& game, const Vector& from,
                                      const Vector& to, const Vector& y) {
  const Vector ry = game.R() * y;
  const Vector cy = game.C() * y;
  const Matrix& C = game.C();
  const Vector c_from = C.transpose() * from;
  const Vector c_to = C.transpose() * to;
  const double ry_max = ry.maxCoeff();

  std::vector<Line> lines;
  lines.reserve(game.cols() + 1);
  // Row regret: max(Ry) - x(t)'Ry.
  const double r0 = ry_max - from.dot(ry);
  lines.push_back({r0, (ry_max - to.dot(ry)) - r0});
  // Column regret, one line per deviation j: (C'x(t))_j - x(t)'Cy.
  const double base0 = from.dot(cy);
  const double base1 = to.dot(cy);
  for (int j = 0; j < game.cols(); ++j) {
    const double a = c_from[j] - base0;
    lines.push_back({a, (c_to[j] - base1) - a});
  }
  const EnvelopeMinimum best = MinimizeMaxOfLines(lines);
  SegmentOptimum out;
  out.t = best.t;
  out.profile = {Lerp(from, to, best.t), y};
  out.epsilon = EpsilonOf(game, out.profile).epsilon;
  return out;
}

SegmentOptimum MinimizeOverColSegment(const BimatrixGame& game, const Vector& x,
                                      const Vector& from, const Vector& to) {
  const Vector cx = game.C().transpose() * x;
  const Vector rx = game.R().transpose() * x;
  const Vector r_from = game.R() * from;
  const Vector r_to = game.R() * to;
  const double cx_max = cx.maxCoeff();

  std::vector<Line> lines;
  lines.reserve(game.rows() + 1);
  const double c0 = cx_max - from.dot(cx);
  lines.push_back({c0, (cx_max - to.dot(cx)) - c0});
  const double base0 = from.dot(rx);
  const double base1 = to.dot(rx);
  for (int i = 0; i < game.rows(); ++i) {
    const double a = r_from[i] - base0;
    lines.push_back({a, (r_to[i] - base1) - a});
  }
  const EnvelopeMinimum best = MinimizeMaxOfLines(lines);
  SegmentOptimum out;
  out.t = best.t;
  out.profile = {x, Lerp(from, to, best.t)};
  out.epsilon = EpsilonOf(game, out.profile).epsilon;
  return out;
}

}  // namespace bimatrix::approx
