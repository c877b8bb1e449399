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

#ifndef BIMATRIX_APPROX_SEARCH_MIX_H_
#define BIMATRIX_APPROX_SEARCH_MIX_H_

#include <string>
#include <vector>

#include "bimatrix/game.h"

namespace bimatrix::approx {

enum class RunStatus { kOk, kTimeout, kPrecisionError, kRoundCapExceeded };

const char* RunStatusName(RunStatus status);

struct Candidate {
  MixedProfile profile;
  double epsilon = 0.0;
  std::string label;
};

// Output of a search-then-mix algorithm. pre_mix is the profile the search
// phase produced; final is what the algorithm returns.
struct SearchMixResult {
  std::string algorithm;
  MixedProfile final;
  MixedProfile pre_mix;
  std::vector<Candidate> candidates;
  int lp_calls = 0;
  int iterations = 0;
  RunStatus status = RunStatus::kOk;
};

// Appends a candidate with its epsilon.
void AddCandidate(const BimatrixGame& game, const MixedProfile& profile,
                  const std::string& label, SearchMixResult* result);

// Sets result->final to the first candidate of minimal epsilon.
void SelectArgmin(SearchMixResult* result);

// Maps a result computed on game.Transposed() back to the original roles.
void SwapRoles(SearchMixResult* result);

}  // namespace bimatrix::approx

#endif  // BIMATRIX_APPROX_SEARCH_MIX_H_
