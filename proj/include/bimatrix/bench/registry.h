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

#ifndef BIMATRIX_BENCH_REGISTRY_H_
#define BIMATRIX_BENCH_REGISTRY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bimatrix/deadline.h"
#include "bimatrix/game.h"

namespace bimatrix::bench {

struct BenchConfig;

enum class RecordStatus { kOk, kTimeout, kPrecisionError };

const char* RecordStatusName(RecordStatus status);

struct TaskContext {
  const BenchConfig* config = nullptr;
  uint64_t seed = 0;
  Deadline deadline;
};

struct Outcome {
  std::optional<MixedProfile> final;
  // Search-phase profile for search-and-mix algorithms, last iterate for
  // dynamics, absent otherwise.
  std::optional<MixedProfile> pre_mix;
  RecordStatus status = RecordStatus::kOk;
  std::string note;
};

// kps06 dmp06 cdffjs15_038 bbm07 ts07 dfm22_13 ks07 fgss12 cdffjs15_06528
// dfm22_12 fp hedge mwu_exp mwu_linear regret_matching lemke_howson
// support_enum
const std::vector<std::string>& AlgorithmIds();
bool IsKnownAlgorithm(const std::string& id);

// Runs one algorithm. Library errors become a precision_error outcome with
// the message in `note`; nothing is thrown for a known id.
Outcome RunAlgorithm(const std::string& id, const BimatrixGame& game, const TaskContext& ctx);

}  // namespace bimatrix::bench

#endif  // BIMATRIX_BENCH_REGISTRY_H_
