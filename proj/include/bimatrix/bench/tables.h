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

#ifndef BIMATRIX_BENCH_TABLES_H_
#define BIMATRIX_BENCH_TABLES_H_

#include <optional>
#include <string>
#include <vector>

#include "bimatrix/bench/runner.h"

namespace bimatrix::bench {

// Means over the ok records of one (scenario, size, algorithm) cell.
struct CellSummary {
  std::string scenario;
  int size = 0;
  std::string algorithm;
  int ok = 0;
  int timeouts = 0;
  int precision_errors = 0;
  std::optional<double> epsilon;
  std::optional<double> ws_epsilon;
  std::optional<double> pre_mix_epsilon;
  std::optional<double> pre_mix_ws_epsilon;
  std::optional<double> time_ms;
};

// Cells in first-appearance order of the records.
std::vector<CellSummary> Summarize(const std::vector<RunRecord>& records);

// "0.0461 (0.0512)", "Timeout" or "Precision Error".
std::string RenderCell(const CellSummary& cell, bool well_supported);

// One epsilon and one ws_epsilon table per scenario, algorithms as rows and
// sizes as columns.
std::string RenderTables(const std::vector<RunRecord>& records);

}  // namespace bimatrix::bench

#endif  // BIMATRIX_BENCH_TABLES_H_
