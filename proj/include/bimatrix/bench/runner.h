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

#ifndef BIMATRIX_BENCH_RUNNER_H_
#define BIMATRIX_BENCH_RUNNER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bimatrix/bench/plan.h"
#include "bimatrix/bench/registry.h"
#include "bimatrix/game.h"

namespace bimatrix::bench {

// Written as the first line of runs.csv, "# runs v1".
inline constexpr const char* kCsvVersion = "v1";

struct RunRecord {
  int index = 0;
  std::string scenario;
  int size = 0;
  uint64_t seed = 0;
  std::string algorithm;
  std::optional<double> epsilon;
  std::optional<double> ws_epsilon;
  std::optional<double> pre_mix_epsilon;
  std::optional<double> pre_mix_ws_epsilon;
  double time_ms = 0.0;
  RecordStatus status = RecordStatus::kOk;
  uint64_t config_digest = 0;
  std::string note;
};

struct RunOptions {
  // Directory for runs.csv and tables.md; empty writes nothing.
  std::string out_dir;
  // Overrides config.jobs and config.timeout_floor when set.
  std::optional<int> jobs;
  std::optional<double> timeout_floor;
  // Called once per finished task, from the writer.
  std::function<void(const RunRecord&)> on_record;
};

struct RunSummary {
  std::vector<RunRecord> records;
  // Digest of the CSV with time_ms blanked.
  uint64_t digest = 0;
  int non_ok = 0;
};

// Loads or generates the game of a task.
BimatrixGame LoadTaskGame(const Task& task);

// Runs every task. Task failures become record statuses.
RunSummary RunPlan(const BenchPlan& plan, const RunOptions& options = {});

std::string CsvHeader();
std::string CsvLine(const RunRecord& record, bool include_time = true);
// Parses a file written by RunPlan.
std::vector<RunRecord> ReadCsv(const std::string& text);

}  // namespace bimatrix::bench

#endif  // BIMATRIX_BENCH_RUNNER_H_
