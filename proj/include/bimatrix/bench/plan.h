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

#ifndef BIMATRIX_BENCH_PLAN_H_
#define BIMATRIX_BENCH_PLAN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "bimatrix/bench/config.h"
#include "bimatrix/io/generators.h"

namespace bimatrix::bench {

struct Task {
  int index = 0;
  std::string scenario;
  int size = 0;
  uint64_t seed = 0;
  io::GameSpec game;
  std::string algorithm;
  // Mix64(master_seed ^ Fnv1a64(key)), independent of execution order.
  uint64_t task_seed = 0;
};

struct BenchPlan {
  BenchConfig config;
  std::vector<Task> tasks;
  std::vector<std::string> warnings;
};

// Expands scenarios x sizes x seeds x algorithms in that order. Fixture and
// file scenarios ignore sizes and run once with seed 0. Duplicate tasks are
// dropped with a warning.
BenchPlan MakePlan(const BenchConfig& config);

// "scenario/size/seed/algorithm".
std::string TaskKey(const Task& task);

}  // namespace bimatrix::bench

#endif  // BIMATRIX_BENCH_PLAN_H_
