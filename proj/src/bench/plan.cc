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

#include "bimatrix/bench/plan.h"

#include <set>

#include "bimatrix/errors.h"
#include "bimatrix/rng.h"

namespace bimatrix::bench {
namespace {

struct Scenario {
  std::string name;
  io::GameFamily family;
  std::string argument;
};

Scenario ParseScenario(const std::string& s) {
  if (s == "zero_sum") return {s, io::GameFamily::kRandomZeroSum, ""};
  if (s == "general") return {s, io::GameFamily::kRandomGeneral, ""};
  if (s.rfind("fixture:", 0) == 0) return {s, io::GameFamily::kFixture, s.substr(8)};
  if (s.rfind("file:", 0) == 0) return {s, io::GameFamily::kFile, s.substr(5)};
  throw Error(ErrorCode::kConfigError, "scenarios: unknown scenario '" + s + "'");
}

}  // namespace

std::string TaskKey(const Task& task) {
  return task.scenario + "/" + std::to_string(task.size) + "/" + std::to_string(task.seed) +
         "/" + task.algorithm;
}

BenchPlan MakePlan(const BenchConfig& config) {
  BenchPlan plan;
  plan.config = config;
  std::set<std::string> seen;
  auto add = [&](Task task) {
    const std::string key = TaskKey(task);
    if (!seen.insert(key).second) {
      plan.warnings.push_back("duplicate task " + key + " dropped");
      return;
    }
    task.index = static_cast<int>(plan.tasks.size());
    task.task_seed = Mix64(config.master_seed ^ Fnv1a64(key));
    plan.tasks.push_back(std::move(task));
  };

  for (const std::string& name : config.scenarios) {
    const Scenario scenario = ParseScenario(name);
    const bool random = scenario.family == io::GameFamily::kRandomZeroSum ||
                        scenario.family == io::GameFamily::kRandomGeneral;
    if (!random) {
      for (const std::string& alg : config.algorithms) {
        Task task;
        task.scenario = scenario.name;
        task.game.family = scenario.family;
        task.game.name = scenario.argument;
        task.algorithm = alg;
        add(std::move(task));
      }
      continue;
    }
    for (const int size : config.sizes) {
      const int seeds = SeedCount(config, size);
      for (int s = 0; s < seeds; ++s) {
        for (const std::string& alg : config.algorithms) {
          Task task;
          task.scenario = scenario.name;
          task.size = size;
          task.seed = config.seed_offset + static_cast<uint64_t>(s);
          task.game = {scenario.family, size, size, task.seed, ""};
          task.algorithm = alg;
          add(std::move(task));
        }
      }
    }
  }
  return plan;
}

}  // namespace bimatrix::bench
