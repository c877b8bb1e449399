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

// nashbench: benchmark harness and one-shot solver.
//
//   nashbench bench plan --config c.txt
//   nashbench bench run --config c.txt --out results/ [--jobs N] [--timeout-floor S]
//   nashbench solve --game g.txt --alg ts07 [--delta 0.001] [--seed 7]
//   nashbench metrics --game g.txt --profile p.txt
//   nashbench generate --family random_general --size 10 --seed 3 [--out g.txt]
//
// Exit codes: 0 ok, 1 error, 2 config error, 3 some task did not finish ok.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bimatrix/bench/config.h"
#include "bimatrix/bench/plan.h"
#include "bimatrix/bench/registry.h"
#include "bimatrix/bench/runner.h"
#include "bimatrix/errors.h"
#include "bimatrix/io/game_io.h"
#include "bimatrix/io/generators.h"
#include "bimatrix/metrics.h"

namespace {

using namespace bimatrix;

constexpr int kExitError = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPartial = 3;

void PrintMetrics(const BimatrixGame& game, const MixedProfile& profile) {
  const ApproxReport report = EpsilonOf(game, profile);
  std::printf("epsilon %.10g\nws_epsilon %.10g\nregret_row %.10g\nregret_col %.10g\n",
              report.epsilon, report.ws_epsilon, report.regret_row, report.regret_col);
}

int PlanCommand(const std::string& config_path) {
  const bench::BenchPlan plan = bench::MakePlan(bench::LoadConfig(config_path));
  for (const std::string& w : plan.warnings) std::cerr << "warning: " << w << '\n';
  for (const bench::Task& t : plan.tasks) {
    std::printf("%d %s %016llx\n", t.index, bench::TaskKey(t).c_str(),
                static_cast<unsigned long long>(t.task_seed));
  }
  std::printf("%zu tasks\n", plan.tasks.size());
  return 0;
}

int RunCommand(const std::string& config_path, const std::string& out, int jobs,
               double timeout_floor) {
  const bench::BenchPlan plan = bench::MakePlan(bench::LoadConfig(config_path));
  for (const std::string& w : plan.warnings) std::cerr << "warning: " << w << '\n';
  bench::RunOptions options;
  options.out_dir = out;
  if (jobs > 0) options.jobs = jobs;
  if (timeout_floor > 0) options.timeout_floor = timeout_floor;
  size_t done = 0;
  const size_t total = plan.tasks.size();
  options.on_record = [&](const bench::RunRecord& r) {
    ++done;
    std::cerr << '[' << done << '/' << total << "] " << r.scenario << ' ' << r.size << ' '
              << r.seed << ' ' << r.algorithm << ' ' << bench::RecordStatusName(r.status)
              << '\n';
  };
  const bench::RunSummary summary = bench::RunPlan(plan, options);
  std::printf("%zu records, %d not ok, digest %016llx\n", summary.records.size(),
              summary.non_ok, static_cast<unsigned long long>(summary.digest));
  return summary.non_ok > 0 ? kExitPartial : 0;
}

int SolveCommand(const std::string& game_path, const std::string& alg,
                 const std::optional<double>& delta, uint64_t seed) {
  if (!bench::IsKnownAlgorithm(alg)) {
    throw Error(ErrorCode::kConfigError, "alg: unknown algorithm '" + alg + "'");
  }
  const BimatrixGame game = io::ReadGame(game_path);
  bench::BenchConfig config;
  if (delta) {
    config.delta = *delta;
    config.dfm22_12_delta = *delta;
  }
  const bench::Outcome outcome =
      bench::RunAlgorithm(alg, game, bench::TaskContext{&config, seed, Deadline()});
  std::printf("status %s\n", bench::RecordStatusName(outcome.status));
  if (!outcome.note.empty()) std::printf("note %s\n", outcome.note.c_str());
  if (!outcome.final) return kExitPartial;
  std::printf("%s", io::FormatProfile(*outcome.final).c_str());
  PrintMetrics(game, *outcome.final);
  return outcome.status == bench::RecordStatus::kOk ? 0 : kExitPartial;
}

int GenerateCommand(const std::string& family, int size, uint64_t seed,
                    const std::string& fixture, const std::string& out) {
  BimatrixGame game = fixture.empty()
                          ? io::Generate({io::ParseGameFamily(family), size, size, seed, ""})
                          : io::Fixture(fixture);
  if (out.empty()) {
    std::printf("%s", io::FormatGame(game).c_str());
  } else {
    io::WriteGame(game, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bimatrix equilibrium solvers and benchmark harness"};
  app.require_subcommand(1);

  auto* bench_cmd = app.add_subcommand("bench", "Expand or run a benchmark config");
  bench_cmd->require_subcommand(1);
  std::string config_path, out_dir;
  int jobs = 0;
  double timeout_floor = 0.0;
  auto* plan_cmd = bench_cmd->add_subcommand("plan", "Print the expanded task list");
  plan_cmd->add_option("--config", config_path, "Config file")->required();
  plan_cmd->add_option("--out", out_dir, "Output directory (unused)");
  auto* run_cmd = bench_cmd->add_subcommand("run", "Run every task");
  run_cmd->add_option("--config", config_path, "Config file")->required();
  run_cmd->add_option("--out", out_dir, "Output directory")->required();
  run_cmd->add_option("--jobs", jobs, "Worker threads");
  run_cmd->add_option("--timeout-floor", timeout_floor, "Timeout floor in seconds");

  auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm on a game file");
  std::string game_path, alg, profile_path;
  std::optional<double> delta;
  uint64_t seed = 0;
  solve_cmd->add_option("--game", game_path, "Game file")->required();
  solve_cmd->add_option("--alg", alg, "Algorithm id")->required();
  solve_cmd->add_option("--delta", delta, "Stationarity or target tolerance");
  solve_cmd->add_option("--seed", seed, "Seed");

  auto* metrics_cmd = app.add_subcommand("metrics", "Evaluate a profile");
  metrics_cmd->add_option("--game", game_path, "Game file")->required();
  metrics_cmd->add_option("--profile", profile_path, "Profile file")->required();

  auto* gen_cmd = app.add_subcommand("generate", "Write a generated game");
  std::string family = "random_general", fixture;
  int size = 10;
  gen_cmd->add_option("--family", family, "random_general or random_zero_sum");
  gen_cmd->add_option("--size", size, "Rows and columns");
  gen_cmd->add_option("--seed", seed, "Seed");
  gen_cmd->add_option("--fixture", fixture, "Fixture name instead of a random game");
  gen_cmd->add_option("--out", out_dir, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (plan_cmd->parsed()) return PlanCommand(config_path);
    if (run_cmd->parsed()) return RunCommand(config_path, out_dir, jobs, timeout_floor);
    if (solve_cmd->parsed()) return SolveCommand(game_path, alg, delta, seed);
    if (metrics_cmd->parsed()) {
      const BimatrixGame game = io::ReadGame(game_path);
      PrintMetrics(game, io::ReadProfile(profile_path));
      return 0;
    }
    if (gen_cmd->parsed()) return GenerateCommand(family, size, seed, fixture, out_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kConfigError ? kExitConfig : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
