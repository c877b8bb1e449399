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

#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "bimatrix/bench/config.h"
#include "bimatrix/bench/plan.h"
#include "bimatrix/bench/registry.h"
#include "bimatrix/bench/runner.h"
#include "bimatrix/bench/tables.h"
#include "bimatrix/errors.h"
#include "bimatrix/io/game_io.h"
#include "bimatrix/io/generators.h"

namespace bimatrix::bench {
namespace {

ErrorCode CodeOf(const std::string& text) {
  try {
    ParseConfig(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

TEST(BenchConfigTest, DefaultSeedCounts) {
  EXPECT_EQ(DefaultSeedCount(10), 40);
  EXPECT_EQ(DefaultSeedCount(100), 20);
  EXPECT_EQ(DefaultSeedCount(1000), 10);
}

TEST(BenchConfigTest, RejectsEmptyAndUnknownAlgorithms) {
  EXPECT_EQ(CodeOf("scenarios = zero_sum\nsizes = 10\nalgorithms =\n"), ErrorCode::kConfigError);
  EXPECT_EQ(CodeOf("scenarios = zero_sum\nsizes = 10\nalgorithms = nope\n"),
            ErrorCode::kConfigError);
  EXPECT_EQ(CodeOf("scenarios = zero_sum\nsizes = 10\nalgorithms = ts07\nts.init = x\n"),
            ErrorCode::kConfigError);
}

TEST(BenchConfigTest, ErrorNamesLineAndKey) {
  try {
    ParseConfig("scenarios = zero_sum\nsizes = 10\nalgorithms = kps06, bogus\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("algorithms"), std::string::npos) << e.what();
  }
}

TEST(BenchConfigTest, DigestIgnoresJobs) {
  const std::string base = "scenarios = general\nsizes = 10\nalgorithms = kps06\n";
  EXPECT_EQ(ConfigDigest(ParseConfig(base)), ConfigDigest(ParseConfig(base + "jobs = 4\n")));
  EXPECT_NE(ConfigDigest(ParseConfig(base)),
            ConfigDigest(ParseConfig(base + "delta = 0.01\n")));
}

TEST(BenchPlanTest, FortyTasksPerAlgorithmAtTen) {
  const BenchPlan plan =
      MakePlan(ParseConfig("scenarios = zero_sum\nsizes = 10\nalgorithms = kps06, bbm07\n"));
  ASSERT_EQ(plan.tasks.size(), 80u);
  EXPECT_EQ(plan.tasks[0].algorithm, "kps06");
  EXPECT_EQ(plan.tasks[1].algorithm, "bbm07");
  EXPECT_EQ(plan.tasks[79].seed, 39u);
}

TEST(BenchPlanTest, DuplicatesDroppedWithWarning) {
  const BenchPlan plan = MakePlan(ParseConfig(
      "scenarios = general\nsizes = 10\nseeds.10 = 2\nalgorithms = kps06, kps06\n"));
  EXPECT_EQ(plan.tasks.size(), 2u);
  EXPECT_EQ(plan.warnings.size(), 2u);
}

TEST(BenchPlanTest, TaskSeedDependsOnKeyOnly) {
  const BenchPlan a = MakePlan(ParseConfig(
      "scenarios = general\nsizes = 10\nseeds.10 = 2\nalgorithms = kps06, ts07\n"));
  const BenchPlan b = MakePlan(
      ParseConfig("scenarios = general\nsizes = 10\nseeds.10 = 2\nalgorithms = ts07\n"));
  EXPECT_EQ(a.tasks[1].task_seed, b.tasks[0].task_seed);
  EXPECT_NE(a.tasks[0].task_seed, a.tasks[1].task_seed);
}

TEST(BenchPlanTest, FixtureScenarioRunsOnce) {
  const BenchPlan plan = MakePlan(ParseConfig(
      "scenarios = fixture:wsne-diff\nalgorithms = kps06, ks07\n"));
  ASSERT_EQ(plan.tasks.size(), 2u);
  EXPECT_EQ(plan.tasks[0].game.family, io::GameFamily::kFixture);
}

TEST(BenchRegistryTest, EveryIdRunsOnASmallGame) {
  BenchConfig config;
  config.dynamics_iterations = 200;
  const BimatrixGame game = io::Generate({io::GameFamily::kRandomGeneral, 4, 4, 3, ""});
  for (const std::string& id : AlgorithmIds()) {
    const Outcome o = RunAlgorithm(id, game, {&config, 5, Deadline()});
    EXPECT_EQ(o.status, RecordStatus::kOk) << id << ": " << o.note;
    EXPECT_TRUE(o.final.has_value()) << id;
  }
}

TEST(BenchRegistryTest, LibraryErrorBecomesPrecisionError) {
  BenchConfig config;
  config.dfm22_12_delta = 0.7;
  const Outcome o = RunAlgorithm("dfm22_12", io::Fixture("matching-pennies"),
                                 {&config, 0, Deadline()});
  EXPECT_EQ(o.status, RecordStatus::kPrecisionError);
  EXPECT_FALSE(o.final.has_value());
}

TEST(BenchRegistryTest, DynamicsPreMixIsLastIterate) {
  BenchConfig config;
  config.dynamics_iterations = 50;
  const Outcome o = RunAlgorithm("fp", io::Fixture("rps"), {&config, 0, Deadline()});
  ASSERT_TRUE(o.pre_mix.has_value());
  EXPECT_EQ(o.pre_mix->x.maxCoeff(), 1.0);
}

class BenchRunTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("bench_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

constexpr const char* kSmallConfig =
    "scenarios = zero_sum, general\n"
    "sizes = 6\n"
    "seeds.6 = 3\n"
    "algorithms = kps06, dmp06, ts07, ks07, hedge\n"
    "dynamics.iterations = 500\n"
    "timeout_floor = 30\n";

TEST_F(BenchRunTest, SerialAndParallelAgree) {
  const BenchPlan plan = MakePlan(ParseConfig(kSmallConfig));
  RunOptions serial;
  serial.out_dir = (dir_ / "a").string();
  RunOptions parallel;
  parallel.out_dir = (dir_ / "b").string();
  parallel.jobs = 3;
  const RunSummary a = RunPlan(plan, serial);
  const RunSummary b = RunPlan(plan, parallel);
  EXPECT_EQ(a.digest, b.digest);
  EXPECT_EQ(a.non_ok, 0);
  ASSERT_EQ(a.records.size(), plan.tasks.size());
  for (size_t k = 0; k < a.records.size(); ++k) {
    EXPECT_EQ(CsvLine(a.records[k], false), CsvLine(b.records[k], false));
  }
}

TEST_F(BenchRunTest, TableMeansMatchCsv) {
  const BenchPlan plan = MakePlan(ParseConfig(kSmallConfig));
  RunOptions options;
  options.out_dir = dir_.string();
  const RunSummary summary = RunPlan(plan, options);
  const std::vector<RunRecord> reread =
      ReadCsv(io::ReadFile((dir_ / "runs.csv").string()));
  ASSERT_EQ(reread.size(), summary.records.size());
  const std::vector<CellSummary> from_file = Summarize(reread);
  const std::vector<CellSummary> from_memory = Summarize(summary.records);
  ASSERT_EQ(from_file.size(), from_memory.size());
  for (size_t k = 0; k < from_file.size(); ++k) {
    EXPECT_NEAR(*from_file[k].epsilon, *from_memory[k].epsilon, 1e-12);
    EXPECT_NEAR(*from_file[k].ws_epsilon, *from_memory[k].ws_epsilon, 1e-12);
  }
  // Recompute one cell by hand.
  double sum = 0.0;
  int count = 0;
  for (const RunRecord& r : reread) {
    if (r.scenario == "general" && r.algorithm == "ts07") {
      sum += *r.epsilon;
      ++count;
    }
  }
  for (const CellSummary& c : from_file) {
    if (c.scenario == "general" && c.algorithm == "ts07") {
      EXPECT_NEAR(*c.epsilon, sum / count, 1e-12);
    }
  }
  EXPECT_TRUE(std::filesystem::exists(dir_ / "tables.md"));
}

TEST(BenchTablesTest, StatusCells) {
  RunRecord timeout;
  timeout.scenario = "zero_sum";
  timeout.size = 100;
  timeout.algorithm = "fgss12";
  timeout.status = RecordStatus::kTimeout;
  RunRecord failed = timeout;
  failed.algorithm = "ts07";
  failed.status = RecordStatus::kPrecisionError;
  RunRecord ok = timeout;
  ok.algorithm = "bbm07";
  ok.status = RecordStatus::kOk;
  ok.epsilon = 0.25;
  ok.ws_epsilon = 0.5;
  ok.pre_mix_epsilon = 0.125;
  ok.pre_mix_ws_epsilon = 0.5;
  const std::vector<CellSummary> cells = Summarize({timeout, failed, ok});
  ASSERT_EQ(cells.size(), 3u);
  EXPECT_EQ(RenderCell(cells[0], false), "Timeout");
  EXPECT_EQ(RenderCell(cells[1], false), "Precision Error");
  EXPECT_EQ(RenderCell(cells[2], false), "0.2500 (0.1250)");
  const std::string md = RenderTables({timeout, failed, ok});
  EXPECT_NE(md.find("| fgss12 | Timeout |"), std::string::npos) << md;
}

TEST(BenchTablesTest, CsvRoundTrip) {
  RunRecord r;
  r.scenario = "general";
  r.size = 10;
  r.seed = 4;
  r.algorithm = "fp";
  r.epsilon = 0.1234567890123;
  r.ws_epsilon = 0.5;
  r.time_ms = 12.5;
  r.config_digest = 0xabcdef0123456789ULL;
  r.note = "a,b";
  const std::vector<RunRecord> back = ReadCsv(CsvHeader() + "\n" + CsvLine(r) + "\n");
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(*back[0].epsilon, *r.epsilon);
  EXPECT_FALSE(back[0].pre_mix_epsilon.has_value());
  EXPECT_EQ(back[0].config_digest, r.config_digest);
  EXPECT_EQ(back[0].note, "a;b");
}

}  // namespace
}  // namespace bimatrix::bench
