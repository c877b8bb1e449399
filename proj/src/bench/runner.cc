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

#include "bimatrix/bench/runner.h"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "bimatrix/bench/tables.h"
#include "bimatrix/errors.h"
#include "bimatrix/io/game_io.h"
#include "bimatrix/metrics.h"
#include "bimatrix/rng.h"

namespace bimatrix::bench {
namespace {

using Clock = std::chrono::steady_clock;

std::string FormatMetric(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", *v);
  return buf;
}

std::optional<double> ParseMetric(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

// Notes are free text; keep the CSV single-line and comma-free.
std::string SanitizeNote(std::string note) {
  for (char& c : note) {
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
  }
  return note;
}

struct GameSlot {
  std::once_flag once;
  std::optional<BimatrixGame> game;
  std::string error;
  double timeout_s = 0.0;
};

std::string GameKey(const Task& t) {
  return t.scenario + "/" + std::to_string(t.size) + "/" + std::to_string(t.seed);
}

double Milliseconds(Clock::duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

void PrepareSlot(const Task& task, const BenchConfig& config, double floor, GameSlot* slot) {
  try {
    slot->game = LoadTaskGame(task);
  } catch (const Error& e) {
    slot->error = e.what();
    return;
  }
  slot->timeout_s = floor;
  if (config.timeout_reference_ts) {
    TaskContext ctx{&config, Mix64(config.master_seed ^ Fnv1a64(GameKey(task) + "/ts07")),
                    Deadline()};
    const auto start = Clock::now();
    RunAlgorithm("ts07", *slot->game, ctx);
    const double ts_s = std::chrono::duration<double>(Clock::now() - start).count();
    slot->timeout_s = std::max(floor, ts_s);
  }
}

RunRecord Execute(const Task& task, const BenchConfig& config, uint64_t digest,
                  GameSlot* slot) {
  RunRecord r;
  r.index = task.index;
  r.scenario = task.scenario;
  r.size = task.size;
  r.seed = task.seed;
  r.algorithm = task.algorithm;
  r.config_digest = digest;
  if (!slot->game) {
    r.status = RecordStatus::kPrecisionError;
    r.note = SanitizeNote(slot->error);
    return r;
  }
  const BimatrixGame& game = *slot->game;
  const auto budget = std::chrono::duration<double>(slot->timeout_s);
  Outcome outcome;
  const int runs = config.warmup ? 2 : 1;
  for (int k = 0; k < runs; ++k) {
    TaskContext ctx{&config, task.task_seed, Deadline::After(budget)};
    const auto start = Clock::now();
    outcome = RunAlgorithm(task.algorithm, game, ctx);
    r.time_ms = Milliseconds(Clock::now() - start);
    if (outcome.status == RecordStatus::kTimeout) break;
  }
  r.status = outcome.status;
  r.note = SanitizeNote(outcome.note);
  if (outcome.final) {
    r.epsilon = EpsilonOf(game, *outcome.final).epsilon;
    r.ws_epsilon = WsEpsilonOf(game, *outcome.final);
  } else if (r.status == RecordStatus::kOk) {
    r.status = RecordStatus::kPrecisionError;
    r.note = "no profile returned";
  }
  if (outcome.pre_mix) {
    r.pre_mix_epsilon = EpsilonOf(game, *outcome.pre_mix).epsilon;
    r.pre_mix_ws_epsilon = WsEpsilonOf(game, *outcome.pre_mix);
  }
  return r;
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace

BimatrixGame LoadTaskGame(const Task& task) {
  switch (task.game.family) {
    case io::GameFamily::kFixture:
      return io::Fixture(task.game.name);
    case io::GameFamily::kFile:
      return io::ReadGame(task.game.name);
    default:
      return io::Generate(task.game);
  }
}

std::string CsvHeader() {
  return "scenario,size,seed,algorithm,epsilon,ws_epsilon,pre_mix_epsilon,"
         "pre_mix_ws_epsilon,time_ms,status,config_digest,note";
}

std::string CsvLine(const RunRecord& r, bool include_time) {
  char digest[24];
  std::snprintf(digest, sizeof(digest), "%016llx",
                static_cast<unsigned long long>(r.config_digest));
  char time[32] = "";
  if (include_time) std::snprintf(time, sizeof(time), "%.3f", r.time_ms);
  std::ostringstream out;
  out << r.scenario << ',' << r.size << ',' << r.seed << ',' << r.algorithm << ','
      << FormatMetric(r.epsilon) << ',' << FormatMetric(r.ws_epsilon) << ','
      << FormatMetric(r.pre_mix_epsilon) << ',' << FormatMetric(r.pre_mix_ws_epsilon) << ','
      << time << ',' << RecordStatusName(r.status) << ',' << digest << ',' << SanitizeNote(r.note);
  return out.str();
}

std::vector<RunRecord> ReadCsv(const std::string& text) {
  std::vector<RunRecord> records;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.rfind("#", 0) == 0 || line == CsvHeader()) continue;
    const std::vector<std::string> f = SplitCsv(line);
    if (f.size() != 12) {
      throw ParseError(line_no, 1, "expected 12 fields, got " + std::to_string(f.size()));
    }
    RunRecord r;
    r.index = static_cast<int>(records.size());
    r.scenario = f[0];
    r.size = std::stoi(f[1]);
    r.seed = std::stoull(f[2]);
    r.algorithm = f[3];
    r.epsilon = ParseMetric(f[4]);
    r.ws_epsilon = ParseMetric(f[5]);
    r.pre_mix_epsilon = ParseMetric(f[6]);
    r.pre_mix_ws_epsilon = ParseMetric(f[7]);
    r.time_ms = f[8].empty() ? 0.0 : std::stod(f[8]);
    if (f[9] == "ok") {
      r.status = RecordStatus::kOk;
    } else if (f[9] == "timeout") {
      r.status = RecordStatus::kTimeout;
    } else if (f[9] == "precision_error") {
      r.status = RecordStatus::kPrecisionError;
    } else {
      throw ParseError(line_no, 1, "unknown status '" + f[9] + "'");
    }
    r.config_digest = std::stoull(f[10], nullptr, 16);
    r.note = f[11];
    records.push_back(std::move(r));
  }
  return records;
}

RunSummary RunPlan(const BenchPlan& plan, const RunOptions& options) {
  const BenchConfig& config = plan.config;
  const uint64_t digest = ConfigDigest(config);
  const int jobs = std::max(1, options.jobs.value_or(config.jobs));
  const double floor = options.timeout_floor.value_or(config.timeout_floor);

  std::map<std::string, GameSlot> slots;
  for (const Task& t : plan.tasks) slots[GameKey(t)];

  namespace fs = std::filesystem;
  std::ofstream append;
  fs::path csv_path;
  if (!options.out_dir.empty()) {
    fs::create_directories(options.out_dir);
    csv_path = fs::path(options.out_dir) / "runs.csv";
    append.open(csv_path, std::ios::trunc);
    if (!append) throw Error(ErrorCode::kFileError, "cannot write " + csv_path.string());
    append << "# runs " << kCsvVersion << '\n' << CsvHeader() << '\n' << std::flush;
  }

  std::vector<RunRecord> records(plan.tasks.size());
  std::mutex writer;
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const size_t k = next.fetch_add(1);
      if (k >= plan.tasks.size()) return;
      const Task& task = plan.tasks[k];
      GameSlot& slot = slots.at(GameKey(task));
      std::call_once(slot.once, [&] { PrepareSlot(task, config, floor, &slot); });
      RunRecord record = Execute(task, config, digest, &slot);
      std::lock_guard<std::mutex> lock(writer);
      if (append.is_open()) append << CsvLine(record) << '\n' << std::flush;
      if (options.on_record) options.on_record(record);
      records[k] = std::move(record);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  RunSummary summary;
  std::string digest_text;
  for (const RunRecord& r : records) {
    digest_text += CsvLine(r, false) + '\n';
    if (r.status != RecordStatus::kOk) ++summary.non_ok;
  }
  summary.digest = Fnv1a64(digest_text);

  if (append.is_open()) {
    append.close();
    // Completion order depends on scheduling; rewrite in plan order.
    const fs::path tmp = csv_path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << "# runs " << kCsvVersion << '\n' << CsvHeader() << '\n';
      for (const RunRecord& r : records) out << CsvLine(r) << '\n';
    }
    fs::rename(tmp, csv_path);
    std::ofstream tables(fs::path(options.out_dir) / "tables.md", std::ios::trunc);
    tables << RenderTables(records);
  }
  summary.records = std::move(records);
  return summary;
}

}  // namespace bimatrix::bench
