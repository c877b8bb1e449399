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

#include "bimatrix/bench/config.h"

#include <charconv>
#include <sstream>

#include "bimatrix/bench/registry.h"
#include "bimatrix/errors.h"
#include "bimatrix/io/game_io.h"
#include "bimatrix/rng.h"

namespace bimatrix::bench {
namespace {

std::string Trim(const std::string& s) {
  const size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void Fail(int line, const std::string& key, const std::string& what) {
  throw Error(ErrorCode::kConfigError,
              "line " + std::to_string(line) + ": " + key + ": " + what);
}

std::vector<std::string> SplitList(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T ParseInteger(const std::string& text, int line, const std::string& key) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    Fail(line, key, "expected an integer, got '" + text + "'");
  }
  return value;
}

double ParseReal(const std::string& text, int line, const std::string& key) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    Fail(line, key, "expected a number, got '" + text + "'");
  }
  return value;
}

bool ParseBool(const std::string& text, int line, const std::string& key) {
  if (text == "true") return true;
  if (text == "false") return false;
  Fail(line, key, "expected true or false");
}

std::string CanonicalScenario(const std::string& s, int line, const std::string& key) {
  if (s == "zero_sum" || s == "zero-sum" || s == "random_zero_sum") return "zero_sum";
  if (s == "general" || s == "random_general") return "general";
  if (s.rfind("fixture:", 0) == 0 || s.rfind("file:", 0) == 0) return s;
  Fail(line, key, "unknown scenario '" + s + "'");
}

void RequirePositive(double v, int line, const std::string& key) {
  if (!(v > 0.0)) Fail(line, key, "must be positive");
}

}  // namespace

BenchConfig ParseConfig(const std::string& text) {
  BenchConfig c;
  bool have_algorithms = false;
  bool have_scenarios = false;
  std::stringstream ss(text);
  std::string raw;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    if (const size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    raw = Trim(raw);
    if (raw.empty()) continue;
    const size_t eq = raw.find('=');
    if (eq == std::string::npos) Fail(line, raw, "expected 'key = value'");
    const std::string key = Trim(raw.substr(0, eq));
    const std::string value = Trim(raw.substr(eq + 1));
    if (key == "scenarios") {
      have_scenarios = true;
      c.scenarios.clear();
      const std::vector<std::string> items = SplitList(value);
      for (size_t k = 0; k < items.size(); ++k) {
        c.scenarios.push_back(
            CanonicalScenario(items[k], line, key + "[" + std::to_string(k) + "]"));
      }
    } else if (key == "sizes") {
      c.sizes.clear();
      const std::vector<std::string> items = SplitList(value);
      for (size_t k = 0; k < items.size(); ++k) {
        const std::string path = key + "[" + std::to_string(k) + "]";
        const int size = ParseInteger<int>(items[k], line, path);
        if (size <= 0) Fail(line, path, "must be positive");
        c.sizes.push_back(size);
      }
    } else if (key.rfind("seeds.", 0) == 0) {
      const int size = ParseInteger<int>(key.substr(6), line, key);
      const int count = ParseInteger<int>(value, line, key);
      if (count <= 0) Fail(line, key, "must be positive");
      c.seed_counts[size] = count;
    } else if (key == "seed_offset") {
      c.seed_offset = ParseInteger<uint64_t>(value, line, key);
    } else if (key == "master_seed") {
      c.master_seed = ParseInteger<uint64_t>(value, line, key);
    } else if (key == "algorithms") {
      have_algorithms = true;
      c.algorithms = SplitList(value);
      for (size_t k = 0; k < c.algorithms.size(); ++k) {
        if (!IsKnownAlgorithm(c.algorithms[k])) {
          Fail(line, key + "[" + std::to_string(k) + "]",
               "unknown algorithm '" + c.algorithms[k] + "'");
        }
      }
    } else if (key == "delta") {
      c.delta = ParseReal(value, line, key);
      RequirePositive(c.delta, line, key);
    } else if (key == "ts.round_cap") {
      c.ts_round_cap = ParseInteger<int>(value, line, key);
      RequirePositive(c.ts_round_cap, line, key);
    } else if (key == "ts.init") {
      if (value != "random" && value != "uniform") Fail(line, key, "random or uniform");
      c.ts_init = value;
    } else if (key == "dynamics.iterations") {
      c.dynamics_iterations = ParseInteger<int>(value, line, key);
      RequirePositive(c.dynamics_iterations, line, key);
    } else if (key == "hedge.temperature") {
      if (value != "horizon" && value != "log2_over_t") {
        RequirePositive(ParseReal(value, line, key), line, key);
      }
      c.hedge_temperature = value;
    } else if (key == "mwu.rate") {
      c.mwu_rate = ParseReal(value, line, key);
      if (!(c.mwu_rate > 0.0 && c.mwu_rate < 1.0)) Fail(line, key, "must lie in (0, 1)");
    } else if (key == "fgss12.size_cap_2x2") {
      c.fgss12_size_cap = ParseInteger<int>(value, line, key);
    } else if (key == "dfm22_12.delta") {
      c.dfm22_12_delta = ParseReal(value, line, key);
      if (!(c.dfm22_12_delta > 0.0 && c.dfm22_12_delta <= 0.5)) {
        Fail(line, key, "must lie in (0, 0.5]");
      }
    } else if (key == "dfm22_12.search_budget") {
      c.dfm22_12_budget = ParseInteger<int64_t>(value, line, key);
      RequirePositive(static_cast<double>(c.dfm22_12_budget), line, key);
    } else if (key == "timeout_floor") {
      c.timeout_floor = ParseReal(value, line, key);
      RequirePositive(c.timeout_floor, line, key);
    } else if (key == "timeout_reference") {
      if (value != "ts07" && value != "none") Fail(line, key, "ts07 or none");
      c.timeout_reference_ts = value == "ts07";
    } else if (key == "warmup") {
      c.warmup = ParseBool(value, line, key);
    } else if (key == "jobs") {
      c.jobs = ParseInteger<int>(value, line, key);
      RequirePositive(c.jobs, line, key);
    } else {
      Fail(line, key, "unknown key");
    }
  }
  if (!have_algorithms || c.algorithms.empty()) Fail(line, "algorithms", "list is empty");
  if (!have_scenarios || c.scenarios.empty()) Fail(line, "scenarios", "list is empty");
  for (const std::string& s : c.scenarios) {
    if ((s == "zero_sum" || s == "general") && c.sizes.empty()) {
      Fail(line, "sizes", "random scenarios need at least one size");
    }
  }
  return c;
}

BenchConfig LoadConfig(const std::string& path) {
  try {
    return ParseConfig(io::ReadFile(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kFileError) throw Error(ErrorCode::kConfigError, e.what());
    throw;
  }
}

int DefaultSeedCount(int size) {
  switch (size) {
    case 10: return 40;
    case 100: return 20;
    case 1000: return 10;
    default: return 10;
  }
}

int SeedCount(const BenchConfig& config, int size) {
  const auto it = config.seed_counts.find(size);
  return it != config.seed_counts.end() ? it->second : DefaultSeedCount(size);
}

std::string CanonicalConfig(const BenchConfig& c) {
  std::ostringstream out;
  auto list = [&](const char* key, const auto& items) {
    out << key << " =";
    for (const auto& item : items) out << ' ' << item;
    out << '\n';
  };
  list("scenarios", c.scenarios);
  list("sizes", c.sizes);
  for (const auto& [size, count] : c.seed_counts) out << "seeds." << size << " = " << count << '\n';
  out << "seed_offset = " << c.seed_offset << '\n';
  out << "master_seed = " << c.master_seed << '\n';
  list("algorithms", c.algorithms);
  out.precision(17);
  out << "delta = " << c.delta << '\n';
  out << "ts.round_cap = " << c.ts_round_cap << '\n';
  out << "ts.init = " << c.ts_init << '\n';
  out << "dynamics.iterations = " << c.dynamics_iterations << '\n';
  out << "hedge.temperature = " << c.hedge_temperature << '\n';
  out << "mwu.rate = " << c.mwu_rate << '\n';
  out << "fgss12.size_cap_2x2 = " << c.fgss12_size_cap << '\n';
  out << "dfm22_12.delta = " << c.dfm22_12_delta << '\n';
  out << "dfm22_12.search_budget = " << c.dfm22_12_budget << '\n';
  out << "timeout_floor = " << c.timeout_floor << '\n';
  out << "timeout_reference = " << (c.timeout_reference_ts ? "ts07" : "none") << '\n';
  out << "warmup = " << (c.warmup ? "true" : "false") << '\n';
  return out.str();
}

uint64_t ConfigDigest(const BenchConfig& config) { return Fnv1a64(CanonicalConfig(config)); }

}  // namespace bimatrix::bench
