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

#ifndef BIMATRIX_BENCH_CONFIG_H_
#define BIMATRIX_BENCH_CONFIG_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bimatrix::bench {

// Key-value configuration, one `key = value` per line, '#' comments. Lists
// are comma-separated. Keys:
//
//   scenarios            zero_sum, general, fixture:<name>, file:<path>
//   sizes                square sizes for the random scenarios
//   seeds.<size>         seed count for one size (default 40/20/10 at
//                        10/100/1000, otherwise 10)
//   seed_offset          first game seed (default 0)
//   master_seed          mixed into every per-task seed (default 0)
//   algorithms           algorithm ids, see AlgorithmIds()
//   delta                TS/DFM stationarity tolerance (default 0.001)
//   ts.round_cap         default 20000
//   ts.init              random | uniform (default random)
//   dynamics.iterations  default 100000
//   hedge.temperature    horizon | log2_over_t | <positive number>
//   mwu.rate             default 0.5
//   fgss12.size_cap_2x2  default 30
//   dfm22_12.delta       default 0.1
//   dfm22_12.search_budget  default 1000000
//   timeout_floor        seconds (default 60)
//   timeout_reference    ts07 | none (default ts07)
//   warmup               true | false (default true)
//   jobs                 worker threads (default 1)
struct BenchConfig {
  std::vector<std::string> scenarios;
  std::vector<int> sizes;
  std::map<int, int> seed_counts;
  uint64_t seed_offset = 0;
  uint64_t master_seed = 0;
  std::vector<std::string> algorithms;
  double delta = 1e-3;
  int ts_round_cap = 20000;
  std::string ts_init = "random";
  int dynamics_iterations = 100000;
  std::string hedge_temperature = "horizon";
  double mwu_rate = 0.5;
  int fgss12_size_cap = 30;
  double dfm22_12_delta = 0.1;
  int64_t dfm22_12_budget = 1000000;
  double timeout_floor = 60.0;
  bool timeout_reference_ts = true;
  bool warmup = true;
  int jobs = 1;
};

// Throws ConfigError naming the line and key.
BenchConfig ParseConfig(const std::string& text);
BenchConfig LoadConfig(const std::string& path);

// Seed count used for a size when no seeds.<size> key is given.
int DefaultSeedCount(int size);
int SeedCount(const BenchConfig& config, int size);

// Stable text of every field, and its FNV-1a digest.
std::string CanonicalConfig(const BenchConfig& config);
uint64_t ConfigDigest(const BenchConfig& config);

}  // namespace bimatrix::bench

#endif  // BIMATRIX_BENCH_CONFIG_H_
