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

#include "bimatrix/bench/tables.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

namespace bimatrix::bench {
namespace {

struct Accumulator {
  double sum = 0.0;
  int count = 0;
  void Add(const std::optional<double>& v) {
    if (!v) return;
    sum += *v;
    ++count;
  }
  std::optional<double> Mean() const {
    if (count == 0) return std::nullopt;
    return sum / count;
  }
};

std::string Fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string SizeLabel(int size) {
  if (size == 0) return "game";
  return std::to_string(size) + "x" + std::to_string(size);
}

}  // namespace

std::vector<CellSummary> Summarize(const std::vector<RunRecord>& records) {
  using Key = std::tuple<std::string, int, std::string>;
  std::map<Key, size_t> position;
  std::vector<CellSummary> cells;
  std::vector<std::array<Accumulator, 5>> acc;
  for (const RunRecord& r : records) {
    const Key key{r.scenario, r.size, r.algorithm};
    auto it = position.find(key);
    if (it == position.end()) {
      it = position.emplace(key, cells.size()).first;
      CellSummary cell;
      cell.scenario = r.scenario;
      cell.size = r.size;
      cell.algorithm = r.algorithm;
      cells.push_back(std::move(cell));
      acc.emplace_back();
    }
    CellSummary& cell = cells[it->second];
    auto& a = acc[it->second];
    switch (r.status) {
      case RecordStatus::kOk:
        ++cell.ok;
        a[0].Add(r.epsilon);
        a[1].Add(r.ws_epsilon);
        a[2].Add(r.pre_mix_epsilon);
        a[3].Add(r.pre_mix_ws_epsilon);
        a[4].Add(r.time_ms);
        break;
      case RecordStatus::kTimeout:
        ++cell.timeouts;
        break;
      case RecordStatus::kPrecisionError:
        ++cell.precision_errors;
        break;
    }
  }
  for (size_t k = 0; k < cells.size(); ++k) {
    cells[k].epsilon = acc[k][0].Mean();
    cells[k].ws_epsilon = acc[k][1].Mean();
    cells[k].pre_mix_epsilon = acc[k][2].Mean();
    cells[k].pre_mix_ws_epsilon = acc[k][3].Mean();
    cells[k].time_ms = acc[k][4].Mean();
  }
  return cells;
}

std::string RenderCell(const CellSummary& cell, bool well_supported) {
  if (cell.ok == 0) {
    if (cell.timeouts > 0) return "Timeout";
    return "Precision Error";
  }
  const std::optional<double>& mean = well_supported ? cell.ws_epsilon : cell.epsilon;
  const std::optional<double>& pre =
      well_supported ? cell.pre_mix_ws_epsilon : cell.pre_mix_epsilon;
  std::string out = mean ? Fixed4(*mean) : "-";
  if (pre) out += " (" + Fixed4(*pre) + ")";
  return out;
}

std::string RenderTables(const std::vector<RunRecord>& records) {
  const std::vector<CellSummary> cells = Summarize(records);
  std::vector<std::string> scenarios;
  for (const CellSummary& c : cells) {
    if (std::find(scenarios.begin(), scenarios.end(), c.scenario) == scenarios.end()) {
      scenarios.push_back(c.scenario);
    }
  }
  std::ostringstream out;
  for (const std::string& scenario : scenarios) {
    std::vector<int> sizes;
    std::vector<std::string> algorithms;
    std::map<std::pair<std::string, int>, const CellSummary*> index;
    for (const CellSummary& c : cells) {
      if (c.scenario != scenario) continue;
      if (std::find(sizes.begin(), sizes.end(), c.size) == sizes.end()) sizes.push_back(c.size);
      if (std::find(algorithms.begin(), algorithms.end(), c.algorithm) == algorithms.end()) {
        algorithms.push_back(c.algorithm);
      }
      index[{c.algorithm, c.size}] = &c;
    }
    for (const bool ws : {false, true}) {
      out << "### " << scenario << ": " << (ws ? "ws_epsilon" : "epsilon") << "\n\n";
      out << "| algorithm |";
      for (const int s : sizes) out << ' ' << SizeLabel(s) << " |";
      out << "\n|---|";
      for (size_t k = 0; k < sizes.size(); ++k) out << "---|";
      out << '\n';
      for (const std::string& alg : algorithms) {
        out << "| " << alg << " |";
        for (const int s : sizes) {
          const auto it = index.find({alg, s});
          out << ' ' << (it == index.end() ? "" : RenderCell(*it->second, ws)) << " |";
        }
        out << '\n';
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace bimatrix::bench
