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

#ifndef BIMATRIX_DEADLINE_H_
#define BIMATRIX_DEADLINE_H_

#include <chrono>
#include <optional>

namespace bimatrix {

// Cooperative wall-clock budget. Long-running loops poll Expired() and wind
// down with a timeout status; a default-constructed deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline After(std::chrono::duration<double> budget) {
    Deadline d;
    d.end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }

  bool Expired() const { return end_.has_value() && Clock::now() >= *end_; }
  bool Bounded() const { return end_.has_value(); }

 private:
  std::optional<Clock::time_point> end_;
};

}  // namespace bimatrix

#endif  // BIMATRIX_DEADLINE_H_
