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

#ifndef BIMATRIX_ERRORS_H_
#define BIMATRIX_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace bimatrix {

enum class ErrorCode {
  kNonFinitePayoff,
  kShapeMismatch,
  kDimensionMismatch,
  kEmptySupport,
  kInvalidArgument,
  kNumericalFailure,
  kPivotCapExceeded,
  kBudgetZero,
  kUnknownFixture,
  kFileError,
  kParseError,
  kConfigError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception; the code identifies the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// A ParseError that remembers where in the input it happened (1-based).
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace bimatrix

#endif  // BIMATRIX_ERRORS_H_
