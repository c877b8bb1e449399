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

#include "bimatrix/errors.h"

namespace bimatrix {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonFinitePayoff: return "NonFinitePayoff";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptySupport: return "EmptySupport";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kPivotCapExceeded: return "PivotCapExceeded";
    case ErrorCode::kBudgetZero: return "BudgetZero";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
    case ErrorCode::kFileError: return "FileError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorCode::kParseError, "line " + std::to_string(line) +
                                        ", column " + std::to_string(column) +
                                        ": " + message),
      line_(line),
      column_(column) {}

}  // namespace bimatrix
