// Copyright 2026 The Verity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VERITY_ERROR_H_
#define VERITY_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace verity {

enum class ErrorCode {
  kSyntax,
  kDuplicateAttribute,
  kDuplicateValue,
  kUnknownAttribute,
  kValueNotInDomain,
  kNumericComparisonOnCategorical,
  kCategoricalValueOnNumeric,
  kMissingKey,
  kResourceLimit,
  kUnmappableVerdict,
  kUnknownFormat,
  kInvalidScenario,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// Every failure in the library is reported as an Error. Syntax errors carry
// a 1-based line and column; other errors leave them at 0.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0,
        int column = 0);

  ErrorCode code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorCode code_;
  int line_;
  int column_;
};

}  // namespace verity

#endif  // VERITY_ERROR_H_
