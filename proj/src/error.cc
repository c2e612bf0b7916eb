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

#include "verity/error.h"

namespace verity {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kDuplicateAttribute: return "DuplicateAttribute";
    case ErrorCode::kDuplicateValue: return "DuplicateValue";
    case ErrorCode::kUnknownAttribute: return "UnknownAttribute";
    case ErrorCode::kValueNotInDomain: return "ValueNotInDomain";
    case ErrorCode::kNumericComparisonOnCategorical:
      return "NumericComparisonOnCategorical";
    case ErrorCode::kCategoricalValueOnNumeric:
      return "CategoricalValueOnNumeric";
    case ErrorCode::kMissingKey: return "MissingKey";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kUnmappableVerdict: return "UnmappableVerdict";
    case ErrorCode::kUnknownFormat: return "UnknownFormat";
    case ErrorCode::kInvalidScenario: return "InvalidScenario";
    case ErrorCode::kIo: return "IoError";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& message, int line, int column)
    : std::runtime_error(message), code_(code), line_(line), column_(column) {}

}  // namespace verity
