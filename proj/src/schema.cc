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

#include "verity/schema.h"

#include <algorithm>

#include "verity/error.h"

namespace verity {

void Schema::add_categorical(const std::string& name,
                             const std::vector<std::string>& values) {
  if (has_attribute(name)) {
    throw Error(ErrorCode::kDuplicateAttribute,
                "duplicate attribute '" + name + "'");
  }
  if (values.empty()) {
    throw Error(ErrorCode::kSyntax,
                "attribute '" + name + "' has an empty domain");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::find(values.begin(), values.begin() + i, values[i]) !=
        values.begin() + i) {
      throw Error(ErrorCode::kDuplicateValue, "duplicate value '" + values[i] +
                                                  "' in domain of '" + name +
                                                  "'");
    }
  }
  categorical_order_.push_back(name);
  domains_.emplace(name, values);
}

void Schema::add_numeric(const std::string& name) {
  if (has_attribute(name)) {
    throw Error(ErrorCode::kDuplicateAttribute,
                "duplicate attribute '" + name + "'");
  }
  numeric_order_.push_back(name);
}

bool Schema::has_attribute(std::string_view name) const {
  return is_categorical(name) || is_numeric(name);
}

bool Schema::is_categorical(std::string_view name) const {
  return domains_.find(name) != domains_.end();
}

bool Schema::is_numeric(std::string_view name) const {
  return std::find(numeric_order_.begin(), numeric_order_.end(), name) !=
         numeric_order_.end();
}

const std::vector<std::string>& Schema::domain(std::string_view attr) const {
  auto it = domains_.find(attr);
  if (it == domains_.end()) {
    throw Error(ErrorCode::kUnknownAttribute,
                "unknown categorical attribute '" + std::string(attr) + "'");
  }
  return it->second;
}

std::optional<std::size_t> Schema::value_index(std::string_view attr,
                                               std::string_view value) const {
  auto it = domains_.find(attr);
  if (it == domains_.end()) return std::nullopt;
  const auto& values = it->second;
  auto pos = std::find(values.begin(), values.end(), value);
  if (pos == values.end()) return std::nullopt;
  return static_cast<std::size_t>(pos - values.begin());
}

}  // namespace verity
