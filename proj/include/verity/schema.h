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

#ifndef VERITY_SCHEMA_H_
#define VERITY_SCHEMA_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace verity {

// Attribute vocabulary shared by every formula of a problem. Categorical
// attributes range over a finite ordered domain; numeric attributes range
// over the rationals.
class Schema {
 public:
  // Throws kDuplicateAttribute, kDuplicateValue, or kSyntax for an empty
  // domain.
  void add_categorical(const std::string& name,
                       const std::vector<std::string>& values);
  void add_numeric(const std::string& name);

  bool has_attribute(std::string_view name) const;
  bool is_categorical(std::string_view name) const;
  bool is_numeric(std::string_view name) const;

  // Throws kUnknownAttribute when `attr` is not categorical.
  const std::vector<std::string>& domain(std::string_view attr) const;
  std::optional<std::size_t> value_index(std::string_view attr,
                                         std::string_view value) const;

  // Declaration order.
  const std::vector<std::string>& categorical_attributes() const {
    return categorical_order_;
  }
  const std::vector<std::string>& numeric_attributes() const {
    return numeric_order_;
  }

 private:
  std::vector<std::string> categorical_order_;
  std::vector<std::string> numeric_order_;
  std::map<std::string, std::vector<std::string>, std::less<>> domains_;
};

}  // namespace verity

#endif  // VERITY_SCHEMA_H_
