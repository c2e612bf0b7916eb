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

#ifndef VERITY_MODEL_H_
#define VERITY_MODEL_H_

#include <map>
#include <string>

#include "verity/formula.h"
#include "verity/rational.h"

namespace verity {

// Functional assignment: at most one value per key. Setting a key again
// replaces its value.
class Model {
 public:
  void set(const Key& key, const std::string& value);
  void set(const Key& key, const Rational& value);

  // nullptr when unassigned.
  const std::string* categorical(const Key& key) const;
  const Rational* numeric(const Key& key) const;

  bool covers(const Key& key) const;

  const std::map<Key, std::string>& categorical_assignment() const {
    return categorical_;
  }
  const std::map<Key, Rational>& numeric_assignment() const {
    return numeric_;
  }

  bool operator==(const Model&) const = default;

 private:
  std::map<Key, std::string> categorical_;
  std::map<Key, Rational> numeric_;
};

// Classical truth-table semantics. Throws kMissingKey when `m` lacks a key
// used by `f`.
bool eval(const Model& m, const Formula& f);

// One "Key=value" per entry, keys in ascending order, joined by ", ".
std::string format_model(const Model& m);

}  // namespace verity

#endif  // VERITY_MODEL_H_
