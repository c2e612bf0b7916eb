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

#include "verity/model.h"

#include "verity/error.h"

namespace verity {

void Model::set(const Key& key, const std::string& value) {
  numeric_.erase(key);
  categorical_[key] = value;
}

void Model::set(const Key& key, const Rational& value) {
  categorical_.erase(key);
  numeric_[key] = value;
}

const std::string* Model::categorical(const Key& key) const {
  auto it = categorical_.find(key);
  return it == categorical_.end() ? nullptr : &it->second;
}

const Rational* Model::numeric(const Key& key) const {
  auto it = numeric_.find(key);
  return it == numeric_.end() ? nullptr : &it->second;
}

bool Model::covers(const Key& key) const {
  return categorical_.count(key) > 0 || numeric_.count(key) > 0;
}

namespace {

bool eval_atom(const Model& m, const Atom& a) {
  if (const auto* cat = std::get_if<CatAtom>(&a)) {
    const std::string* value = m.categorical(cat->key());
    if (value == nullptr) {
      throw Error(ErrorCode::kMissingKey,
                  "model has no categorical value for " +
                      format_key(cat->key()));
    }
    return *value == cat->value;
  }
  const auto& num = std::get<NumAtom>(a);
  const Rational* value = m.numeric(num.key());
  if (value == nullptr) {
    throw Error(ErrorCode::kMissingKey,
                "model has no numeric value for " + format_key(num.key()));
  }
  return compare(*value, num.cmp, num.constant);
}

}  // namespace

// No short-circuiting, so a missing key is reported wherever it occurs.
bool eval(const Model& m, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kTrue: return true;
    case Formula::Kind::kFalse: return false;
    case Formula::Kind::kAtom: return eval_atom(m, f.atom());
    case Formula::Kind::kNot: return !eval(m, f.left());
    default: break;
  }
  bool lhs = eval(m, f.left());
  bool rhs = eval(m, f.right());
  if (f.kind() == Formula::Kind::kAnd) return lhs && rhs;
  if (f.kind() == Formula::Kind::kOr) return lhs || rhs;
  return !lhs || rhs;
}

std::string format_model(const Model& m) {
  std::map<Key, std::string> entries = m.categorical_assignment();
  for (const auto& [key, value] : m.numeric_assignment()) {
    entries[key] = format_rational(value);
  }
  std::string out;
  for (const auto& [key, value] : entries) {
    if (!out.empty()) out += ", ";
    out += format_key(key) + "=" + value;
  }
  return out;
}

}  // namespace verity
