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

// Random schemas and formulas for property tests.

#ifndef VERITY_TESTS_SUPPORT_RANDOM_FORMULA_H_
#define VERITY_TESTS_SUPPORT_RANDOM_FORMULA_H_

#include <random>
#include <string>
#include <vector>

#include "verity/formula.h"
#include "verity/model.h"
#include "verity/schema.h"

namespace verity::testing {

struct GeneratorConfig {
  int max_categorical = 3;
  int max_domain = 3;
  int max_numeric = 1;
  std::vector<std::string> entities = {"x"};
  // Numeric constants are drawn from {0, ..., max_constant}.
  int max_constant = 5;
  // Draw constants with denominators 1..4 and either sign instead.
  bool fractional_constants = false;
  int max_depth = 4;
};

class FormulaGenerator {
 public:
  explicit FormulaGenerator(std::uint64_t seed, GeneratorConfig config = {})
      : rng_(seed), config_(std::move(config)) {}

  Schema schema() {
    Schema s;
    int cats = uniform(config_.max_numeric == 0 ? 1 : 0,
                       config_.max_categorical);
    for (int a = 0; a < cats; ++a) {
      std::vector<std::string> values;
      int size = uniform(1, config_.max_domain);
      for (int v = 0; v < size; ++v) values.push_back("V" + std::to_string(v));
      s.add_categorical("A" + std::to_string(a), values);
    }
    int nums = uniform(cats == 0 ? 1 : 0, config_.max_numeric);
    for (int n = 0; n < nums; ++n) s.add_numeric("N" + std::to_string(n));
    return s;
  }

  Formula formula(const Schema& s) { return formula(s, uniform(0, config_.max_depth)); }

  Formula formula(const Schema& s, int depth) {
    if (depth == 0 || uniform(0, 9) < 3) return leaf(s);
    switch (uniform(0, 3)) {
      case 0: return negate(formula(s, depth - 1));
      case 1: return conj(formula(s, depth - 1), formula(s, depth - 1));
      case 2: return disj(formula(s, depth - 1), formula(s, depth - 1));
      default: return implies(formula(s, depth - 1), formula(s, depth - 1));
    }
  }

  Formula leaf(const Schema& s) {
    if (uniform(0, 9) == 0) return truth(uniform(0, 1) == 1);
    const auto& cats = s.categorical_attributes();
    const auto& nums = s.numeric_attributes();
    std::string entity = pick(config_.entities);
    int which = uniform(0, static_cast<int>(cats.size() + nums.size()) - 1);
    if (which < static_cast<int>(cats.size())) {
      const std::string& attr = cats[which];
      return make_atom(CatAtom{attr, entity, pick(s.domain(attr))});
    }
    const std::string& attr = nums[which - cats.size()];
    auto cmp = static_cast<Cmp>(uniform(0, 4));
    return make_atom(NumAtom{attr, entity, cmp, constant()});
  }

  Rational constant() {
    if (!config_.fractional_constants) {
      return Rational(uniform(0, config_.max_constant));
    }
    int den = uniform(1, 4);
    return Rational(uniform(-4 * config_.max_constant, 4 * config_.max_constant),
                    den);
  }

  // A total model over every key of `s` for the configured entities.
  Model model(const Schema& s) {
    Model m;
    for (const auto& entity : config_.entities) {
      for (const auto& attr : s.categorical_attributes()) {
        m.set(Key{attr, entity}, pick(s.domain(attr)));
      }
      for (const auto& attr : s.numeric_attributes()) {
        m.set(Key{attr, entity},
              Rational(uniform(-2, 2 * config_.max_constant + 2), 2));
      }
    }
    return m;
  }

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[uniform(0, static_cast<int>(items.size()) - 1)];
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  GeneratorConfig config_;
};

}  // namespace verity::testing

#endif  // VERITY_TESTS_SUPPORT_RANDOM_FORMULA_H_
