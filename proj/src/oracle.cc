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

#include "verity/oracle.h"

#include <algorithm>
#include <functional>
#include <map>

#include "verity/model.h"

namespace verity::oracle {

std::vector<Rational> grid_for(const std::vector<Rational>& constants) {
  std::vector<Rational> points;
  for (int halves = -2; halves <= 12; ++halves) {
    points.push_back(Rational(halves, 2));
  }
  points.insert(points.end(), constants.begin(), constants.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<Rational> refined = {points.front() - 1, points.back() + 1};
  for (std::size_t i = 0; i < points.size(); ++i) {
    refined.push_back(points[i]);
    if (i + 1 < points.size()) {
      refined.push_back((points[i] + points[i + 1]) / 2);
    }
  }
  std::sort(refined.begin(), refined.end());
  return refined;
}

namespace {

// Calls `visit` on every model over the keys of `f`; stops early when it
// returns true.
bool any_model(const Schema& schema, const Formula& f,
               const std::function<bool(const Model&)>& visit) {
  std::map<Key, std::vector<Rational>> constants;
  for (const Atom& a : atoms_of(f)) {
    if (const auto* num = std::get_if<NumAtom>(&a)) {
      constants[num->key()].push_back(num->constant);
    }
  }
  const std::set<Key> key_set = keys_of(f);
  const std::vector<Key> keys(key_set.begin(), key_set.end());
  Model m;
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == keys.size()) return visit(m);
    const Key& key = keys[i];
    if (schema.is_numeric(key.attr)) {
      for (const Rational& x : grid_for(constants[key])) {
        m.set(key, x);
        if (extend(i + 1)) return true;
      }
      return false;
    }
    for (const std::string& v : schema.domain(key.attr)) {
      m.set(key, v);
      if (extend(i + 1)) return true;
    }
    return false;
  };
  return extend(0);
}

}  // namespace

bool satisfiable(const Schema& schema, const Formula& f) {
  return any_model(schema, f, [&](const Model& m) { return eval(m, f); });
}

bool entails(const Schema& schema, const Formula& a, const Formula& b) {
  Formula both = conj(a, b);
  return !any_model(schema, both, [&](const Model& m) {
    return eval(m, a) && !eval(m, b);
  });
}

bool is_tautology(const Schema& schema, const Formula& f) {
  return !any_model(schema, f, [&](const Model& m) { return !eval(m, f); });
}

bool is_contradiction(const Schema& schema, const Formula& f) {
  return !satisfiable(schema, f);
}

}  // namespace verity::oracle
