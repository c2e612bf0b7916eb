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

#include "verity/bdi.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>
#include <utility>

#include "json.hpp"

#include "verity/error.h"
#include "verity/syntax.h"

namespace verity {
namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidScenario, message);
}

void check_scenario_formula(const Schema& schema, const Formula& f,
                            std::string_view role) {
  try {
    check_formula(schema, f);
  } catch (const Error& e) {
    invalid(std::string(role) + ": " + e.what());
  }
}

bool contains(const std::vector<Formula>& list, const Formula& f) {
  return std::find(list.begin(), list.end(), f) != list.end();
}

}  // namespace

Scenario::Scenario(Schema schema, Formula communicated, Formula hearer_beliefs,
                   Model world, std::vector<Formula> norms,
                   std::vector<Formula> candidates,
                   const EntailOptions& options)
    : schema_(std::move(schema)),
      communicated_(std::move(communicated)),
      hearer_beliefs_(std::move(hearer_beliefs)),
      world_(std::move(world)),
      norms_(std::move(norms)),
      candidates_(std::move(candidates)),
      options_(options) {
  check_scenario_formula(schema_, communicated_, "communicated");
  check_scenario_formula(schema_, hearer_beliefs_, "hearer_beliefs");
  for (const Formula& q : norms_) check_scenario_formula(schema_, q, "norm");
  for (const Formula& c : candidates_) {
    check_scenario_formula(schema_, c, "candidate");
  }
  for (const auto& [key, value] : world_.categorical_assignment()) {
    if (!schema_.value_index(key.attr, value)) {
      invalid("world: '" + value + "' is not a value of " + format_key(key));
    }
  }
  for (const auto& [key, value] : world_.numeric_assignment()) {
    if (!schema_.is_numeric(key.attr)) {
      invalid("world: " + format_key(key) + " is not numeric");
    }
  }
  for (const Key& key : keys()) {
    if (!world_.covers(key)) {
      invalid("world: no value for " + format_key(key));
    }
  }
  if (!satisfiable(schema_, hearer_beliefs_, options_).holds) {
    invalid("hearer_beliefs are inconsistent");
  }
}

std::set<Key> Scenario::keys() const {
  std::set<Key> keys = keys_of(communicated_);
  keys.merge(keys_of(hearer_beliefs_));
  for (const Formula& q : norms_) keys.merge(keys_of(q));
  for (const Formula& c : candidates_) keys.merge(keys_of(c));
  return keys;
}

std::string format_finding(const MisleadingFinding& finding) {
  if (finding.kind == FindingKind::kWithholding) {
    return "withholding: " + print_formula(finding.proposition);
  }
  return "half-truth: " + print_formula(finding.proposition) + " => " +
         (finding.inference ? print_formula(*finding.inference) : "?");
}

bool detect_withholding(const Scenario& s, const Formula& q) {
  if (!contains(s.norms(), q)) return false;
  if (!eval(s.world(), q)) return false;
  return !entails(s.schema(), s.communicated(), q, s.options()).holds;
}

bool detect_half_truth(const Scenario& s, const Formula& p, const Formula& r) {
  const bool p_true = eval(s.world(), p);
  const bool r_true = eval(s.world(), r);
  if (!p_true || r_true) return false;
  const auto& opts = s.options();
  return entails(s.schema(), s.communicated(), p, opts).holds &&
         !entails(s.schema(), s.communicated(), r, opts).holds &&
         entails(s.schema(), s.hearer_beliefs(), implies(p, r), opts).holds;
}

std::vector<Formula> default_candidates(const Scenario& s) {
  std::map<Key, std::vector<Rational>> constants;
  std::vector<Formula> sources = {s.communicated(), s.hearer_beliefs()};
  sources.insert(sources.end(), s.norms().begin(), s.norms().end());
  for (const Formula& f : sources) {
    for (const Atom& a : atoms_of(f)) {
      if (const auto* num = std::get_if<NumAtom>(&a)) {
        constants[num->key()].push_back(num->constant);
      }
    }
  }
  std::map<std::string, Formula> by_text;
  for (const Key& key : s.keys()) {
    if (s.schema().is_categorical(key.attr)) {
      for (const std::string& value : s.schema().domain(key.attr)) {
        Formula f = make_atom(CatAtom{key.attr, key.entity, value});
        by_text.emplace(print_formula(f), f);
      }
      continue;
    }
    for (const Rational& c : constants[key]) {
      for (Cmp cmp : {Cmp::kLt, Cmp::kLe, Cmp::kEq, Cmp::kGe, Cmp::kGt}) {
        Formula f = make_atom(NumAtom{key.attr, key.entity, cmp, c});
        by_text.emplace(print_formula(f), f);
      }
    }
  }
  std::vector<Formula> out;
  out.reserve(by_text.size());
  for (auto& [text, f] : by_text) out.push_back(std::move(f));
  return out;
}

std::vector<MisleadingFinding> scan_misleading(
    const Scenario& s, std::span<const Formula> candidates,
    const ScanOptions& options) {
  std::vector<Formula> pool;
  if (!candidates.empty()) {
    pool.assign(candidates.begin(), candidates.end());
  } else if (!s.candidates().empty()) {
    pool = s.candidates();
  } else {
    pool = default_candidates(s);
  }

  // Deduplicate by printed form, which also fixes the output order.
  std::map<std::string, Formula> unique;
  for (const Formula& c : pool) unique.emplace(print_formula(c), c);
  const std::uint64_t n = unique.size();
  if (n * n > options.max_pairs) {
    throw Error(ErrorCode::kResourceLimit,
                std::to_string(n) + " candidates give more than " +
                    std::to_string(options.max_pairs) + " pairs");
  }

  struct Candidate {
    Formula formula;
    bool communicated = false;
    bool true_in_world = false;
  };
  std::vector<Candidate> cands;
  for (const auto& [text, f] : unique) {
    check_formula(s.schema(), f);
    cands.push_back(
        {f, entails(s.schema(), s.communicated(), f, s.options()).holds,
         eval(s.world(), f)});
  }

  std::vector<MisleadingFinding> findings;
  for (const Candidate& c : cands) {
    if (detect_withholding(s, c.formula)) {
      findings.push_back({FindingKind::kWithholding, c.formula, std::nullopt});
    }
  }
  for (const Candidate& p : cands) {
    if (!p.communicated || !p.true_in_world) continue;
    for (const Candidate& r : cands) {
      if (r.communicated || r.true_in_world) continue;
      if (entails(s.schema(), s.hearer_beliefs(),
                  implies(p.formula, r.formula), s.options())
              .holds) {
        findings.push_back({FindingKind::kHalfTruth, p.formula, r.formula});
      }
    }
  }
  return findings;
}

Scenario parse_scenario(std::string_view json_text, const std::string& base_dir,
                        const Schema* schema_override,
                        const EntailOptions& options) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    invalid(std::string("malformed scenario document: ") + e.what());
  }
  if (!doc.is_object()) invalid("scenario document must be a JSON object");

  auto string_field = [&](const char* name, bool required) -> std::string {
    auto it = doc.find(name);
    if (it == doc.end()) {
      if (required) invalid(std::string("missing field '") + name + "'");
      return "";
    }
    if (!it->is_string()) {
      invalid(std::string("field '") + name + "' must be a string");
    }
    return it->get<std::string>();
  };
  auto list_field = [&](const char* name) {
    std::vector<std::string> out;
    auto it = doc.find(name);
    if (it == doc.end()) return out;
    if (!it->is_array()) {
      invalid(std::string("field '") + name + "' must be a list");
    }
    for (const auto& item : *it) {
      if (!item.is_string()) {
        invalid(std::string("entries of '") + name + "' must be strings");
      }
      out.push_back(item.get<std::string>());
    }
    return out;
  };

  Schema schema;
  if (schema_override != nullptr) {
    schema = *schema_override;
  } else {
    std::filesystem::path path = string_field("schema", true);
    if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
    schema = load_schema(path.string());
  }

  auto formula = [&](const std::string& text, std::string_view role) {
    try {
      return parse_formula(text, schema);
    } catch (const Error& e) {
      invalid(std::string(role) + " '" + text + "': " + e.what());
    }
  };

  Formula communicated =
      formula(string_field("communicated", true), "communicated");
  std::string beliefs_text = string_field("hearer_beliefs", false);
  Formula beliefs = beliefs_text.empty()
                        ? truth(true)
                        : formula(beliefs_text, "hearer_beliefs");
  std::vector<Formula> norms;
  for (const auto& text : list_field("norms")) {
    norms.push_back(formula(text, "norm"));
  }
  std::vector<Formula> candidates;
  for (const auto& text : list_field("candidates")) {
    candidates.push_back(formula(text, "candidate"));
  }

  Model world;
  auto world_it = doc.find("world");
  if (world_it == doc.end() || !world_it->is_object()) {
    invalid("field 'world' must be an object");
  }
  for (const auto& [key_text, value] : world_it->items()) {
    auto open = key_text.find('(');
    if (open == std::string::npos || open == 0 || key_text.back() != ')' ||
        open + 2 >= key_text.size()) {
      invalid("world key '" + key_text + "' is not of the form Attr(entity)");
    }
    Key key{key_text.substr(0, open),
            key_text.substr(open + 1, key_text.size() - open - 2)};
    if (schema.is_numeric(key.attr)) {
      std::string text = value.is_string() ? value.get<std::string>()
                         : value.is_number() ? value.dump()
                                             : "";
      Rational number;
      if (!parse_rational(text, &number)) {
        invalid("world value of " + key_text + " is not a number");
      }
      world.set(key, number);
    } else if (schema.is_categorical(key.attr)) {
      if (!value.is_string()) {
        invalid("world value of " + key_text + " must be a string");
      }
      world.set(key, value.get<std::string>());
    } else {
      invalid("world key '" + key_text + "' uses an unknown attribute");
    }
  }

  return Scenario(std::move(schema), std::move(communicated),
                  std::move(beliefs), std::move(world), std::move(norms),
                  std::move(candidates), options);
}

Scenario load_scenario(const std::string& path, const Schema* schema_override,
                       const EntailOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read scenario '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  std::string base = std::filesystem::path(path).parent_path().string();
  return parse_scenario(text.str(), base, schema_override, options);
}

}  // namespace verity
