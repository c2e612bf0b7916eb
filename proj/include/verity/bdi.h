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

#ifndef VERITY_BDI_H_
#define VERITY_BDI_H_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "verity/entail.h"
#include "verity/formula.h"
#include "verity/model.h"
#include "verity/schema.h"

namespace verity {

// A speaker-to-hearer communication together with what the hearer believes,
// what the hearer expects to be told, and how the world actually is.
//
// "Communicated q" is read as: the communicated content entails q.
// "q is true" is read as: q holds in the world model.
// An expectation norm q stands for the hearer belief "if q then the speaker
// communicates q".
class Scenario {
 public:
  // Throws kInvalidScenario when a formula does not type check, the world is
  // not total over the scenario's keys, or the hearer beliefs are
  // unsatisfiable.
  Scenario(Schema schema, Formula communicated, Formula hearer_beliefs,
           Model world, std::vector<Formula> norms,
           std::vector<Formula> candidates = {},
           const EntailOptions& options = {});

  const Schema& schema() const { return schema_; }
  const Formula& communicated() const { return communicated_; }
  const Formula& hearer_beliefs() const { return hearer_beliefs_; }
  const Model& world() const { return world_; }
  const std::vector<Formula>& norms() const { return norms_; }
  // Candidates given with the scenario; may be empty.
  const std::vector<Formula>& candidates() const { return candidates_; }
  const EntailOptions& options() const { return options_; }

  // Keys mentioned by communicated content, beliefs, norms and candidates.
  std::set<Key> keys() const;

 private:
  Schema schema_;
  Formula communicated_;
  Formula hearer_beliefs_;
  Model world_;
  std::vector<Formula> norms_;
  std::vector<Formula> candidates_;
  EntailOptions options_;
};

enum class FindingKind { kWithholding, kHalfTruth };

struct MisleadingFinding {
  FindingKind kind = FindingKind::kWithholding;
  // q for withholding, p for a half truth.
  Formula proposition;
  // r for a half truth; unset for withholding.
  std::optional<Formula> inference;

  bool operator==(const MisleadingFinding&) const = default;
};

// "withholding: q" or "half-truth: p => r".
std::string format_finding(const MisleadingFinding& finding);

// q is an expectation norm, true in the world, and not entailed by what was
// communicated.
bool detect_withholding(const Scenario& s, const Formula& q);

// p is communicated and true, r is not communicated and false, and the
// hearer believes p -> r.
bool detect_half_truth(const Scenario& s, const Formula& p, const Formula& r);

struct ScanOptions {
  std::uint64_t max_pairs = 10'000;
};

// Every atom over the scenario's keys: each domain value of a categorical
// key, and each comparison against each constant mentioned for a numeric
// key. Sorted by printed form.
std::vector<Formula> default_candidates(const Scenario& s);

// Withholding findings for candidates that are norms, half-truth findings
// for ordered candidate pairs. An empty `candidates` falls back to the
// scenario's own candidates, then to default_candidates(). Output is
// deduplicated and sorted by kind, then printed form.
//
// Throws kResourceLimit when |candidates|^2 exceeds max_pairs.
std::vector<MisleadingFinding> scan_misleading(
    const Scenario& s, std::span<const Formula> candidates = {},
    const ScanOptions& options = {});

// JSON scenario document:
//
//   {
//     "schema": "weather.schema",          // relative to base_dir
//     "communicated": "Sky(today)=Cloudy",
//     "hearer_beliefs": "true",
//     "world": {"Sky(today)": "Cloudy", "Hurricane(today)": "Yes"},
//     "norms": ["Hurricane(today)=Yes"],
//     "candidates": [...]                  // optional
//   }
//
// Numeric world values may be JSON numbers or decimal strings. A non-null
// `schema_override` replaces the document's schema. Throws
// kInvalidScenario, or kIo when the schema file cannot be read.
Scenario parse_scenario(std::string_view json_text, const std::string& base_dir,
                        const Schema* schema_override = nullptr,
                        const EntailOptions& options = {});
Scenario load_scenario(const std::string& path,
                       const Schema* schema_override = nullptr,
                       const EntailOptions& options = {});

}  // namespace verity

#endif  // VERITY_BDI_H_
