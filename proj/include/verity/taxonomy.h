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

#ifndef VERITY_TAXONOMY_H_
#define VERITY_TAXONOMY_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "verity/entail.h"
#include "verity/formula.h"
#include "verity/schema.h"

namespace verity {

// Relation between a generator's input and its output.
//
//   0   input |= output, output |= input
//   1a  input |= output only; output is not a tautology
//   1b  input |= output only; output is a tautology
//   2a  output |= input only; output is satisfiable
//   2b  output |= input only; output is a contradiction
//   3a  neither direction; input does not entail !output
//   3b  neither direction; input |= !output
//
// kInconsistentInput covers unsatisfiable inputs, for which the categories
// above are not defined.
enum class Verdict {
  kWellMatched,
  kTooWeak,
  kTautologous,
  kTooStrong,
  kSelfContradictory,
  kIndependent,
  kConflicting,
  kInconsistentInput,
};

inline constexpr std::array<Verdict, 8> kAllVerdicts = {
    Verdict::kWellMatched,       Verdict::kTooWeak,
    Verdict::kTautologous,       Verdict::kTooStrong,
    Verdict::kSelfContradictory, Verdict::kIndependent,
    Verdict::kConflicting,       Verdict::kInconsistentInput,
};

// Stable serialization names, e.g. "1a-too-weak". Sorted ascending in
// kAllVerdicts order.
std::string_view verdict_name(Verdict v);
std::optional<Verdict> verdict_from_name(std::string_view name);

Verdict classify(const Schema& schema, const Formula& input,
                 const Formula& output, const EntailOptions& options = {});

// All entailment facts relating input and output, computed independently of
// classify(). Used for diagnostics and for cross-checking verdicts.
struct EntailmentFacts {
  bool input_consistent = false;
  bool input_entails_output = false;
  bool output_entails_input = false;
  bool output_tautology = false;
  bool output_contradiction = false;
  bool input_entails_negated_output = false;
};

EntailmentFacts entailment_facts(const Schema& schema, const Formula& input,
                                 const Formula& output,
                                 const EntailOptions& options = {});

// Verdict that `facts` define, without further solver calls.
Verdict verdict_from_facts(const EntailmentFacts& facts);

enum class JiLabel { kNone, kIntrinsic, kExtrinsic };

// Labels of the two earlier schemes: hallucination/omission as failures of
// either entailment direction, and intrinsic/extrinsic hallucination.
struct LegacyLabels {
  bool dusek_hallucination = false;
  bool dusek_omission = false;
  JiLabel ji = JiLabel::kNone;

  bool operator==(const LegacyLabels&) const = default;
};

// Throws kUnmappableVerdict for kInconsistentInput.
LegacyLabels legacy_labels(Verdict v);

// Computed straight from the entailment facts; agrees with legacy_labels on
// consistent inputs.
LegacyLabels legacy_labels_from_facts(const EntailmentFacts& facts);

std::string_view ji_name(JiLabel ji);
// "none", "hallucination", "omission" or "hallucination+omission".
std::string dusek_name(const LegacyLabels& labels);

}  // namespace verity

#endif  // VERITY_TAXONOMY_H_
