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

#include "verity/taxonomy.h"

#include "verity/error.h"

namespace verity {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kWellMatched: return "0-well-matched";
    case Verdict::kTooWeak: return "1a-too-weak";
    case Verdict::kTautologous: return "1b-tautologous";
    case Verdict::kTooStrong: return "2a-too-strong";
    case Verdict::kSelfContradictory: return "2b-self-contradictory";
    case Verdict::kIndependent: return "3a-independent";
    case Verdict::kConflicting: return "3b-conflicting";
    case Verdict::kInconsistentInput: return "inconsistent-input";
  }
  return "";
}

std::optional<Verdict> verdict_from_name(std::string_view name) {
  for (Verdict v : kAllVerdicts) {
    if (verdict_name(v) == name) return v;
  }
  return std::nullopt;
}

Verdict classify(const Schema& schema, const Formula& input,
                 const Formula& output, const EntailOptions& options) {
  if (!satisfiable(schema, input, options).holds) {
    return Verdict::kInconsistentInput;
  }
  const bool forward = entails(schema, input, output, options).holds;
  const bool backward = entails(schema, output, input, options).holds;
  if (forward && backward) return Verdict::kWellMatched;
  if (forward) {
    return is_tautology(schema, output, options) ? Verdict::kTautologous
                                                 : Verdict::kTooWeak;
  }
  if (backward) {
    return is_contradiction(schema, output, options)
               ? Verdict::kSelfContradictory
               : Verdict::kTooStrong;
  }
  return entails(schema, input, negate(output), options).holds
             ? Verdict::kConflicting
             : Verdict::kIndependent;
}

EntailmentFacts entailment_facts(const Schema& schema, const Formula& input,
                                 const Formula& output,
                                 const EntailOptions& options) {
  EntailmentFacts facts;
  facts.input_consistent = satisfiable(schema, input, options).holds;
  facts.input_entails_output = entails(schema, input, output, options).holds;
  facts.output_entails_input = entails(schema, output, input, options).holds;
  facts.output_tautology = is_tautology(schema, output, options);
  facts.output_contradiction = is_contradiction(schema, output, options);
  facts.input_entails_negated_output =
      entails(schema, input, negate(output), options).holds;
  return facts;
}

Verdict verdict_from_facts(const EntailmentFacts& facts) {
  if (!facts.input_consistent) return Verdict::kInconsistentInput;
  const bool forward = facts.input_entails_output;
  const bool backward = facts.output_entails_input;
  if (forward && backward) return Verdict::kWellMatched;
  if (forward) {
    return facts.output_tautology ? Verdict::kTautologous : Verdict::kTooWeak;
  }
  if (backward) {
    return facts.output_contradiction ? Verdict::kSelfContradictory
                                      : Verdict::kTooStrong;
  }
  return facts.input_entails_negated_output ? Verdict::kConflicting
                                            : Verdict::kIndependent;
}

LegacyLabels legacy_labels(Verdict v) {
  switch (v) {
    case Verdict::kWellMatched: return {false, false, JiLabel::kNone};
    case Verdict::kTooWeak:
    case Verdict::kTautologous: return {false, true, JiLabel::kNone};
    case Verdict::kTooStrong: return {true, false, JiLabel::kExtrinsic};
    case Verdict::kSelfContradictory: return {true, false, JiLabel::kIntrinsic};
    case Verdict::kIndependent: return {true, true, JiLabel::kExtrinsic};
    case Verdict::kConflicting: return {true, true, JiLabel::kIntrinsic};
    case Verdict::kInconsistentInput: break;
  }
  throw Error(ErrorCode::kUnmappableVerdict,
              "no legacy labels for an inconsistent input");
}

LegacyLabels legacy_labels_from_facts(const EntailmentFacts& facts) {
  LegacyLabels labels;
  labels.dusek_hallucination = !facts.input_entails_output;
  labels.dusek_omission = !facts.output_entails_input;
  if (facts.input_entails_negated_output) {
    labels.ji = JiLabel::kIntrinsic;
  } else if (!facts.input_entails_output) {
    labels.ji = JiLabel::kExtrinsic;
  }
  return labels;
}

std::string_view ji_name(JiLabel ji) {
  switch (ji) {
    case JiLabel::kNone: return "none";
    case JiLabel::kIntrinsic: return "intrinsic";
    case JiLabel::kExtrinsic: return "extrinsic";
  }
  return "";
}

std::string dusek_name(const LegacyLabels& labels) {
  if (labels.dusek_hallucination && labels.dusek_omission) {
    return "hallucination+omission";
  }
  if (labels.dusek_hallucination) return "hallucination";
  if (labels.dusek_omission) return "omission";
  return "none";
}

}  // namespace verity
