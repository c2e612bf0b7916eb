# Copyright 2026 The Verity Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Entailment-based classification of data-to-text outputs."""

from verity._verity import (
    VERDICTS,
    CategoryCounts,
    Corpus,
    CorpusRecord,
    EntailmentResult,
    Finding,
    Formula,
    Scenario,
    Schema,
    VerityError,
    classify,
    entails,
    eval,
    ingest_corpus,
    is_contradiction,
    is_tautology,
    legacy_labels,
    parse_formula,
    print_formula,
    render_report,
    satisfiable,
    tally,
)

__all__ = [
    "VERDICTS",
    "CategoryCounts",
    "Corpus",
    "CorpusRecord",
    "EntailmentResult",
    "Finding",
    "Formula",
    "Scenario",
    "Schema",
    "VerityError",
    "classify",
    "entails",
    "eval",
    "ingest_corpus",
    "is_contradiction",
    "is_tautology",
    "legacy_labels",
    "parse_formula",
    "print_formula",
    "render_report",
    "satisfiable",
    "tally",
]
