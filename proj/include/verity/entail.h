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

#ifndef VERITY_ENTAIL_H_
#define VERITY_ENTAIL_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "verity/formula.h"
#include "verity/model.h"
#include "verity/schema.h"

namespace verity {

inline constexpr std::uint64_t kDefaultAssignmentLimit = 1'000'000;

struct EntailOptions {
  // Upper bound on the number of assignments a single decision may
  // enumerate (categorical values times numeric sample points).
  std::uint64_t max_assignments = kDefaultAssignmentLimit;
};

struct EntailmentResult {
  bool holds = false;
  // Satisfying model for satisfiable(); countermodel for a failed entails().
  std::optional<Model> witness;
};

// Decides satisfiability by enumerating every assignment to the keys that
// occur in `f`. Categorical keys range over their domain. A numeric key
// with mentioned constants c1 < ... < ck ranges over
// {c1 - 1, c1, (c1 + c2) / 2, c2, ..., ck, ck + 1}, which meets every
// region on which the key's atoms have constant truth values.
//
// Throws kResourceLimit when the assignment count exceeds the limit.
EntailmentResult satisfiable(const Schema& schema, const Formula& f,
                             const EntailOptions& options = {});

// a |= b iff a & !b is unsatisfiable.
EntailmentResult entails(const Schema& schema, const Formula& a,
                         const Formula& b, const EntailOptions& options = {});

bool is_tautology(const Schema& schema, const Formula& f,
                  const EntailOptions& options = {});
bool is_contradiction(const Schema& schema, const Formula& f,
                      const EntailOptions& options = {});

// The sample set described above, for one key's constants (any order,
// duplicates allowed).
std::vector<Rational> numeric_sample_points(std::vector<Rational> constants);

}  // namespace verity

#endif  // VERITY_ENTAIL_H_
