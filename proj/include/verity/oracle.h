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

#ifndef VERITY_ORACLE_H_
#define VERITY_ORACLE_H_

#include <vector>

#include "verity/formula.h"
#include "verity/rational.h"
#include "verity/schema.h"

// Brute-force reference decisions. Shares nothing with the production
// decision procedure except eval(): numeric keys range over a fixed
// half-unit grid from -1 to 6, refined with the mentioned constants, the
// midpoints of all neighbouring points and one point beyond each end.
// Intended for small instances only; there is no resource limit.
namespace verity::oracle {

std::vector<Rational> grid_for(const std::vector<Rational>& constants);

bool satisfiable(const Schema& schema, const Formula& f);
bool entails(const Schema& schema, const Formula& a, const Formula& b);
bool is_tautology(const Schema& schema, const Formula& f);
bool is_contradiction(const Schema& schema, const Formula& f);

}  // namespace verity::oracle

#endif  // VERITY_ORACLE_H_
