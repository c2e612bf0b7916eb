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

#ifndef VERITY_SYNTAX_H_
#define VERITY_SYNTAX_H_

#include <string>
#include <string_view>

#include "verity/formula.h"
#include "verity/schema.h"

namespace verity {

// Line-oriented schema source:
//
//   # comment
//   attr Food : { Italian, Norwegian }
//   num Temperature
Schema parse_schema(std::string_view text);
Schema load_schema(const std::string& path);

// Precedence from loosest to tightest: "->" (right associative), "|", "&",
// "!". "&" and "|" associate to the left. Every atom is type checked
// against `schema`.
Formula parse_formula(std::string_view text, const Schema& schema);

// Canonical text: binary connectives separated by single spaces, negation
// as "!(...)", parentheses only where precedence or associativity needs
// them. parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);
std::string print_atom(const Atom& a);

}  // namespace verity

#endif  // VERITY_SYNTAX_H_
