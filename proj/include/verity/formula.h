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

#ifndef VERITY_FORMULA_H_
#define VERITY_FORMULA_H_

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "verity/rational.h"
#include "verity/schema.h"

namespace verity {

enum class Cmp { kLt, kLe, kEq, kGe, kGt };

std::string_view cmp_symbol(Cmp cmp);
bool compare(const Rational& lhs, Cmp cmp, const Rational& rhs);

// An attribute applied to an entity, e.g. Food(x).
struct Key {
  std::string attr;
  std::string entity;

  auto operator<=>(const Key&) const = default;
};

std::string format_key(const Key& key);

// Attr(entity)=Value
struct CatAtom {
  std::string attr;
  std::string entity;
  std::string value;

  Key key() const { return {attr, entity}; }
  bool operator==(const CatAtom&) const = default;
};

// Attr(entity) <cmp> constant
struct NumAtom {
  std::string attr;
  std::string entity;
  Cmp cmp = Cmp::kEq;
  Rational constant;

  Key key() const { return {attr, entity}; }
  bool operator==(const NumAtom& other) const {
    return attr == other.attr && entity == other.entity && cmp == other.cmp &&
           constant == other.constant;
  }
};

using Atom = std::variant<CatAtom, NumAtom>;

Key atom_key(const Atom& atom);

// Immutable propositional formula over attribute atoms. Copies share
// structure; equality is structural.
class Formula {
 public:
  enum class Kind { kTrue, kFalse, kAtom, kNot, kAnd, kOr, kImplies };

  // Defaults to `true`.
  Formula();

  Kind kind() const;
  bool is_binary() const;

  // Valid only for kAtom.
  const Atom& atom() const;
  // Operand of kNot, left operand of binary connectives.
  const Formula& left() const;
  // Right operand of binary connectives.
  const Formula& right() const;

  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);

  friend Formula truth(bool value);
  friend Formula make_atom(Atom a);
  friend Formula negate(Formula f);
  friend Formula conj(Formula a, Formula b);
  friend Formula disj(Formula a, Formula b);
  friend Formula implies(Formula a, Formula b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  static Formula binary(Kind kind, Formula a, Formula b);
  static const std::shared_ptr<const Node>& constant_node(bool value);

  std::shared_ptr<const Node> node_;
};

Formula truth(bool value);
Formula make_atom(Atom a);
Formula negate(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);

// Conjunction of `parts`, `true` when empty.
Formula conj_all(const std::vector<Formula>& parts);

// Atoms in left-to-right order, duplicates kept.
std::vector<Atom> atoms_of(const Formula& f);
std::set<Key> keys_of(const Formula& f);

// Throws kUnknownAttribute, kValueNotInDomain,
// kNumericComparisonOnCategorical or kCategoricalValueOnNumeric.
void check_atom(const Schema& schema, const Atom& a);
void check_formula(const Schema& schema, const Formula& f);

}  // namespace verity

#endif  // VERITY_FORMULA_H_
