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

#include "verity/formula.h"

#include <algorithm>
#include <utility>

#include "verity/error.h"

namespace verity {

struct Formula::Node {
  Kind kind = Kind::kTrue;
  Atom atom;
  Formula left{nullptr};
  Formula right{nullptr};
  std::size_t depth = 1;
};

std::string_view cmp_symbol(Cmp cmp) {
  switch (cmp) {
    case Cmp::kLt: return "<";
    case Cmp::kLe: return "<=";
    case Cmp::kEq: return "=";
    case Cmp::kGe: return ">=";
    case Cmp::kGt: return ">";
  }
  return "?";
}

bool compare(const Rational& lhs, Cmp cmp, const Rational& rhs) {
  switch (cmp) {
    case Cmp::kLt: return lhs < rhs;
    case Cmp::kLe: return lhs <= rhs;
    case Cmp::kEq: return lhs == rhs;
    case Cmp::kGe: return lhs >= rhs;
    case Cmp::kGt: return lhs > rhs;
  }
  return false;
}

std::string format_key(const Key& key) {
  return key.attr + "(" + key.entity + ")";
}

Key atom_key(const Atom& a) {
  return std::visit([](const auto& x) { return x.key(); }, a);
}

const std::shared_ptr<const Formula::Node>& Formula::constant_node(
    bool value) {
  static const std::shared_ptr<const Node> kTrueNode =
      std::make_shared<Node>();
  static const std::shared_ptr<const Node> kFalseNode = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kFalse;
    return node;
  }();
  return value ? kTrueNode : kFalseNode;
}

Formula::Formula() : node_(constant_node(true)) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  return kind() == Kind::kAnd || kind() == Kind::kOr ||
         kind() == Kind::kImplies;
}

const Atom& Formula::atom() const { return node_->atom; }
const Formula& Formula::left() const { return node_->left; }
const Formula& Formula::right() const { return node_->right; }
std::size_t Formula::depth() const { return node_->depth; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
      return true;
    case Formula::Kind::kAtom:
      return a.atom() == b.atom();
    case Formula::Kind::kNot:
      return a.left() == b.left();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

Formula truth(bool value) { return Formula(Formula::constant_node(value)); }

Formula make_atom(Atom a) {
  auto node = std::make_shared<Formula::Node>();
  node->kind = Formula::Kind::kAtom;
  node->atom = std::move(a);
  return Formula(std::move(node));
}

Formula negate(Formula f) {
  auto node = std::make_shared<Formula::Node>();
  node->kind = Formula::Kind::kNot;
  node->depth = f.depth() + 1;
  node->left = std::move(f);
  return Formula(std::move(node));
}

Formula Formula::binary(Kind kind, Formula a, Formula b) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->depth = std::max(a.depth(), b.depth()) + 1;
  node->left = std::move(a);
  node->right = std::move(b);
  return Formula(std::move(node));
}

Formula conj(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::kAnd, std::move(a), std::move(b));
}

Formula disj(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::kOr, std::move(a), std::move(b));
}

Formula implies(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::kImplies, std::move(a), std::move(b));
}

Formula conj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) return truth(true);
  Formula result = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) result = conj(result, parts[i]);
  return result;
}

namespace {

void collect_atoms(const Formula& f, std::vector<Atom>* out) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
      return;
    case Formula::Kind::kAtom:
      out->push_back(f.atom());
      return;
    case Formula::Kind::kNot:
      collect_atoms(f.left(), out);
      return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

}  // namespace

std::vector<Atom> atoms_of(const Formula& f) {
  std::vector<Atom> out;
  collect_atoms(f, &out);
  return out;
}

std::set<Key> keys_of(const Formula& f) {
  std::set<Key> keys;
  for (const Atom& a : atoms_of(f)) keys.insert(atom_key(a));
  return keys;
}

void check_atom(const Schema& schema, const Atom& a) {
  if (const auto* cat = std::get_if<CatAtom>(&a)) {
    if (schema.is_numeric(cat->attr)) {
      throw Error(ErrorCode::kCategoricalValueOnNumeric,
                  "numeric attribute '" + cat->attr +
                      "' compared with value '" + cat->value + "'");
    }
    if (!schema.is_categorical(cat->attr)) {
      throw Error(ErrorCode::kUnknownAttribute,
                  "unknown attribute '" + cat->attr + "'");
    }
    if (!schema.value_index(cat->attr, cat->value)) {
      throw Error(ErrorCode::kValueNotInDomain,
                  "value '" + cat->value + "' is not in the domain of '" +
                      cat->attr + "'");
    }
    return;
  }
  const auto& num = std::get<NumAtom>(a);
  if (schema.is_categorical(num.attr)) {
    throw Error(ErrorCode::kNumericComparisonOnCategorical,
                "numeric comparison on categorical attribute '" + num.attr +
                    "'");
  }
  if (!schema.is_numeric(num.attr)) {
    throw Error(ErrorCode::kUnknownAttribute,
                "unknown attribute '" + num.attr + "'");
  }
}

void check_formula(const Schema& schema, const Formula& f) {
  for (const Atom& a : atoms_of(f)) check_atom(schema, a);
}

}  // namespace verity
