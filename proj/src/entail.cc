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

#include "verity/entail.h"

#include <algorithm>
#include <map>
#include <string>

#include "verity/error.h"

namespace verity {
namespace {

// A key after abstraction: ranges over `radix` indices, which stand for
// domain values (categorical) or sample points (numeric).
struct Slot {
  Key key;
  bool numeric = false;
  std::vector<std::string> values;
  std::vector<Rational> samples;

  std::size_t radix() const {
    return numeric ? samples.size() : values.size();
  }
};

struct Node {
  Formula::Kind kind = Formula::Kind::kTrue;
  int left = -1;
  int right = -1;
  int slot = -1;
  // Truth value of an atom for each index of its slot.
  std::vector<char> table;
};

class Problem {
 public:
  Problem(const Schema& schema, const Formula& f) {
    check_formula(schema, f);
    std::map<Key, std::vector<Rational>> constants;
    for (const Atom& a : atoms_of(f)) {
      if (const auto* num = std::get_if<NumAtom>(&a)) {
        constants[num->key()].push_back(num->constant);
      }
    }
    for (const Key& key : keys_of(f)) {
      Slot slot;
      slot.key = key;
      if (schema.is_numeric(key.attr)) {
        slot.numeric = true;
        slot.samples = numeric_sample_points(constants[key]);
      } else {
        slot.values = schema.domain(key.attr);
      }
      slot_index_.emplace(key, slots_.size());
      slots_.push_back(std::move(slot));
    }
    root_ = compile(f);
  }

  // Product of slot radices, saturating just above `limit`.
  std::uint64_t assignment_count(std::uint64_t limit) const {
    std::uint64_t total = 1;
    for (const Slot& s : slots_) {
      total *= s.radix();
      if (total > limit) return limit + 1;
    }
    return total;
  }

  // Runs through every assignment; returns the first satisfying one.
  std::optional<Model> search() const {
    std::vector<std::size_t> assignment(slots_.size(), 0);
    while (true) {
      if (holds(root_, assignment)) return to_model(assignment);
      std::size_t i = 0;
      for (; i < slots_.size(); ++i) {
        if (++assignment[i] < slots_[i].radix()) break;
        assignment[i] = 0;
      }
      if (i == slots_.size()) return std::nullopt;
    }
  }

 private:
  int compile(const Formula& f) {
    Node node;
    node.kind = f.kind();
    switch (f.kind()) {
      case Formula::Kind::kTrue:
      case Formula::Kind::kFalse:
        break;
      case Formula::Kind::kAtom:
        compile_atom(f.atom(), &node);
        break;
      case Formula::Kind::kNot:
        node.left = compile(f.left());
        break;
      default:
        node.left = compile(f.left());
        node.right = compile(f.right());
    }
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  }

  void compile_atom(const Atom& a, Node* node) const {
    std::size_t index = slot_index_.at(atom_key(a));
    const Slot& slot = slots_[index];
    node->slot = static_cast<int>(index);
    node->table.resize(slot.radix());
    if (const auto* cat = std::get_if<CatAtom>(&a)) {
      for (std::size_t v = 0; v < slot.values.size(); ++v) {
        node->table[v] = slot.values[v] == cat->value;
      }
      return;
    }
    const auto& num = std::get<NumAtom>(a);
    for (std::size_t v = 0; v < slot.samples.size(); ++v) {
      node->table[v] = compare(slot.samples[v], num.cmp, num.constant);
    }
  }

  bool holds(int index, const std::vector<std::size_t>& assignment) const {
    const Node& n = nodes_[index];
    switch (n.kind) {
      case Formula::Kind::kTrue: return true;
      case Formula::Kind::kFalse: return false;
      case Formula::Kind::kAtom: return n.table[assignment[n.slot]] != 0;
      case Formula::Kind::kNot: return !holds(n.left, assignment);
      case Formula::Kind::kAnd:
        return holds(n.left, assignment) && holds(n.right, assignment);
      case Formula::Kind::kOr:
        return holds(n.left, assignment) || holds(n.right, assignment);
      case Formula::Kind::kImplies:
        return !holds(n.left, assignment) || holds(n.right, assignment);
    }
    return false;
  }

  Model to_model(const std::vector<std::size_t>& assignment) const {
    Model m;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      const Slot& s = slots_[i];
      if (s.numeric) {
        m.set(s.key, s.samples[assignment[i]]);
      } else {
        m.set(s.key, s.values[assignment[i]]);
      }
    }
    return m;
  }

  std::vector<Slot> slots_;
  std::map<Key, std::size_t> slot_index_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace

std::vector<Rational> numeric_sample_points(std::vector<Rational> constants) {
  std::sort(constants.begin(), constants.end());
  constants.erase(std::unique(constants.begin(), constants.end()),
                  constants.end());
  if (constants.empty()) return {Rational(0)};
  std::vector<Rational> points;
  points.reserve(2 * constants.size() + 1);
  points.push_back(constants.front() - 1);
  for (std::size_t i = 0; i < constants.size(); ++i) {
    if (i > 0) points.push_back((constants[i - 1] + constants[i]) / 2);
    points.push_back(constants[i]);
  }
  points.push_back(constants.back() + 1);
  return points;
}

EntailmentResult satisfiable(const Schema& schema, const Formula& f,
                             const EntailOptions& options) {
  Problem problem(schema, f);
  if (problem.assignment_count(options.max_assignments) >
      options.max_assignments) {
    throw Error(ErrorCode::kResourceLimit,
                "more than " + std::to_string(options.max_assignments) +
                    " assignments to enumerate");
  }
  EntailmentResult result;
  result.witness = problem.search();
  result.holds = result.witness.has_value();
  return result;
}

EntailmentResult entails(const Schema& schema, const Formula& a,
                         const Formula& b, const EntailOptions& options) {
  EntailmentResult counter = satisfiable(schema, conj(a, negate(b)), options);
  EntailmentResult result;
  result.holds = !counter.holds;
  result.witness = std::move(counter.witness);
  return result;
}

bool is_tautology(const Schema& schema, const Formula& f,
                  const EntailOptions& options) {
  return !satisfiable(schema, negate(f), options).holds;
}

bool is_contradiction(const Schema& schema, const Formula& f,
                      const EntailOptions& options) {
  return !satisfiable(schema, f, options).holds;
}

}  // namespace verity
