// Copyright 2026 The aftlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aftlab/four_logic.hpp"

#include "aftlab/error.hpp"

namespace aftlab {

char to_char(TruthValue v) {
  switch (v) {
    case TruthValue::kFalse:
      return 'F';
    case TruthValue::kContradictory:
      return 'C';
    case TruthValue::kUnknown:
      return 'U';
    case TruthValue::kTrue:
      return 'T';
  }
  return '?';
}

Formula Formula::atom(std::string name) {
  Formula f;
  f.kind_ = Kind::kAtom;
  f.name_ = std::move(name);
  return f;
}

Formula Formula::constant(TruthValue value) {
  Formula f;
  f.kind_ = Kind::kConst;
  f.value_ = value;
  return f;
}

Formula Formula::negation(Formula operand) {
  Formula f;
  f.kind_ = Kind::kNot;
  f.operands_.push_back(std::move(operand));
  return f;
}

Formula Formula::conjunction(std::vector<Formula> operands) {
  Formula f;
  f.kind_ = Kind::kAnd;
  f.operands_ = std::move(operands);
  return f;
}

Formula Formula::disjunction(std::vector<Formula> operands) {
  Formula f;
  f.kind_ = Kind::kOr;
  f.operands_ = std::move(operands);
  return f;
}

Formula Formula::any_of(const std::vector<std::string>& atoms) {
  std::vector<Formula> ops;
  ops.reserve(atoms.size());
  for (const auto& a : atoms) ops.push_back(atom(a));
  return disjunction(std::move(ops));
}

void Formula::collect_atoms(std::vector<std::string>& out) const {
  if (kind_ == Kind::kAtom) out.push_back(name_);
  for (const auto& op : operands_) op.collect_atoms(out);
}

TruthValue eval(const AtomUniverse& universe, const ApproxPair& pair, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      const std::size_t i = universe.require_index(f.atom_name());
      const unsigned lo = pair.lower.contains(i) ? 1u : 0u;
      const unsigned hi = pair.upper.contains(i) ? 2u : 0u;
      return static_cast<TruthValue>(lo | hi);
    }
    case Formula::Kind::kConst:
      return f.value();
    case Formula::Kind::kNot:
      return negate(eval(universe, pair, f.operands().front()));
    case Formula::Kind::kAnd: {
      TruthValue acc = TruthValue::kTrue;
      for (const auto& op : f.operands()) acc = glb_t(acc, eval(universe, pair, op));
      return acc;
    }
    case Formula::Kind::kOr: {
      TruthValue acc = TruthValue::kFalse;
      for (const auto& op : f.operands()) acc = lub_t(acc, eval(universe, pair, op));
      return acc;
    }
  }
  return TruthValue::kFalse;
}

TruthValue eval_two(const AtomUniverse& universe, AtomSet x, const Formula& f) {
  return eval(universe, ApproxPair{x, x}, f);
}

namespace {

bool ht_sat(const AtomUniverse& universe, const ApproxPair& pair, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return pair.lower.contains(universe.require_index(f.atom_name()));
    case Formula::Kind::kConst:
      return f.value() == TruthValue::kTrue;
    case Formula::Kind::kNot:
      return eval_two(universe, pair.upper, f.operands().front()) != TruthValue::kTrue;
    case Formula::Kind::kAnd:
      for (const auto& op : f.operands()) {
        if (!ht_sat(universe, pair, op)) return false;
      }
      return true;
    case Formula::Kind::kOr:
      for (const auto& op : f.operands()) {
        if (ht_sat(universe, pair, op)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace

bool ht_satisfies(const AtomUniverse& universe, const ApproxPair& pair, const Formula& f) {
  if (!pair.is_consistent()) fail_precondition("HT satisfaction needs a consistent pair");
  return ht_sat(universe, pair, f);
}

bool ht_satisfies_rule(const AtomUniverse& universe, const ApproxPair& pair,
                       const Formula& body, AtomSet head) {
  if (head.empty()) fail_precondition("rule head must be non-empty");
  if (!pair.is_consistent()) fail_precondition("HT satisfaction needs a consistent pair");
  // (a) here-world: body fails or the head holds in x.
  const bool here = !ht_sat(universe, pair, body) || head.intersects(pair.lower);
  // (b) there-world: (y, y)(¬body ∨ head) = T.
  const bool there = eval_two(universe, pair.upper, body) != TruthValue::kTrue ||
                     head.intersects(pair.upper);
  return here && there;
}

}  // namespace aftlab
