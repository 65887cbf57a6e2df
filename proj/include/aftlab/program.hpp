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

// Propositional disjunctive programs with aggregate atoms in rule bodies.

#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aftlab/four_logic.hpp"
#include "aftlab/lattice.hpp"

namespace aftlab {

using Rational = boost::rational<std::int64_t>;

// One element [t1, ..., tn : c1 & ... & cm] of a set term.
struct SetTermEntry {
  std::vector<Rational> weights;       // non-empty; aggregates read weights[0]
  std::vector<std::string> condition;  // non-empty conjunction of atoms

  bool operator==(const SetTermEntry&) const = default;
};

// A multiset of entries; duplicates count separately.
struct SetTerm {
  std::vector<SetTermEntry> entries;

  bool operator==(const SetTerm&) const = default;
};

enum class AggregateFunction { kSum, kCount, kMax };
enum class Comparator { kLt, kLe, kGe, kGt, kEq };

struct AggregateAtom {
  AggregateFunction function = AggregateFunction::kSum;
  SetTerm term;
  Comparator comparator = Comparator::kGt;
  Rational bound{0};

  bool operator==(const AggregateAtom&) const = default;
};

struct BodyLiteral {
  bool negated = false;
  std::variant<std::string, AggregateAtom> payload;

  static BodyLiteral positive(std::string atom) { return {false, std::move(atom)}; }
  static BodyLiteral negative(std::string atom) { return {true, std::move(atom)}; }
  static BodyLiteral aggregate(AggregateAtom agg, bool negated = false) {
    return {negated, std::move(agg)};
  }

  bool is_aggregate() const { return std::holds_alternative<AggregateAtom>(payload); }
  const std::string& atom() const { return std::get<std::string>(payload); }
  const AggregateAtom& agg() const { return std::get<AggregateAtom>(payload); }

  bool operator==(const BodyLiteral&) const = default;
};

using Conjunction = std::vector<BodyLiteral>;

class Rule {
 public:
  // Head atoms are sorted and deduplicated; an empty head throws.
  Rule(std::vector<std::string> head, Conjunction body);
  Rule(std::vector<std::string> head, Formula body);

  const std::vector<std::string>& head() const { return head_; }
  bool has_formula_body() const { return std::holds_alternative<Formula>(body_); }
  const Conjunction& literals() const { return std::get<Conjunction>(body_); }
  const Formula& formula() const { return std::get<Formula>(body_); }

  bool has_aggregates() const;
  bool has_negated_aggregates() const;
  // The body as a Formula; throws if it contains aggregates.
  Formula body_formula() const;
  void collect_atoms(std::vector<std::string>& out) const;

  bool operator==(const Rule&) const = default;

 private:
  std::vector<std::string> head_;
  std::variant<Conjunction, Formula> body_;
};

// Aggregate atom with conditions resolved to masks, for repeated evaluation.
struct CompiledAggregate {
  AggregateFunction function;
  Comparator comparator;
  Rational bound;
  std::vector<std::pair<Rational, AtomSet>> entries;  // first weight, condition

  std::optional<Rational> value(AtomSet x) const;
  bool holds(AtomSet x) const;           // defined and comparison holds
  bool negation_holds(AtomSet x) const;  // defined and comparison fails
  // Union of the conditions that are true in x.
  AtomSet satisfied_conditions(AtomSet x) const;
};

struct CompiledRule {
  AtomSet head;
  AtomSet positive;
  AtomSet negative;
  std::vector<CompiledAggregate> positive_aggregates;
  std::vector<CompiledAggregate> negative_aggregates;
  std::optional<Formula> formula;

  // Two-valued body truth at x.
  bool body_true(const AtomUniverse& universe, AtomSet x) const;
  // Four-valued body value for an aggregate-free conjunctive body.
  TruthValue body_value(const ApproxPair& pair) const;
};

class Program {
 public:
  Program() = default;
  // The universe is the set of atoms occurring in the rules.
  explicit Program(std::vector<Rule> rules);
  // Uses the given universe, which must contain every occurring atom.
  Program(std::vector<Rule> rules, AtomUniverse universe);

  const std::vector<Rule>& rules() const { return rules_; }
  const AtomUniverse& universe() const { return universe_; }
  const std::vector<CompiledRule>& compiled() const { return compiled_; }

  bool operator==(const Program& o) const {
    return rules_ == o.rules_ && universe_ == o.universe_;
  }

 private:
  void compile();

  std::vector<Rule> rules_;
  AtomUniverse universe_;
  std::vector<CompiledRule> compiled_;
};

enum class ProgramShape { kNormal, kDisjunctivelyNormal, kGeneral };

struct Classification {
  ProgramShape shape = ProgramShape::kNormal;
  bool has_aggregates = false;
  bool has_negated_aggregates = false;

  bool is_normal() const { return shape == ProgramShape::kNormal; }
  // Normal programs are disjunctively normal too.
  bool is_disjunctively_normal() const { return shape != ProgramShape::kGeneral; }
};

Classification classify(const Program& program);
std::string to_string(ProgramShape shape);

// x(S): the weight lists of entries whose condition holds in x, in entry
// order.
std::vector<std::vector<Rational>> eval_multiset(const AtomUniverse& universe, AtomSet x,
                                                 const SetTerm& term);

struct AggregateTruth {
  bool defined = false;  // false when the function is applied outside its domain
  TruthValue positive = TruthValue::kFalse;  // value of  f(S) * w
  TruthValue negated = TruthValue::kFalse;   // value of ¬f(S) * w
};

// Sum and Count map the empty multiset to 0; Max is undefined on it.
AggregateTruth eval_aggregate(const AtomUniverse& universe, AtomSet x, const AggregateAtom& a);

bool eval_body(const AtomUniverse& universe, AtomSet x, const Rule& rule);

// Replaces each negated literal ¬r by the constant (x, y)(¬r). Requires a
// disjunctively normal aggregate-free program and a consistent pair.
Program gl_transform(const Program& program, const ApproxPair& pair);

// Aggregate elimination relative to x: rules with a false or undefined
// positive aggregate are dropped, surviving aggregates are replaced by the
// atoms of their x-true conditions. The universe is kept.
Program gz_reduct(const Program& program, AtomSet x);

}  // namespace aftlab
