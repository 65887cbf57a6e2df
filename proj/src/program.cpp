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

#include "aftlab/program.hpp"

#include <algorithm>

#include "aftlab/error.hpp"

namespace aftlab {

namespace {

bool compare(const Rational& value, Comparator cmp, const Rational& bound) {
  switch (cmp) {
    case Comparator::kLt:
      return value < bound;
    case Comparator::kLe:
      return value <= bound;
    case Comparator::kGe:
      return value >= bound;
    case Comparator::kGt:
      return value > bound;
    case Comparator::kEq:
      return value == bound;
  }
  return false;
}

std::optional<Rational> apply_function(AggregateFunction fn,
                                       const std::vector<Rational>& firsts) {
  switch (fn) {
    case AggregateFunction::kSum: {
      Rational sum{0};
      for (const auto& w : firsts) sum += w;
      return sum;
    }
    case AggregateFunction::kCount:
      return Rational(static_cast<std::int64_t>(firsts.size()));
    case AggregateFunction::kMax:
      if (firsts.empty()) return std::nullopt;
      return *std::max_element(firsts.begin(), firsts.end());
  }
  return std::nullopt;
}

void validate_aggregate(const AggregateAtom& agg) {
  for (const auto& e : agg.term.entries) {
    if (e.weights.empty()) fail_precondition("set-term entry without weights");
    if (e.condition.empty()) fail_precondition("set-term entry without condition");
  }
}

CompiledAggregate compile_aggregate(const AtomUniverse& u, const AggregateAtom& agg) {
  CompiledAggregate c{agg.function, agg.comparator, agg.bound, {}};
  for (const auto& e : agg.term.entries) {
    c.entries.emplace_back(e.weights.front(), u.set_of(e.condition));
  }
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rule

Rule::Rule(std::vector<std::string> head, Conjunction body)
    : head_(std::move(head)), body_(std::move(body)) {
  std::sort(head_.begin(), head_.end());
  head_.erase(std::unique(head_.begin(), head_.end()), head_.end());
  if (head_.empty()) fail_precondition("rule head must be a non-empty disjunction");
  for (const auto& lit : literals()) {
    if (lit.is_aggregate()) validate_aggregate(lit.agg());
  }
}

Rule::Rule(std::vector<std::string> head, Formula body)
    : head_(std::move(head)), body_(std::move(body)) {
  std::sort(head_.begin(), head_.end());
  head_.erase(std::unique(head_.begin(), head_.end()), head_.end());
  if (head_.empty()) fail_precondition("rule head must be a non-empty disjunction");
}

bool Rule::has_aggregates() const {
  if (has_formula_body()) return false;
  return std::any_of(literals().begin(), literals().end(),
                     [](const BodyLiteral& l) { return l.is_aggregate(); });
}

bool Rule::has_negated_aggregates() const {
  if (has_formula_body()) return false;
  return std::any_of(literals().begin(), literals().end(), [](const BodyLiteral& l) {
    return l.is_aggregate() && l.negated;
  });
}

Formula Rule::body_formula() const {
  if (has_formula_body()) return formula();
  std::vector<Formula> ops;
  for (const auto& lit : literals()) {
    if (lit.is_aggregate()) fail_precondition("aggregate body has no formula form");
    Formula a = Formula::atom(lit.atom());
    ops.push_back(lit.negated ? Formula::negation(std::move(a)) : std::move(a));
  }
  return Formula::conjunction(std::move(ops));
}

void Rule::collect_atoms(std::vector<std::string>& out) const {
  out.insert(out.end(), head_.begin(), head_.end());
  if (has_formula_body()) {
    formula().collect_atoms(out);
    return;
  }
  for (const auto& lit : literals()) {
    if (!lit.is_aggregate()) {
      out.push_back(lit.atom());
      continue;
    }
    for (const auto& e : lit.agg().term.entries) {
      out.insert(out.end(), e.condition.begin(), e.condition.end());
    }
  }
}

// ---------------------------------------------------------------------------
// Compiled evaluation

std::optional<Rational> CompiledAggregate::value(AtomSet x) const {
  std::vector<Rational> firsts;
  for (const auto& [w, cond] : entries) {
    if (cond.subset_of(x)) firsts.push_back(w);
  }
  return apply_function(function, firsts);
}

bool CompiledAggregate::holds(AtomSet x) const {
  auto v = value(x);
  return v && compare(*v, comparator, bound);
}

bool CompiledAggregate::negation_holds(AtomSet x) const {
  auto v = value(x);
  return v && !compare(*v, comparator, bound);
}

AtomSet CompiledAggregate::satisfied_conditions(AtomSet x) const {
  AtomSet out;
  for (const auto& entry : entries) {
    if (entry.second.subset_of(x)) out |= entry.second;
  }
  return out;
}

bool CompiledRule::body_true(const AtomUniverse& universe, AtomSet x) const {
  if (formula) return eval_two(universe, x, *formula) == TruthValue::kTrue;
  if (!positive.subset_of(x) || negative.intersects(x)) return false;
  for (const auto& a : positive_aggregates) {
    if (!a.holds(x)) return false;
  }
  for (const auto& a : negative_aggregates) {
    if (!a.negation_holds(x)) return false;
  }
  return true;
}

TruthValue CompiledRule::body_value(const ApproxPair& pair) const {
  if (formula || !positive_aggregates.empty() || !negative_aggregates.empty()) {
    fail_precondition("four-valued body value needs an aggregate-free conjunctive body");
  }
  const bool lo = positive.subset_of(pair.lower) && !negative.intersects(pair.upper);
  const bool hi = positive.subset_of(pair.upper) && !negative.intersects(pair.lower);
  return static_cast<TruthValue>((lo ? 1u : 0u) | (hi ? 2u : 0u));
}

// ---------------------------------------------------------------------------
// Program

Program::Program(std::vector<Rule> rules) : rules_(std::move(rules)) {
  std::vector<std::string> atoms;
  for (const auto& r : rules_) r.collect_atoms(atoms);
  universe_ = AtomUniverse(std::move(atoms));
  compile();
}

Program::Program(std::vector<Rule> rules, AtomUniverse universe)
    : rules_(std::move(rules)), universe_(std::move(universe)) {
  std::vector<std::string> atoms;
  for (const auto& r : rules_) r.collect_atoms(atoms);
  for (const auto& a : atoms) {
    if (!universe_.index(a)) fail_precondition("atom '" + a + "' missing from universe");
  }
  compile();
}

void Program::compile() {
  compiled_.clear();
  compiled_.reserve(rules_.size());
  for (const auto& r : rules_) {
    CompiledRule c;
    c.head = universe_.set_of(r.head());
    if (r.has_formula_body()) {
      c.formula = r.formula();
    } else {
      for (const auto& lit : r.literals()) {
        if (lit.is_aggregate()) {
          auto agg = compile_aggregate(universe_, lit.agg());
          (lit.negated ? c.negative_aggregates : c.positive_aggregates).push_back(std::move(agg));
        } else {
          const AtomSet a = AtomSet::singleton(universe_.require_index(lit.atom()));
          (lit.negated ? c.negative : c.positive) |= a;
        }
      }
    }
    compiled_.push_back(std::move(c));
  }
}

std::string to_string(ProgramShape shape) {
  switch (shape) {
    case ProgramShape::kNormal:
      return "normal";
    case ProgramShape::kDisjunctivelyNormal:
      return "disjunctively_normal";
    case ProgramShape::kGeneral:
      return "general";
  }
  return "general";
}

Classification classify(const Program& program) {
  Classification c;
  for (const auto& r : program.rules()) {
    if (r.has_formula_body()) {
      c.shape = ProgramShape::kGeneral;
    } else if (r.head().size() > 1 && c.shape == ProgramShape::kNormal) {
      c.shape = ProgramShape::kDisjunctivelyNormal;
    }
    c.has_aggregates = c.has_aggregates || r.has_aggregates();
    c.has_negated_aggregates = c.has_negated_aggregates || r.has_negated_aggregates();
  }
  return c;
}

// ---------------------------------------------------------------------------
// Aggregates and bodies

std::vector<std::vector<Rational>> eval_multiset(const AtomUniverse& universe, AtomSet x,
                                                 const SetTerm& term) {
  std::vector<std::vector<Rational>> out;
  for (const auto& e : term.entries) {
    if (universe.set_of(e.condition).subset_of(x)) out.push_back(e.weights);
  }
  return out;
}

AggregateTruth eval_aggregate(const AtomUniverse& universe, AtomSet x, const AggregateAtom& a) {
  std::vector<Rational> firsts;
  for (const auto& weights : eval_multiset(universe, x, a.term)) {
    firsts.push_back(weights.front());
  }
  AggregateTruth out;
  const auto value = apply_function(a.function, firsts);
  if (!value) return out;
  out.defined = true;
  const bool holds = compare(*value, a.comparator, a.bound);
  out.positive = holds ? TruthValue::kTrue : TruthValue::kFalse;
  out.negated = holds ? TruthValue::kFalse : TruthValue::kTrue;
  return out;
}

bool eval_body(const AtomUniverse& universe, AtomSet x, const Rule& rule) {
  if (rule.has_formula_body()) {
    return eval_two(universe, x, rule.formula()) == TruthValue::kTrue;
  }
  for (const auto& lit : rule.literals()) {
    bool ok;
    if (lit.is_aggregate()) {
      const auto t = eval_aggregate(universe, x, lit.agg());
      ok = (lit.negated ? t.negated : t.positive) == TruthValue::kTrue;
    } else {
      ok = x.contains(universe.require_index(lit.atom())) != lit.negated;
    }
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Transformations

Program gl_transform(const Program& program, const ApproxPair& pair) {
  const auto cls = classify(program);
  if (!cls.is_disjunctively_normal() || cls.has_aggregates) {
    fail_precondition("GL-transformation needs a disjunctively normal aggregate-free program");
  }
  if (!pair.is_consistent()) fail_precondition("GL-transformation needs a consistent pair");
  const auto& u = program.universe();
  std::vector<Rule> out;
  out.reserve(program.rules().size());
  for (const auto& r : program.rules()) {
    const bool has_negation = std::any_of(r.literals().begin(), r.literals().end(),
                                          [](const BodyLiteral& l) { return l.negated; });
    if (!has_negation) {
      out.push_back(r);
      continue;
    }
    std::vector<Formula> ops;
    for (const auto& lit : r.literals()) {
      if (lit.negated) {
        ops.push_back(Formula::constant(
            eval(u, pair, Formula::negation(Formula::atom(lit.atom())))));
      } else {
        ops.push_back(Formula::atom(lit.atom()));
      }
    }
    Formula body = ops.size() == 1 ? std::move(ops.front())
                                   : Formula::conjunction(std::move(ops));
    out.emplace_back(r.head(), std::move(body));
  }
  return Program(std::move(out), u);
}

Program gz_reduct(const Program& program, AtomSet x) {
  const auto cls = classify(program);
  if (!cls.is_disjunctively_normal()) {
    fail_precondition("GZ-reduct needs a disjunctively normal program");
  }
  if (cls.has_negated_aggregates) {
    fail_precondition("GZ-reduct is undefined for negated aggregate atoms");
  }
  const auto& u = program.universe();
  std::vector<Rule> out;
  for (const auto& r : program.rules()) {
    Conjunction body;
    bool keep = true;
    auto add_positive = [&](const std::string& atom) {
      const bool seen = std::any_of(body.begin(), body.end(), [&](const BodyLiteral& l) {
        return !l.negated && l.atom() == atom;
      });
      if (!seen) body.push_back(BodyLiteral::positive(atom));
    };
    for (const auto& lit : r.literals()) {
      if (!lit.is_aggregate()) {
        if (lit.negated) {
          body.push_back(lit);
        } else {
          add_positive(lit.atom());
        }
        continue;
      }
      if (eval_aggregate(u, x, lit.agg()).positive != TruthValue::kTrue) {
        keep = false;
        break;
      }
      AtomSet replaced;
      for (const auto& e : lit.agg().term.entries) {
        const AtomSet cond = u.set_of(e.condition);
        if (cond.subset_of(x)) replaced |= cond;
      }
      for (const auto& atom : u.names_of(replaced)) add_positive(atom);
    }
    if (keep) out.emplace_back(r.head(), std::move(body));
  }
  return Program(std::move(out), u);
}

}  // namespace aftlab
