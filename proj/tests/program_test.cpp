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

#include <gtest/gtest.h>

#include "aftlab/error.hpp"
#include "aftlab/program.hpp"
#include "aftlab/syntax.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace aftlab {
namespace {

AggregateAtom agg(AggregateFunction f, std::vector<std::pair<int, std::vector<std::string>>> entries,
                  Comparator c, Rational bound) {
  AggregateAtom a;
  a.function = f;
  a.comparator = c;
  a.bound = bound;
  for (auto& [w, cond] : entries) a.term.entries.push_back({{Rational(w)}, cond});
  return a;
}

TEST(RuleShape, HeadsAreSortedAndNonEmpty) {
  const Rule r({"q", "p", "q"}, Conjunction{});
  EXPECT_EQ(r.head(), (std::vector<std::string>{"p", "q"}));
  EXPECT_THROW(Rule({}, Conjunction{}), Error);
}

TEST(RuleShape, UniverseCollectsEveryAtom) {
  const Program p = parse_program("a | b :- not c, #sum{1:d&e} > 0.\nf :- (g | not h).");
  EXPECT_EQ(p.universe().names(),
            (std::vector<std::string>{"a", "b", "c", "d", "e", "f", "g", "h"}));
}

TEST(RuleShape, ExplicitUniverseMustCoverTheRules) {
  std::vector<Rule> rules{Rule({"p"}, Conjunction{BodyLiteral::positive("q")})};
  EXPECT_NO_THROW(Program(rules, AtomUniverse({"p", "q", "r"})));
  EXPECT_THROW(Program(rules, AtomUniverse({"p"})), Error);
}

TEST(Classification, Shapes) {
  EXPECT_EQ(classify(parse_program("p :- not q.")).shape, ProgramShape::kNormal);
  EXPECT_EQ(classify(parse_program("p | q :- not q.")).shape, ProgramShape::kDisjunctivelyNormal);
  EXPECT_EQ(classify(parse_program("p :- (q | r).")).shape, ProgramShape::kGeneral);
  const auto c = classify(parse_program("p :- not #count{1:q} > 0."));
  EXPECT_TRUE(c.has_aggregates);
  EXPECT_TRUE(c.has_negated_aggregates);
  EXPECT_TRUE(c.is_normal());
  EXPECT_FALSE(classify(parse_program("p :- #count{1:q} > 0.")).has_negated_aggregates);
  EXPECT_EQ(to_string(ProgramShape::kDisjunctivelyNormal), "disjunctively_normal");
}

TEST(Aggregates, SumCountMax) {
  const AtomUniverse u({"p", "q"});
  const AtomSet both = u.set_of({"p", "q"});
  const auto sum = agg(AggregateFunction::kSum, {{1, {"p"}}, {2, {"q"}}}, Comparator::kEq, 3);
  EXPECT_EQ(eval_aggregate(u, both, sum).positive, TruthValue::kTrue);
  EXPECT_EQ(eval_aggregate(u, u.set_of({"p"}), sum).positive, TruthValue::kFalse);
  EXPECT_EQ(eval_aggregate(u, u.set_of({"p"}), sum).negated, TruthValue::kTrue);

  const auto count = agg(AggregateFunction::kCount, {{5, {"p"}}, {5, {"p"}}}, Comparator::kGe, 2);
  EXPECT_EQ(eval_aggregate(u, u.set_of({"p"}), count).positive, TruthValue::kTrue);

  const auto max = agg(AggregateFunction::kMax, {{1, {"p"}}, {-2, {"q"}}}, Comparator::kLt, 0);
  const auto undefined = eval_aggregate(u, AtomSet{}, max);
  EXPECT_FALSE(undefined.defined);
  EXPECT_EQ(undefined.positive, TruthValue::kFalse);
  EXPECT_EQ(undefined.negated, TruthValue::kFalse);
  EXPECT_EQ(eval_aggregate(u, u.set_of({"q"}), max).positive, TruthValue::kTrue);
  EXPECT_EQ(eval_aggregate(u, both, max).positive, TruthValue::kFalse);
}

TEST(Aggregates, EmptySumIsZero) {
  const AtomUniverse u({"p", "q"});
  const auto below_one = agg(AggregateFunction::kSum, {{1, {"p"}}, {1, {"q"}}}, Comparator::kLt, 1);
  const auto below_zero = agg(AggregateFunction::kSum, {{1, {"p"}}, {1, {"q"}}}, Comparator::kLt, 0);
  EXPECT_EQ(eval_aggregate(u, AtomSet{}, below_one).positive, TruthValue::kTrue);
  EXPECT_EQ(eval_aggregate(u, AtomSet{}, below_zero).positive, TruthValue::kFalse);
}

TEST(Aggregates, RationalWeights) {
  const Program p = parse_program("p :- #sum{1/3:q; 2/3:r} = 1.");
  const auto& a = p.rules()[0].literals()[0].agg();
  const auto& u = p.universe();
  EXPECT_EQ(eval_aggregate(u, u.set_of({"q", "r"}), a).positive, TruthValue::kTrue);
  EXPECT_EQ(eval_aggregate(u, u.set_of({"q"}), a).positive, TruthValue::kFalse);
}

TEST(Aggregates, MultisetEvaluationKeepsDuplicates) {
  const AtomUniverse u({"p", "q"});
  SetTerm t;
  t.entries = {{{Rational(1), Rational(7)}, {"p"}}, {{Rational(1), Rational(7)}, {"p"}},
               {{Rational(2)}, {"p", "q"}}};
  EXPECT_EQ(eval_multiset(u, u.set_of({"p"}), t).size(), 2u);
  EXPECT_EQ(eval_multiset(u, u.set_of({"p", "q"}), t).size(), 3u);
  EXPECT_TRUE(eval_multiset(u, AtomSet{}, t).empty());
}

TEST(Bodies, TwoValuedTruthMatchesOracle) {
  for (const auto& p : fixtures::sample_programs()) {
    const auto& u = p.universe();
    for (std::uint32_t x = 0; x <= u.full().bits(); ++x) {
      const auto ox = oracle::from_mask(u, AtomSet(x));
      for (std::size_t i = 0; i < p.rules().size(); ++i) {
        const bool want = oracle::body_true(p.rules()[i], ox);
        ASSERT_EQ(eval_body(u, AtomSet(x), p.rules()[i]), want) << format_program(p);
        ASSERT_EQ(p.compiled()[i].body_true(u, AtomSet(x)), want) << format_program(p);
      }
    }
  }
}

TEST(Bodies, FourValuedBodyMatchesFormulaEvaluation) {
  for (const auto& p : aftlab::random_programs(60, 3)) {
    if (classify(p).has_aggregates) continue;
    const auto& u = p.universe();
    for (std::uint32_t x = 0; x <= u.full().bits(); ++x) {
      for (std::uint32_t y = 0; y <= u.full().bits(); ++y) {
        const ApproxPair pair{AtomSet(x), AtomSet(y)};
        for (std::size_t i = 0; i < p.rules().size(); ++i) {
          const auto& rule = p.rules()[i];
          EXPECT_EQ(p.compiled()[i].body_value(pair), eval(u, pair, rule.body_formula()));
          const oracle::Pair op{oracle::from_mask(u, pair.lower), oracle::from_mask(u, pair.upper)};
          EXPECT_EQ(oracle::from_library(p.compiled()[i].body_value(pair)),
                    oracle::body_value(op, rule));
        }
      }
    }
  }
}

TEST(Bodies, BodyFormulaRejectsAggregates) {
  const Program p = parse_program("p :- #count{1:q} > 0.");
  EXPECT_THROW(p.rules()[0].body_formula(), Error);
}

TEST(Reducts, GzReductOfTheConditionExample) {
  const Program p = fixtures::corpus("gz_reduct");
  const auto& u = p.universe();
  EXPECT_EQ(format_program(gz_reduct(p, u.set_of({"p", "q"}))), "p :- p, q.\np :- q.\nq :- .\n");
  EXPECT_EQ(gz_reduct(p, u.set_of({"p", "q"})).universe(), u);
}

TEST(Reducts, GzReductOfTheSelfSupportExample) {
  const Program p = fixtures::corpus("gz_no_answer_set");
  const auto& u = p.universe();
  EXPECT_EQ(format_program(gz_reduct(p, u.set_of({"p"}))), "p :- p.\n");
  EXPECT_EQ(format_program(gz_reduct(p, AtomSet{})), "p :- .\n");
}

TEST(Reducts, GzReductKeepsNegatedAtomsAndRejectsNegatedAggregates) {
  const Program p = parse_program("p :- not q, #count{1:r} > 0.\ns :- not p.");
  const auto& u = p.universe();
  EXPECT_EQ(format_program(gz_reduct(p, u.set_of({"r"}))), "p :- not q, r.\ns :- not p.\n");
  EXPECT_EQ(format_program(gz_reduct(p, AtomSet{})), "s :- not p.\n");
  EXPECT_THROW(gz_reduct(parse_program("p :- not #count{1:r} > 0."), AtomSet{}), Error);
  EXPECT_THROW(gz_reduct(parse_program("p :- (q | r)."), AtomSet{}), Error);
}

TEST(Reducts, GlTransformFreezesNegation) {
  const Program p = parse_program("p | q :- not q, r.\nr :- .");
  const auto& u = p.universe();
  const Program t = gl_transform(p, {AtomSet{}, u.set_of({"q"})});
  EXPECT_EQ(format_program(t), "p | q :- #unknown & r.\nr :- .\n");
  const Program f = gl_transform(p, {u.set_of({"q"}), u.set_of({"q"})});
  EXPECT_EQ(format_program(f), "p | q :- #false & r.\nr :- .\n");
  EXPECT_THROW(gl_transform(p, {u.set_of({"q"}), AtomSet{}}), Error);
  EXPECT_THROW(gl_transform(parse_program("p :- #count{1:r} > 0."), {}), Error);
}

TEST(Compilation, MasksMatchTheRule) {
  const Program p = parse_program("a | b :- c, not d, #sum{1:e} > 0, not #max{2:f} < 1.");
  const auto& u = p.universe();
  const auto& c = p.compiled().front();
  EXPECT_EQ(c.head, u.set_of({"a", "b"}));
  EXPECT_EQ(c.positive, u.set_of({"c"}));
  EXPECT_EQ(c.negative, u.set_of({"d"}));
  ASSERT_EQ(c.positive_aggregates.size(), 1u);
  ASSERT_EQ(c.negative_aggregates.size(), 1u);
  EXPECT_TRUE(c.positive_aggregates[0].holds(u.set_of({"e"})));
  EXPECT_EQ(c.positive_aggregates[0].satisfied_conditions(u.full()), u.set_of({"e"}));
  EXPECT_FALSE(c.negative_aggregates[0].negation_holds(AtomSet{}));
  EXPECT_TRUE(c.negative_aggregates[0].negation_holds(u.set_of({"f"})));
}

}  // namespace
}  // namespace aftlab
