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
#include "aftlab/generator.hpp"
#include "aftlab/syntax.hpp"
#include "fixtures.hpp"

namespace aftlab {
namespace {

std::string parse_error_of(std::string_view text) {
  try {
    parse_program(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    return e.what();
  }
  ADD_FAILURE() << "no error for: " << text;
  return {};
}

TEST(Parse, LiteralBodies) {
  const Program p = parse_program("p | q :- not q, r.\nr.");
  ASSERT_EQ(p.rules().size(), 2u);
  const Rule& r = p.rules()[0];
  EXPECT_EQ(r.head(), (std::vector<std::string>{"p", "q"}));
  ASSERT_EQ(r.literals().size(), 2u);
  EXPECT_EQ(r.literals()[0], BodyLiteral::negative("q"));
  EXPECT_EQ(r.literals()[1], BodyLiteral::positive("r"));
  EXPECT_TRUE(p.rules()[1].literals().empty());
}

TEST(Parse, EmptyBodyWithArrow) {
  const Program p = parse_program("q :- .");
  ASSERT_EQ(p.rules().size(), 1u);
  EXPECT_TRUE(p.rules()[0].literals().empty());
  EXPECT_EQ(format_program(p), "q :- .\n");
}

TEST(Parse, Aggregates) {
  const Program p = parse_program("p :- not #max{1/2, 4: q & r; -3: s} <= 0.25.");
  const BodyLiteral& l = p.rules()[0].literals()[0];
  ASSERT_TRUE(l.is_aggregate());
  EXPECT_TRUE(l.negated);
  const AggregateAtom& a = l.agg();
  EXPECT_EQ(a.function, AggregateFunction::kMax);
  EXPECT_EQ(a.comparator, Comparator::kLe);
  EXPECT_EQ(a.bound, Rational(1, 4));
  ASSERT_EQ(a.term.entries.size(), 2u);
  EXPECT_EQ(a.term.entries[0].weights, (std::vector<Rational>{Rational(1, 2), Rational(4)}));
  EXPECT_EQ(a.term.entries[0].condition, (std::vector<std::string>{"q", "r"}));
  EXPECT_EQ(a.term.entries[1].weights, (std::vector<Rational>{Rational(-3)}));
}

TEST(Parse, ComparatorsAndFunctions) {
  const char* texts[] = {"<", "<=", ">", ">=", "="};
  const Comparator cmps[] = {Comparator::kLt, Comparator::kLe, Comparator::kGt, Comparator::kGe,
                             Comparator::kEq};
  for (int i = 0; i < 5; ++i) {
    const Program p = parse_program(std::string("p :- #count{1:q} ") + texts[i] + " 1.");
    EXPECT_EQ(p.rules()[0].literals()[0].agg().comparator, cmps[i]);
    EXPECT_EQ(p.rules()[0].literals()[0].agg().function, AggregateFunction::kCount);
  }
  EXPECT_EQ(parse_program("p :- #sum{1:q} > 0.").rules()[0].literals()[0].agg().function,
            AggregateFunction::kSum);
}

TEST(Parse, FormulaBodies) {
  const Program p = parse_program("p :- not (q & r) | #true.");
  ASSERT_TRUE(p.rules()[0].has_formula_body());
  const Formula& f = p.rules()[0].formula();
  EXPECT_EQ(f.kind(), Formula::Kind::kOr);
  EXPECT_EQ(f.operands()[0].kind(), Formula::Kind::kNot);
  EXPECT_EQ(f.operands()[1].value(), TruthValue::kTrue);
  EXPECT_EQ(format_rule(p.rules()[0]), "p :- not (q & r) | #true.");
}

TEST(Parse, PrecedenceAndAssociativity) {
  const Program p = parse_program("p :- q | r & s.");
  const Formula& f = p.rules()[0].formula();
  EXPECT_EQ(f.kind(), Formula::Kind::kOr);
  EXPECT_EQ(f.operands()[1].kind(), Formula::Kind::kAnd);
  EXPECT_EQ(format_formula(f), "q | r & s");
}

TEST(Parse, TruthConstants) {
  const Program p = parse_program("p :- #false | #unknown | #contradictory.");
  const auto& ops = p.rules()[0].formula().operands();
  ASSERT_EQ(ops.size(), 3u);
  EXPECT_EQ(ops[0].value(), TruthValue::kFalse);
  EXPECT_EQ(ops[1].value(), TruthValue::kUnknown);
  EXPECT_EQ(ops[2].value(), TruthValue::kContradictory);
}

TEST(Parse, CommentsAndWhitespace) {
  const Program p = parse_program("% leading comment\n  p :- q. % trailing\n\nq.\n");
  EXPECT_EQ(format_program(p), "p :- q.\nq :- .\n");
}

TEST(Parse, ErrorsCarryPositions) {
  EXPECT_EQ(parse_error_of("p :- q"), "1:7: expected ',' or '.' in rule body");
  EXPECT_EQ(parse_error_of("p.\nq :- #avg{1:r} > 0."), "2:6: unknown aggregate function '#avg'");
  EXPECT_EQ(parse_error_of("p | :- q."), "1:5: expected an atom after '|' (empty disjunct)");
  EXPECT_EQ(parse_error_of("p :- (q & #count{1:r} > 0)."),
            "1:11: aggregate atoms are not allowed in formula bodies");
  EXPECT_EQ(parse_error_of("p :- q, #true."),
            "1:9: truth constants are only allowed in formula bodies");
  EXPECT_EQ(parse_error_of("p :- q $ r."), "1:8: unexpected character '$'");
  EXPECT_EQ(parse_error_of("p :- #sum{1/0:q} > 0."), "1:11: zero denominator");
}

TEST(Parse, MoreErrors) {
  EXPECT_FALSE(parse_error_of(":- p.").empty());
  EXPECT_FALSE(parse_error_of("p :- #sum{1:q}.").empty());
  EXPECT_FALSE(parse_error_of("p :- #sum{q} > 0.").empty());
  EXPECT_FALSE(parse_error_of("p :- (q | r.").empty());
  EXPECT_FALSE(parse_error_of("p :- #sum{1:q} > 1234567890123456789.").empty());
  EXPECT_FALSE(parse_error_of("p :- #sum{0.1234567891:q} > 0.").empty());
  EXPECT_FALSE(parse_error_of("p :- # > 0.").empty());
}

TEST(Parse, MissingFileIsAUsageError) {
  try {
    parse_program_file("/nonexistent/program.lp");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUsage);
  }
}

TEST(Parse, FileErrorsNameTheFile) {
  try {
    parse_program_file(fixtures::corpus_path("disjunctive_choice.json"));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("disjunctive_choice.json:"), std::string::npos);
  }
}

TEST(Print, Rationals) {
  EXPECT_EQ(format_rational(Rational(3)), "3");
  EXPECT_EQ(format_rational(Rational(-1, 2)), "-1/2");
  EXPECT_EQ(format_rational(Rational(6, 4)), "3/2");
}

TEST(Print, Aggregates) {
  const Program p = parse_program("p :- #sum{1:p; 2,3:q&r} > 0.");
  EXPECT_EQ(format_aggregate(p.rules()[0].literals()[0].agg()), "#sum{1:p; 2,3:q&r} > 0");
}

TEST(Print, AtomicFormulaBodiesKeepTheirParentheses) {
  const Program p = parse_program("p :- (q).\nr :- (not s).");
  EXPECT_TRUE(p.rules()[0].has_formula_body());
  EXPECT_EQ(format_program(p), "p :- (q).\nr :- (not s).\n");
  EXPECT_EQ(parse_program(format_program(p)), p);
}

TEST(RoundTrip, CorpusPrograms) {
  for (const auto& name : fixtures::corpus_names()) {
    const Program p = fixtures::corpus(name);
    EXPECT_EQ(parse_program(format_program(p)), p) << name;
  }
}

TEST(RoundTrip, RandomPrograms) {
  for (const auto& p : random_programs(300, 99)) {
    const std::string text = format_program(p);
    EXPECT_EQ(parse_program(text), p) << text;
    EXPECT_EQ(format_program(parse_program(text)), text);
  }
}

TEST(RoundTrip, Formulas) {
  const char* bodies[] = {
      "not not p", "not (p | q) & r", "(p & q) | (r & s)", "p & (q | r) & s",
      "not (p & q)", "#true & not #false", "((p))", "p | q | r & s | not t",
  };
  for (const char* b : bodies) {
    const Program p = parse_program(std::string("h :- ") + b + ".");
    EXPECT_EQ(parse_program(format_program(p)), p) << b;
  }
}

}  // namespace
}  // namespace aftlab
