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
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "aftlab/render.hpp"
#include "aftlab/semantics.hpp"
#include "fixtures.hpp"

namespace {

struct Invocation {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Invocation run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" + AFTLAB_CLI + "' " + args + " 2>/dev/null";
  Invocation r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const std::string& name) {
  return "'" + fixtures::corpus_path(name + ".lp") + "'";
}

std::string temp_program(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("aftlab_cli_test_" + name + ".lp");
  std::ofstream(path) << text;
  return "'" + path.string() + "'";
}

TEST(Eval, DmtOnTheDisjunctiveChoice) {
  const Invocation r = run("eval --program " + corpus("disjunctive_choice") + " --operator dmt --pair ';p,q'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lower: {∅}; upper: {{p},{q},{p,q}}\n");
}

TEST(Eval, GzOnANonTotalPair) {
  const Invocation r = run("eval --program " + corpus("aggregate_cycle") + " --operator gz --pair ';r,s'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lower: {∅}; upper: {{q,r,s}}\n");
}

TEST(Eval, InconsistentPairIsAPreconditionError) {
  const Invocation r = run("eval --program " + corpus("disjunctive_choice") + " --operator dmt --pair 'p,q;p'");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(run("eval --program " + corpus("disjunctive_choice") + " --operator ic --pair 'p,q;p'").code,
            0);
}

TEST(Eval, Json) {
  const Invocation r = run("eval --program " + corpus("ultimate_choice") +
                    " --operator ultimate --pair ';p,q' --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("lower"), nlohmann::json::parse(R"([["p"],["q"]])"));
  EXPECT_EQ(j.at("operator"), "ultimate");
}

TEST(Semantics, StableModelsOfTheDisjunctiveChoice) {
  const Invocation r = run("semantics --program " + corpus("disjunctive_choice") +
                    " --semantics stable --operator ic");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "semantics: stable; operator: ic; models: 2\n(∅, {q})\n({p}, {p})\n");
}

TEST(Semantics, SemiEquilibriumModels) {
  const Invocation r = run("semantics --program " + corpus("semi_equilibrium") + " --semantics seq --operator ic");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "semantics: seq; operator: ic; models: 2\n({q}, {p,q})\n({s}, {p,s})\n");
}

TEST(Semantics, GzAnswerSets) {
  const Invocation r = run("semantics --program " + corpus("gz_reduct") + " --semantics gz-answer-sets");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("({p,q}, {p,q})"), std::string::npos) << r.out;
}

TEST(Semantics, JsonRoundTripsToTheLibraryResult) {
  for (const char* sem : {"fixpoints", "stable", "ht", "seq", "seq-approx"}) {
    const Invocation r = run("semantics --program " + corpus("aggregate_cycle") + " --semantics " + sem +
                      " --operator dmt --format json");
    ASSERT_EQ(r.code, 0) << sem;
    const auto j = nlohmann::json::parse(r.out);
    const auto program = fixtures::corpus("aggregate_cycle");
    const auto want = aftlab::run_semantics(*aftlab::parse_semantics_kind(sem),
                                            aftlab::OperatorKind::kDMT, program);
    EXPECT_EQ(aftlab::models_from_json(program.universe(), j), want.models) << sem;
    EXPECT_EQ(j.at("counts").at("models"), want.models.size());
  }
}

TEST(Semantics, OutputIsByteIdenticalAcrossRuns) {
  const std::string args = "semantics --program " + corpus("aggregate_cycle") +
                           " --semantics ht --operator ultimate --format json";
  const Invocation a = run(args);
  const Invocation b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Errors, ExitCodes) {
  const std::string p = corpus("disjunctive_choice");
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("eval --program " + p + " --operator nope --pair ';'").code, 1);
  EXPECT_EQ(run("eval --operator ic --pair ';'").code, 1);
  EXPECT_EQ(run("eval --program " + p + " --operator ic").code, 1);
  EXPECT_EQ(run("eval --program /nonexistent.lp --operator ic --pair ';'").code, 1);
  EXPECT_EQ(run("eval --program " + p + " --operator ic --pair 'p'").code, 1);
  EXPECT_EQ(run("eval --program " + p + " --operator ic --pair 'z;'").code, 2);
  EXPECT_EQ(run("semantics --program " + p + " --semantics stable").code, 1);
  EXPECT_EQ(run("semantics --program " + p + " --semantics nope --operator ic").code, 1);
  EXPECT_EQ(run("semantics --program " + p + " --semantics gz-answer-sets --operator ic").code, 1);
  EXPECT_EQ(run("semantics --program " + p + " --semantics wf --operator dmt").code, 1);
  EXPECT_EQ(run("semantics --program " + p + " --semantics stable --operator ic --format xml").code,
            1);
  EXPECT_EQ(run("semantics --program " + corpus("aggregate_cycle") +
                " --semantics stable --operator ic").code,
            2);
  EXPECT_EQ(run("semantics --program " + p + " --semantics wf --operator dmt-det").code, 2);
  EXPECT_EQ(run("semantics --program " + temp_program("bad", "p :- q") +
                " --semantics stable --operator ic").code,
            2);
  EXPECT_EQ(run("check --laws nope").code, 1);
}

TEST(Errors, AtomCap) {
  const std::string args =
      "semantics --program " + corpus("aggregate_cycle") + " --semantics stable --operator dmt";
  EXPECT_EQ(run(args).code, 0);
  EXPECT_EQ(run(args + " --max-atoms 2").code, 2);
  EXPECT_EQ(run(args, "AFTLAB_MAX_ATOMS=2").code, 2);
  EXPECT_EQ(run(args + " --max-atoms 3", "AFTLAB_MAX_ATOMS=2").code, 0);
  EXPECT_EQ(run(args, "AFTLAB_MAX_ATOMS=abc").code, 1);
  EXPECT_EQ(run(args + " --max-atoms 25").code, 1);
}

TEST(Check, PrecisionChainOnRandomPrograms) {
  const Invocation r = run("check --laws precision-chain --count 200 --seed 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PASS precision-chain (200 checked, 0 skipped)\nall laws hold on 200 programs\n");
}

TEST(Check, SemiEquilibriumNonEmptiness) {
  const Invocation r = run("check --laws seq-nonempty");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("PASS seq-nonempty", 0), 0u) << r.out;
}

TEST(Check, ViolationExitsWithThreeAndPrintsAReproducer) {
  const Invocation r = run("check --laws gz-minimal-total,exactness --program " +
                    temp_program("odd", "p :- not p.\nq :- p.\n"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("FAIL gz-minimal-total"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("    p :- not p.\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS exactness"), std::string::npos) << r.out;
}

TEST(Check, JsonReport) {
  const Invocation r = run("check --laws symmetry --corpus '" + std::string(AFTLAB_CORPUS_DIR) +
                    "' --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("programs"), fixtures::corpus_names().size());
  EXPECT_EQ(j.at("laws").at(0).at("law"), "symmetry");
  EXPECT_EQ(j.at("laws").at(0).at("passed"), true);
}

TEST(Check, ListsTheLaws) {
  const Invocation r = run("check --list");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("monotonicity"), std::string::npos);
  EXPECT_NE(r.out.find("prefixpoints"), std::string::npos);
}

TEST(Generate, GoldenText) {
  const Invocation r = run("generate --seed 1 --atoms 2 --rules 2");
  EXPECT_EQ(r.code, 0);
  std::ifstream in(std::string(AFTLAB_TEST_DIR) + "/golden/generate_seed1_atoms2_rules2.lp");
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_EQ(r.out, s.str());
}

TEST(Generate, JsonAndValidation) {
  const Invocation r = run("generate --seed 3 --atoms 3 --rules 3 --width 1 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("shape"), "normal");
  EXPECT_EQ(j.at("aggregates"), false);
  EXPECT_EQ(j.at("rules").size(), 3u);
  EXPECT_EQ(run("generate --atoms 0").code, 1);
  EXPECT_EQ(run("generate --neg-prob 2").code, 1);
}

}  // namespace
