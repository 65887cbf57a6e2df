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

// aftlab eval|semantics|check|generate

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "aftlab/error.hpp"
#include "aftlab/generator.hpp"
#include "aftlab/laws.hpp"
#include "aftlab/operators.hpp"
#include "aftlab/render.hpp"
#include "aftlab/semantics.hpp"
#include "aftlab/syntax.hpp"

#ifndef AFTLAB_CORPUS_DIR
#define AFTLAB_CORPUS_DIR "corpus"
#endif

namespace {

using aftlab::Error;
using aftlab::ErrorKind;

struct Options {
  std::string program;
  std::string op;
  std::string semantics;
  std::string pair;
  std::string format = "text";
  std::optional<std::size_t> max_atoms;
  std::uint64_t seed = 1;
  // check
  std::vector<std::string> laws;
  std::vector<std::string> programs;
  std::optional<std::string> corpus;
  std::optional<std::size_t> count;
  bool all = false;
  bool list = false;
  // generate
  aftlab::GeneratorConfig gen;
};

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::kUsage, what); }

std::size_t atom_cap(const Options& o) {
  if (o.max_atoms) return *o.max_atoms;
  if (const char* env = std::getenv("AFTLAB_MAX_ATOMS")) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    usage(std::string("AFTLAB_MAX_ATOMS is not a number: '") + env + "'");
  }
  return aftlab::kDefaultAtomCap;
}

void check_cap(const Options& o) {
  if (o.max_atoms && *o.max_atoms > aftlab::kMaxAtoms) {
    usage("--max-atoms may not exceed " + std::to_string(aftlab::kMaxAtoms));
  }
}

aftlab::OperatorKind operator_kind(const std::string& name) {
  if (auto k = aftlab::parse_operator_kind(name)) return *k;
  usage("unknown operator '" + name + "'");
}

aftlab::Program load(const Options& o) {
  if (o.program.empty()) usage("--program is required");
  aftlab::Program p = aftlab::parse_program_file(o.program);
  aftlab::enforce_atom_cap(p.universe(), atom_cap(o));
  return p;
}

bool json_output(const Options& o) { return o.format == "json"; }

int cmd_eval(const Options& o) {
  if (o.op.empty()) usage("eval needs --operator");
  if (o.pair.empty()) usage("eval needs --pair");
  const auto kind = operator_kind(o.op);
  const aftlab::Program program = load(o);
  aftlab::require_operator_class(kind, program);
  const auto pair = aftlab::parse_pair(program.universe(), o.pair);
  const auto value = aftlab::apply(kind, program, pair);
  if (json_output(o)) {
    std::cout << aftlab::ndpair_json(program.universe(), kind, pair, value).dump(2) << "\n";
  } else {
    std::cout << aftlab::ndpair_text(program.universe(), value) << "\n";
  }
  return 0;
}

int cmd_semantics(const Options& o) {
  if (o.semantics.empty()) usage("semantics needs --semantics");
  const auto sem = aftlab::parse_semantics_kind(o.semantics);
  if (!sem) usage("unknown semantics '" + o.semantics + "'");
  aftlab::OperatorKind kind = aftlab::OperatorKind::kDMTdet;
  if (aftlab::uses_operator(*sem)) {
    if (o.op.empty()) usage(o.semantics + " needs --operator");
    kind = operator_kind(o.op);
  } else if (!o.op.empty()) {
    const bool det = *sem == aftlab::SemanticsKind::kKripkeKleene ||
                     *sem == aftlab::SemanticsKind::kWellFounded;
    if (!det || operator_kind(o.op) != aftlab::OperatorKind::kDMTdet) {
      usage(o.semantics + (det ? " only runs with --operator dmt-det" : " takes no --operator"));
    }
  }
  const aftlab::Program program = load(o);
  const auto result = aftlab::run_semantics(*sem, kind, program, atom_cap(o));
  if (json_output(o)) {
    std::cout << aftlab::semantics_json(result).dump(2) << "\n";
  } else {
    std::cout << aftlab::semantics_text(result);
  }
  return 0;
}

std::vector<std::string> corpus_files(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) usage("corpus directory not found: " + dir);
  std::vector<std::string> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".lp") out.push_back(entry.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_check(const Options& o) {
  if (o.list) {
    for (const auto& law : aftlab::all_laws()) {
      std::cout << law.name << "  " << law.summary << "\n";
    }
    return 0;
  }
  std::vector<std::string> names = o.laws;
  if (names.empty()) {
    for (const auto& law : aftlab::all_laws()) names.push_back(law.name);
  }
  for (const auto& n : names) {
    if (!aftlab::is_law(n)) usage("unknown law '" + n + "'");
  }
  const std::size_t cap = atom_cap(o);
  std::vector<std::string> files = o.programs;
  if (o.corpus || o.all) {
    const auto more = corpus_files(o.corpus.value_or(AFTLAB_CORPUS_DIR));
    files.insert(files.end(), more.begin(), more.end());
  }
  std::vector<aftlab::Program> programs;
  for (const auto& f : files) {
    programs.push_back(aftlab::parse_program_file(f));
    aftlab::enforce_atom_cap(programs.back().universe(), cap);
  }
  std::size_t count = o.count.value_or(files.empty() ? 200 : 0);
  if (o.all) count = std::max<std::size_t>(count, 200);
  auto random = aftlab::random_programs(count, o.seed);
  programs.insert(programs.end(), std::make_move_iterator(random.begin()),
                  std::make_move_iterator(random.end()));

  const auto reports = aftlab::run_laws(programs, names);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (json_output(o)) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) {
      nlohmann::json e = {{"law", r.name},
                          {"checked", r.checked},
                          {"skipped", r.skipped},
                          {"passed", r.passed()}};
      if (r.failure) {
        e["message"] = r.failure->message;
        e["reproducer"] = r.failure->reproducer;
      }
      j.push_back(std::move(e));
    }
    std::cout << nlohmann::json{{"programs", programs.size()}, {"laws", std::move(j)}}.dump(2)
              << "\n";
  } else {
    std::cout << aftlab::format_reports(reports);
    std::cout << (ok ? "all laws hold" : "law violations found") << " on " << programs.size()
              << " programs\n";
  }
  return ok ? 0 : Error(ErrorKind::kLawViolation, "").exit_code();
}

int cmd_generate(const Options& o) {
  aftlab::GeneratorConfig config = o.gen;
  config.seed = o.seed;
  const aftlab::Program program = aftlab::generate_program(config);
  if (json_output(o)) {
    std::cout << aftlab::program_json(program).dump(2) << "\n";
  } else {
    std::cout << aftlab::format_program(program);
  }
  return 0;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-atoms", o.max_atoms, "Atom cap (default 12, env AFTLAB_MAX_ATOMS)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-deterministic approximation fixpoint theory for logic programs"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "Apply an operator to a pair");
  eval->add_option("--program", o.program, "Program file");
  eval->add_option("--operator", o.op, "ic|dmt|ultimate|gz|dmt-det");
  eval->add_option("--pair", o.pair, "Pair \"x;y\", comma-separated atoms per side");
  add_common(eval, o);

  auto* sem = app.add_subcommand("semantics", "Compute the models of a semantics");
  sem->add_option("--program", o.program, "Program file");
  sem->add_option("--operator", o.op, "ic|dmt|ultimate|gz|dmt-det");
  sem->add_option("--semantics", o.semantics,
                  "fixpoints|stable|total-stable|kk|wf|ht|seq|seq-approx|"
                  "three-valued-stable|gz-answer-sets");
  add_common(sem, o);

  auto* check = app.add_subcommand("check", "Check the laws on corpus and random programs");
  check->add_option("--laws", o.laws, "Comma-separated law names (default: all)")
      ->delimiter(',');
  check->add_option("--program", o.programs, "Program files to include");
  check->add_option("--corpus", o.corpus, "Directory of .lp files to include");
  check->add_option("--count", o.count, "Number of random programs");
  check->add_option("--seed", o.seed, "Seed of the random programs");
  check->add_flag("--all", o.all, "Every law on the corpus and at least 200 random programs");
  check->add_flag("--list", o.list, "List the laws");
  add_common(check, o);

  auto* gen = app.add_subcommand("generate", "Print a random program");
  gen->add_option("--atoms", o.gen.atoms, "Number of atoms");
  gen->add_option("--rules", o.gen.rules, "Number of rules");
  gen->add_option("--neg-prob", o.gen.neg_prob, "Probability of a negated literal");
  gen->add_option("--agg-prob", o.gen.agg_prob, "Probability of an aggregate literal");
  gen->add_option("--width", o.gen.width, "Maximum head size");
  gen->add_option("--seed", o.seed, "Seed");
  add_common(gen, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    check_cap(o);
    if (*eval) return cmd_eval(o);
    if (*sem) return cmd_semantics(o);
    if (*check) return cmd_check(o);
    return cmd_generate(o);
  } catch (const Error& e) {
    std::cerr << "aftlab: " << e.what() << "\n";
    return e.exit_code();
  }
}
