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

// Executable properties of the operators and semantics, checked
// exhaustively per program, with greedy shrinking of counterexamples.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aftlab/operators.hpp"
#include "aftlab/program.hpp"

namespace aftlab {

struct LawInfo {
  std::string name;
  std::string summary;
};

const std::vector<LawInfo>& all_laws();
bool is_law(std::string_view name);

// Whether the law says anything about this program (class preconditions).
bool law_applies(std::string_view name, const Program& program);
// nullopt when the law holds, else a description of the violation. A null
// fn means apply().
std::optional<std::string> check_law(std::string_view name, const Program& program,
                                     const ApplyFn& fn = nullptr);

// Greedily drops rules, body literals, head atoms and set-term entries while
// fails() stays true.
Program shrink(const Program& program, const std::function<bool(const Program&)>& fails);

struct LawFailure {
  std::string message;
  std::string reproducer;  // program text of the shrunk counterexample
};

struct LawReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::optional<LawFailure> failure;

  bool passed() const { return !failure; }
};

// Stops at the first counterexample of each law and shrinks it.
std::vector<LawReport> run_laws(const std::vector<Program>& programs,
                                const std::vector<std::string>& names,
                                const ApplyFn& fn = nullptr);

std::string format_reports(const std::vector<LawReport>& reports);

}  // namespace aftlab
