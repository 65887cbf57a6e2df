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

// Text format for programs:
//
//   rule    := head ":-" body "." | head "."
//   head    := atom ("|" atom)*
//   body    := lit ("," lit)* | formula | <empty>
//   lit     := ["not"] (atom | agg)
//   agg     := "#" func "{" entry (";" entry)* "}" cmp number
//   entry   := number ("," number)* ":" atom ("&" atom)*
//   formula := atom | "not" formula | formula "&" formula
//            | formula "|" formula | "(" formula ")"
//            | "#true" | "#false" | "#unknown" | "#contradictory"
//
// "%" starts a comment. Numbers are integers, fractions "n/d" or decimals,
// optionally negative; all are read as exact rationals.

#pragma once

#include <string>
#include <string_view>

#include "aftlab/program.hpp"

namespace aftlab {

// Throws Error(kParse) with "line:col: message" on malformed input.
Program parse_program(std::string_view text);
Program parse_program_file(const std::string& path);

std::string format_rational(const Rational& r);
std::string format_formula(const Formula& f);
std::string format_aggregate(const AggregateAtom& a);
std::string format_rule(const Rule& rule);
// One rule per line, each terminated by ".\n".
std::string format_program(const Program& program);

}  // namespace aftlab
