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

// Text and JSON output shared by the CLI and the golden tests.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "aftlab/lattice.hpp"
#include "aftlab/operators.hpp"
#include "aftlab/semantics.hpp"

namespace aftlab {

// "x;y" with comma-separated atoms on each side, e.g. ";p,q" for (∅, {p,q}).
ApproxPair parse_pair(const AtomUniverse& universe, std::string_view text);

nlohmann::json set_json(const AtomUniverse& universe, AtomSet set);
AtomSet set_from_json(const AtomUniverse& universe, const nlohmann::json& j);

// "lower: {∅}; upper: {{p},{q},{p,q}}"
std::string ndpair_text(const AtomUniverse& universe, const NdPair& value);
nlohmann::json ndpair_json(const AtomUniverse& universe, OperatorKind kind,
                           const ApproxPair& pair, const NdPair& value);

std::string semantics_text(const SemanticsResult& result);
nlohmann::json semantics_json(const SemanticsResult& result);
// {"universe": [...], "shape": "normal", "aggregates": false, "rules": [...]}
// with one rule text per entry.
nlohmann::json program_json(const Program& program);

// Reads back the "models" array of semantics_json().
std::vector<ApproxPair> models_from_json(const AtomUniverse& universe, const nlohmann::json& j);

}  // namespace aftlab
