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

#include "aftlab/render.hpp"

#include <algorithm>

#include "aftlab/error.hpp"
#include "aftlab/syntax.hpp"

namespace aftlab {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

AtomSet parse_side(const AtomUniverse& universe, std::string_view text) {
  AtomSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    const std::string name = trim(text.substr(start, comma - start));
    if (name.empty() && (comma < text.size() || start > 0)) {
      throw Error(ErrorKind::kUsage, "empty atom name in \"" + std::string(text) + "\"");
    }
    if (!name.empty() && name != "∅") {
      const auto i = universe.index(name);
      if (!i) fail_precondition("atom '" + name + "' is not in the program's universe");
      out |= AtomSet::singleton(*i);
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace

ApproxPair parse_pair(const AtomUniverse& universe, std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
    throw Error(ErrorKind::kUsage, "a pair is written \"x;y\", e.g. \";p,q\"");
  }
  return {parse_side(universe, text.substr(0, semi)), parse_side(universe, text.substr(semi + 1))};
}

nlohmann::json set_json(const AtomUniverse& universe, AtomSet set) {
  return universe.names_of(set);
}

AtomSet set_from_json(const AtomUniverse& universe, const nlohmann::json& j) {
  return universe.set_of(j.get<std::vector<std::string>>());
}

std::string ndpair_text(const AtomUniverse& universe, const NdPair& value) {
  return "lower: " + format_ndset(universe, value.lower_set) +
         "; upper: " + format_ndset(universe, value.upper_set);
}

nlohmann::json ndpair_json(const AtomUniverse& universe, OperatorKind kind,
                           const ApproxPair& pair, const NdPair& value) {
  auto sets = [&](const NdSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (AtomSet e : s) arr.push_back(set_json(universe, e));
    return arr;
  };
  return {
      {"universe", universe.names()},
      {"operator", to_string(kind)},
      {"pair", {{"lower", set_json(universe, pair.lower)}, {"upper", set_json(universe, pair.upper)}}},
      {"lower", sets(value.lower_set)},
      {"upper", sets(value.upper_set)},
  };
}

std::string semantics_text(const SemanticsResult& result) {
  std::string out = "semantics: " + to_string(result.semantics);
  if (result.op) out += "; operator: " + to_string(*result.op);
  out += "; models: " + std::to_string(result.models.size()) + "\n";
  for (const auto& m : result.models) out += format_pair(result.universe, m) + "\n";
  if (result.anomaly) out += "warning: no unique ≤i-least candidate\n";
  return out;
}

nlohmann::json semantics_json(const SemanticsResult& result) {
  nlohmann::json models = nlohmann::json::array();
  std::size_t total = 0;
  for (const auto& m : result.models) {
    models.push_back({{"lower", set_json(result.universe, m.lower)},
                      {"upper", set_json(result.universe, m.upper)}});
    total += m.is_total() ? 1 : 0;
  }
  nlohmann::json j = {
      {"universe", result.universe.names()},
      {"operator", result.op ? nlohmann::json(to_string(*result.op)) : nlohmann::json(nullptr)},
      {"semantics", to_string(result.semantics)},
      {"models", std::move(models)},
      {"counts", {{"models", result.models.size()}, {"total", total}}},
  };
  if (result.semantics == SemanticsKind::kWellFounded) j["anomaly"] = result.anomaly;
  return j;
}

nlohmann::json program_json(const Program& program) {
  const Classification c = classify(program);
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& r : program.rules()) rules.push_back(format_rule(r));
  return {
      {"universe", program.universe().names()},
      {"shape", to_string(c.shape)},
      {"aggregates", c.has_aggregates},
      {"rules", std::move(rules)},
  };
}

std::vector<ApproxPair> models_from_json(const AtomUniverse& universe, const nlohmann::json& j) {
  std::vector<ApproxPair> out;
  for (const auto& m : j.at("models")) {
    out.push_back({set_from_json(universe, m.at("lower")), set_from_json(universe, m.at("upper"))});
  }
  return out;
}

}  // namespace aftlab
