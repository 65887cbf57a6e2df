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

// Seeded random programs for the property suites.

#pragma once

#include <cstdint>
#include <vector>

#include "aftlab/program.hpp"

namespace aftlab {

struct GeneratorConfig {
  std::size_t atoms = 3;  // atoms are named a, b, c, ...
  std::size_t rules = 4;
  double neg_prob = 0.3;  // per body literal, aggregates included
  double agg_prob = 0.0;  // per body literal
  std::size_t width = 2;  // maximum head size
  std::uint64_t seed = 1;
};

// Throws a usage error for out-of-range settings. Identical configs give
// identical programs on every platform: only raw mt19937_64 output is used.
void validate(const GeneratorConfig& config);
Program generate_program(const GeneratorConfig& config);

// The random part of the law suite: count programs with at most max_atoms
// atoms and max_rules rules, cycling through shapes, with and without
// aggregates.
std::vector<Program> random_programs(std::size_t count, std::uint64_t seed,
                                     std::size_t max_atoms = 3, std::size_t max_rules = 4);

}  // namespace aftlab
