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

#include "aftlab/generator.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "aftlab/error.hpp"

namespace aftlab {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

std::string atom_name(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

std::vector<std::string> distinct_atoms(Rng& rng, std::size_t universe, std::size_t count) {
  std::vector<std::size_t> pool(universe);
  for (std::size_t i = 0; i < universe; ++i) pool[i] = i;
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count && !pool.empty(); ++k) {
    const std::size_t j = rng.below(pool.size());
    out.push_back(atom_name(pool[j]));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return out;
}

AggregateAtom random_aggregate(Rng& rng, std::size_t atoms) {
  static constexpr AggregateFunction kFunctions[] = {
      AggregateFunction::kSum, AggregateFunction::kCount, AggregateFunction::kMax};
  static constexpr Comparator kComparators[] = {Comparator::kLt, Comparator::kLe,
                                                Comparator::kGe, Comparator::kGt,
                                                Comparator::kEq};
  AggregateAtom a;
  a.function = kFunctions[rng.below(3)];
  const std::size_t entries = 1 + rng.below(2);
  for (std::size_t i = 0; i < entries; ++i) {
    SetTermEntry e;
    e.weights.push_back(Rational(static_cast<std::int64_t>(rng.below(4)) - 1));
    e.condition = distinct_atoms(rng, atoms, 1 + rng.below(std::min<std::size_t>(2, atoms)));
    a.term.entries.push_back(std::move(e));
  }
  a.comparator = kComparators[rng.below(5)];
  a.bound = Rational(static_cast<std::int64_t>(rng.below(3)));
  return a;
}

}  // namespace

void validate(const GeneratorConfig& config) {
  if (config.atoms == 0 || config.atoms > kMaxAtoms) {
    throw Error(ErrorKind::kUsage, "generator needs between 1 and " +
                                       std::to_string(kMaxAtoms) + " atoms");
  }
  if (config.width == 0) throw Error(ErrorKind::kUsage, "head width must be at least 1");
  if (config.neg_prob < 0 || config.neg_prob > 1 || config.agg_prob < 0 || config.agg_prob > 1) {
    throw Error(ErrorKind::kUsage, "probabilities must lie in [0, 1]");
  }
}

Program generate_program(const GeneratorConfig& config) {
  validate(config);
  Rng rng(config.seed);
  std::vector<Rule> rules;
  for (std::size_t r = 0; r < config.rules; ++r) {
    const std::size_t width = 1 + rng.below(std::min(config.width, config.atoms));
    std::vector<std::string> head = distinct_atoms(rng, config.atoms, width);
    Conjunction body;
    const std::size_t length = rng.below(std::min<std::size_t>(config.atoms, 3) + 1);
    for (std::size_t i = 0; i < length; ++i) {
      const bool negated = rng.chance(config.neg_prob);
      if (rng.chance(config.agg_prob)) {
        body.push_back(BodyLiteral::aggregate(random_aggregate(rng, config.atoms), negated));
      } else {
        std::string a = atom_name(rng.below(config.atoms));
        body.push_back(negated ? BodyLiteral::negative(std::move(a))
                               : BodyLiteral::positive(std::move(a)));
      }
    }
    rules.emplace_back(std::move(head), std::move(body));
  }
  return Program(std::move(rules));
}

std::vector<Program> random_programs(std::size_t count, std::uint64_t seed,
                                     std::size_t max_atoms, std::size_t max_rules) {
  std::vector<Program> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorConfig g;
    g.atoms = 1 + i % max_atoms;
    g.rules = 1 + (i / max_atoms) % max_rules;
    g.neg_prob = 0.4;
    g.agg_prob = (i / 2) % 2 == 0 ? 0.0 : 0.35;
    g.width = i % 2 == 0 ? 1 : 2;
    g.seed = seed * 1000003u + i;
    out.push_back(generate_program(g));
  }
  return out;
}

}  // namespace aftlab
