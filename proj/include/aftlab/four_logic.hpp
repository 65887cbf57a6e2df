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

// Belnap's four truth values, formulas over them, and here-and-there
// satisfaction.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aftlab/lattice.hpp"

namespace aftlab {

// Encoded as two bits: bit 0 is "true w.r.t. the lower bound", bit 1 is
// "true w.r.t. the upper bound". An atom p under (x, y) therefore has bit 0
// set iff p ∈ x and bit 1 set iff p ∈ y. With this encoding the truth order
// is bitwise inclusion, glb/lub are AND/OR, and negation swaps and flips.
enum class TruthValue : std::uint8_t {
  kFalse = 0,          // F
  kContradictory = 1,  // C: in x, not in y
  kUnknown = 2,        // U: in y, not in x
  kTrue = 3,           // T
};

inline constexpr std::uint8_t bits(TruthValue v) { return static_cast<std::uint8_t>(v); }

inline constexpr TruthValue glb_t(TruthValue a, TruthValue b) {
  return static_cast<TruthValue>(bits(a) & bits(b));
}
inline constexpr TruthValue lub_t(TruthValue a, TruthValue b) {
  return static_cast<TruthValue>(bits(a) | bits(b));
}
inline constexpr TruthValue negate(TruthValue v) {
  const std::uint8_t lo = bits(v) & 1u;
  const std::uint8_t hi = (bits(v) >> 1) & 1u;
  return static_cast<TruthValue>((hi ^ 1u) | ((lo ^ 1u) << 1));
}
// F <t C, U <t T.
inline constexpr bool leq_t(TruthValue a, TruthValue b) {
  return (bits(a) & ~bits(b)) == 0;
}
// U <i F, T <i C.
inline constexpr bool leq_i(TruthValue a, TruthValue b) {
  const bool lower_grows = (bits(a) & 1u) <= (bits(b) & 1u);
  const bool upper_shrinks = ((bits(b) >> 1) & 1u) <= ((bits(a) >> 1) & 1u);
  return lower_grows && upper_shrinks;
}
inline constexpr bool is_classical(TruthValue v) {
  return v == TruthValue::kTrue || v == TruthValue::kFalse;
}

char to_char(TruthValue v);  // 'T', 'F', 'U', 'C'

// Propositional formulas without implication. And/Or are n-ary; the empty
// conjunction is T and the empty disjunction is F.
class Formula {
 public:
  enum class Kind { kAtom, kConst, kNot, kAnd, kOr };

  static Formula atom(std::string name);
  static Formula constant(TruthValue value);
  static Formula negation(Formula operand);
  static Formula conjunction(std::vector<Formula> operands);
  static Formula disjunction(std::vector<Formula> operands);
  // A disjunction of atoms (used for rule heads).
  static Formula any_of(const std::vector<std::string>& atoms);

  Kind kind() const { return kind_; }
  const std::string& atom_name() const { return name_; }
  TruthValue value() const { return value_; }
  const std::vector<Formula>& operands() const { return operands_; }

  void collect_atoms(std::vector<std::string>& out) const;

  bool operator==(const Formula&) const = default;

 private:
  Formula() = default;

  Kind kind_ = Kind::kConst;
  std::string name_;
  TruthValue value_ = TruthValue::kTrue;
  std::vector<Formula> operands_;
};

// Four-valued value of `f` under the interpretation `pair`. Throws on atoms
// outside `universe`.
TruthValue eval(const AtomUniverse& universe, const ApproxPair& pair, const Formula& f);

// Two-valued value under the total interpretation (x, x).
TruthValue eval_two(const AtomUniverse& universe, AtomSet x, const Formula& f);

// (x, y) ⊨_HT f. Requires a consistent pair.
bool ht_satisfies(const AtomUniverse& universe, const ApproxPair& pair, const Formula& f);

// (x, y) ⊨_HT body → ⋁head. Requires a consistent pair and a non-empty head.
bool ht_satisfies_rule(const AtomUniverse& universe, const ApproxPair& pair,
                       const Formula& body, AtomSet head);

}  // namespace aftlab
