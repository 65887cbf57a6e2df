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

// Fixpoint semantics by exhaustive search over the approximation lattice.
// Every list returned here is sorted by (lower, upper) bitmask order.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aftlab/lattice.hpp"
#include "aftlab/operators.hpp"
#include "aftlab/program.hpp"

namespace aftlab {

enum class SemanticsKind {
  kFixpoints,
  kStable,
  kTotalStable,
  kKripkeKleene,
  kWellFounded,
  kHT,
  kSEQ,
  kSEQApprox,
  kThreeValuedStable,
  kGZAnswerSets,
};

// "fixpoints", "stable", "total-stable", "kk", "wf", "ht", "seq",
// "seq-approx", "three-valued-stable", "gz-answer-sets".
std::string to_string(SemanticsKind kind);
std::optional<SemanticsKind> parse_semantics_kind(std::string_view name);
// False for the semantics that fix their own operator or use none.
bool uses_operator(SemanticsKind kind);

// All consistent (x, y) with x in the lower and y in the upper set of op(x, y).
std::vector<ApproxPair> fixpoints(Operator& op);

// Minimal x with x ∈ op_l(x, y). For IC x ranges over every subset of the
// universe, for the other kinds over the subsets of y.
NdSet complete_lower_stable(Operator& op, AtomSet y);
// Minimal y with y ∈ op_u(x, y); y ranges over supersets of x except for IC.
NdSet complete_upper_stable(Operator& op, AtomSet x);

std::vector<ApproxPair> stable_fixpoints(Operator& op);
std::vector<AtomSet> total_stable_fixpoints(Operator& op);

// Iterates dmt_det from (∅, A) to its fixpoint.
ApproxPair kk_fixpoint_det(const Program& program);

// Pairs with x = lfp dmt_det_l(., y) and y = lfp dmt_det_u(x, .).
std::vector<ApproxPair> det_stable_pairs(const Program& program);

struct WellFounded {
  std::vector<ApproxPair> minimal;  // ≤i-minimal deterministic stable pairs
  bool anomaly() const { return minimal.size() != 1; }
};
WellFounded wf_fixpoint_det(const Program& program);

// Consistent pairs satisfying every rule in the logic of here-and-there.
// Needs a disjunctively normal aggregate-free program.
std::vector<ApproxPair> ht_models_program(const Program& program);

// Consistent (x, y) with ic(y) ⪯S {y} and op_l(x, y) ⪯S {x}.
std::vector<ApproxPair> ht_pairs(Operator& op);

std::vector<ApproxPair> min_t(const std::vector<ApproxPair>& pairs);
std::vector<ApproxPair> max_i(const std::vector<ApproxPair>& pairs);
// Pairs whose gap y∖x has no strict subset among the other gaps.
std::vector<ApproxPair> maximal_canonical(const std::vector<ApproxPair>& pairs);

std::vector<ApproxPair> seq(Operator& op);
std::vector<ApproxPair> seq_no_difference(Operator& op);

// Every rule's head is ≥t its body under pair (heads read as disjunctions).
bool is_three_valued_model(const Program& program, const ApproxPair& pair);

// Whether pair is a ≤t-minimal three-valued model of the GL-transform of
// the program relative to pair itself.
bool is_three_valued_stable(const Program& program, const ApproxPair& pair);
std::vector<ApproxPair> three_valued_stable(const Program& program);

std::vector<AtomSet> gz_answer_sets(const Program& program);

struct SemanticsResult {
  SemanticsKind semantics = SemanticsKind::kFixpoints;
  std::optional<OperatorKind> op;
  AtomUniverse universe;
  std::vector<ApproxPair> models;
  bool anomaly = false;  // several ≤i-minimal candidates for wf
};

// Checks the atom cap and the operator's program class, then dispatches.
// kk and wf always use dmt-det; the GL and GZ based semantics use none.
SemanticsResult run_semantics(SemanticsKind semantics, OperatorKind op,
                              const Program& program, std::size_t cap = kDefaultAtomCap);

}  // namespace aftlab
