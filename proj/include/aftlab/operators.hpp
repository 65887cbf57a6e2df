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

// Consequence operators of a program and their approximations.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aftlab/lattice.hpp"
#include "aftlab/program.hpp"

namespace aftlab {

enum class OperatorKind { kIC, kDMT, kUltimate, kGZ, kDMTdet };

inline constexpr OperatorKind kAllOperatorKinds[] = {
    OperatorKind::kIC, OperatorKind::kDMT, OperatorKind::kUltimate, OperatorKind::kGZ,
    OperatorKind::kDMTdet};

// "ic", "dmt", "ultimate", "gz", "dmt-det".
std::string to_string(OperatorKind kind);
std::optional<OperatorKind> parse_operator_kind(std::string_view name);

// Whether the operator is defined on the program; see require_operator_class.
bool supports(OperatorKind kind, const Program& program);
// IC needs an aggregate-free program, DMTdet atomic heads. Throws otherwise.
void require_operator_class(OperatorKind kind, const Program& program);

// A set of rule heads, sorted and deduplicated.
using HeadFamily = std::vector<AtomSet>;

HeadFamily hd(const Program& program, AtomSet x);

// Every subset of the union of the heads that meets each head. The empty
// family yields {∅}. Throws on an empty head.
NdSet hitting_sets(const HeadFamily& heads);

NdSet ic(const Program& program, AtomSet x);

// Four-valued head selection: the lower side keeps rules whose body is T or
// C, the upper side rules whose body is T or U. Defined on every pair.
NdPair ic_ndao(const Program& program, const ApproxPair& pair);

// Interval intersection and union of the fired heads; atomic heads only.
ApproxPair dmt_det(const Program& program, const ApproxPair& pair);

NdPair dmt_ndao(const Program& program, const ApproxPair& pair);

// Both sides are the union of ic(z) over the interval.
NdPair ultimate_ndao(const Program& program, const ApproxPair& pair);

// Exact on total pairs. On a non-total pair the upper side is {A}; the lower
// side is built from the rules whose reduct body is already certain over the
// whole interval, and is {∅} when there are none.
NdPair gz_ndao(const Program& program, const ApproxPair& pair);

// Dispatch; DMTdet is lifted to singleton sets. Only IC accepts inconsistent
// pairs.
NdPair apply(OperatorKind kind, const Program& program, const ApproxPair& pair);

using ApplyFn = std::function<NdPair(OperatorKind, const Program&, const ApproxPair&)>;

// Memoizing wrapper around apply() and ic() for one program and kind. The
// program must outlive the operator.
class Operator {
 public:
  Operator(const Program& program, OperatorKind kind);
  // Uses fn in place of apply(); test fixtures pass deliberately broken ones.
  Operator(const Program& program, OperatorKind kind, ApplyFn fn);

  const Program& program() const { return *program_; }
  OperatorKind kind() const { return kind_; }
  bool accepts(const ApproxPair& pair) const {
    return kind_ == OperatorKind::kIC || pair.is_consistent();
  }

  const NdPair& operator()(const ApproxPair& pair);
  const NdSet& ic_at(AtomSet x);

 private:
  const Program* program_;
  OperatorKind kind_;
  ApplyFn fn_;
  std::unordered_map<std::uint64_t, NdPair> pairs_;
  std::unordered_map<std::uint32_t, NdSet> ic_;
};

}  // namespace aftlab
