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

#include "aftlab/operators.hpp"

#include <algorithm>

#include "aftlab/error.hpp"

namespace aftlab {

namespace {

void sort_unique(HeadFamily& heads) {
  std::sort(heads.begin(), heads.end());
  heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
}

void require_consistent(const ApproxPair& pair, OperatorKind kind) {
  if (!pair.is_consistent()) {
    fail_precondition(to_string(kind) + " is only defined on consistent pairs");
  }
}

bool atomic_heads(const Program& program) {
  return std::all_of(program.compiled().begin(), program.compiled().end(),
                     [](const CompiledRule& r) { return r.head.size() == 1; });
}

// Body of r is certain over [w, z] once aggregates are reduced relative to z.
bool gz_fires(const AtomUniverse& u, const CompiledRule& r, AtomSet w, AtomSet z) {
  if (r.formula) {
    return for_each_in_interval(w, z, [&](AtomSet v) { return r.body_true(u, v); });
  }
  if (!r.positive.subset_of(w) || r.negative.intersects(z)) return false;
  for (const auto& a : r.positive_aggregates) {
    if (!a.holds(z) || !a.satisfied_conditions(z).subset_of(w)) return false;
  }
  for (const auto& a : r.negative_aggregates) {
    if (!for_each_in_interval(w, z, [&](AtomSet v) { return a.negation_holds(v); })) {
      return false;
    }
  }
  return true;
}

template <typename IcFn>
NdPair ultimate_with(const ApproxPair& pair, IcFn&& ic_of) {
  require_consistent(pair, OperatorKind::kUltimate);
  NdSet out;
  for_each_in_interval(pair.lower, pair.upper, [&](AtomSet z) {
    out.merge(ic_of(z));
    return true;
  });
  return {out, out};
}

}  // namespace

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kIC:
      return "ic";
    case OperatorKind::kDMT:
      return "dmt";
    case OperatorKind::kUltimate:
      return "ultimate";
    case OperatorKind::kGZ:
      return "gz";
    case OperatorKind::kDMTdet:
      return "dmt-det";
  }
  return "ic";
}

std::optional<OperatorKind> parse_operator_kind(std::string_view name) {
  for (OperatorKind k : kAllOperatorKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

bool supports(OperatorKind kind, const Program& program) {
  switch (kind) {
    case OperatorKind::kIC:
      return !classify(program).has_aggregates;
    case OperatorKind::kDMTdet:
      return atomic_heads(program);
    default:
      return true;
  }
}

void require_operator_class(OperatorKind kind, const Program& program) {
  if (supports(kind, program)) return;
  if (kind == OperatorKind::kIC) fail_precondition("ic needs an aggregate-free program");
  fail_precondition(to_string(kind) + " needs a program with atomic rule heads");
}

HeadFamily hd(const Program& program, AtomSet x) {
  HeadFamily out;
  for (const auto& r : program.compiled()) {
    if (r.body_true(program.universe(), x)) out.push_back(r.head);
  }
  sort_unique(out);
  return out;
}

NdSet hitting_sets(const HeadFamily& heads) {
  AtomSet all;
  for (AtomSet h : heads) {
    if (h.empty()) fail_precondition("hitting sets of an empty head");
    all |= h;
  }
  std::vector<AtomSet> out;
  for_each_in_interval(AtomSet{}, all, [&](AtomSet s) {
    if (std::all_of(heads.begin(), heads.end(), [&](AtomSet h) { return h.intersects(s); })) {
      out.push_back(s);
    }
    return true;
  });
  return NdSet(std::move(out));
}

NdSet ic(const Program& program, AtomSet x) { return hitting_sets(hd(program, x)); }

NdPair ic_ndao(const Program& program, const ApproxPair& pair) {
  require_operator_class(OperatorKind::kIC, program);
  HeadFamily lower;
  HeadFamily upper;
  for (std::size_t i = 0; i < program.compiled().size(); ++i) {
    const auto& r = program.compiled()[i];
    const TruthValue v = r.formula ? eval(program.universe(), pair, *r.formula)
                                   : r.body_value(pair);
    if (bits(v) & 1u) lower.push_back(r.head);
    if (bits(v) & 2u) upper.push_back(r.head);
  }
  sort_unique(lower);
  sort_unique(upper);
  return {hitting_sets(lower), hitting_sets(upper)};
}

ApproxPair dmt_det(const Program& program, const ApproxPair& pair) {
  require_operator_class(OperatorKind::kDMTdet, program);
  require_consistent(pair, OperatorKind::kDMTdet);
  AtomSet lower = program.universe().full();
  AtomSet upper;
  for_each_in_interval(pair.lower, pair.upper, [&](AtomSet z) {
    AtomSet fired;
    for (const auto& r : program.compiled()) {
      if (r.body_true(program.universe(), z)) fired |= r.head;
    }
    lower &= fired;
    upper |= fired;
    return true;
  });
  return {lower, upper};
}

NdPair dmt_ndao(const Program& program, const ApproxPair& pair) {
  require_consistent(pair, OperatorKind::kDMT);
  std::optional<HeadFamily> lower;
  HeadFamily upper;
  for_each_in_interval(pair.lower, pair.upper, [&](AtomSet z) {
    HeadFamily here = hd(program, z);
    upper.insert(upper.end(), here.begin(), here.end());
    if (!lower) {
      lower = std::move(here);
    } else {
      HeadFamily both;
      std::set_intersection(lower->begin(), lower->end(), here.begin(), here.end(),
                            std::back_inserter(both));
      lower = std::move(both);
    }
    return true;
  });
  sort_unique(upper);
  return {hitting_sets(*lower), hitting_sets(upper)};
}

NdPair ultimate_ndao(const Program& program, const ApproxPair& pair) {
  return ultimate_with(pair, [&](AtomSet z) { return ic(program, z); });
}

NdPair gz_ndao(const Program& program, const ApproxPair& pair) {
  require_consistent(pair, OperatorKind::kGZ);
  HeadFamily heads;
  for (const auto& r : program.compiled()) {
    if (gz_fires(program.universe(), r, pair.lower, pair.upper)) heads.push_back(r.head);
  }
  sort_unique(heads);
  NdSet lower = hitting_sets(heads);
  if (pair.is_total()) return {lower, lower};
  return {std::move(lower), NdSet{program.universe().full()}};
}

NdPair apply(OperatorKind kind, const Program& program, const ApproxPair& pair) {
  switch (kind) {
    case OperatorKind::kIC:
      return ic_ndao(program, pair);
    case OperatorKind::kDMT:
      return dmt_ndao(program, pair);
    case OperatorKind::kUltimate:
      return ultimate_ndao(program, pair);
    case OperatorKind::kGZ:
      return gz_ndao(program, pair);
    case OperatorKind::kDMTdet: {
      const ApproxPair d = dmt_det(program, pair);
      return {NdSet{d.lower}, NdSet{d.upper}};
    }
  }
  return {};
}

Operator::Operator(const Program& program, OperatorKind kind)
    : Operator(program, kind, nullptr) {}

Operator::Operator(const Program& program, OperatorKind kind, ApplyFn fn)
    : program_(&program), kind_(kind), fn_(std::move(fn)) {
  require_operator_class(kind, program);
}

const NdSet& Operator::ic_at(AtomSet x) {
  auto it = ic_.find(x.bits());
  if (it == ic_.end()) it = ic_.emplace(x.bits(), ic(*program_, x)).first;
  return it->second;
}

const NdPair& Operator::operator()(const ApproxPair& pair) {
  const std::uint64_t key = (std::uint64_t{pair.lower.bits()} << 32) | pair.upper.bits();
  auto it = pairs_.find(key);
  if (it != pairs_.end()) return it->second;
  NdPair value;
  if (fn_) {
    value = fn_(kind_, *program_, pair);
  } else if (kind_ == OperatorKind::kUltimate) {
    value = ultimate_with(pair, [&](AtomSet z) { return ic_at(z); });
  } else {
    value = apply(kind_, *program_, pair);
  }
  return pairs_.emplace(key, std::move(value)).first->second;
}

}  // namespace aftlab
