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

#include "aftlab/semantics.hpp"

#include <algorithm>
#include <map>

#include "aftlab/error.hpp"

namespace aftlab {

namespace {

constexpr SemanticsKind kAllSemantics[] = {
    SemanticsKind::kFixpoints,    SemanticsKind::kStable,
    SemanticsKind::kTotalStable,  SemanticsKind::kKripkeKleene,
    SemanticsKind::kWellFounded,  SemanticsKind::kHT,
    SemanticsKind::kSEQ,          SemanticsKind::kSEQApprox,
    SemanticsKind::kThreeValuedStable, SemanticsKind::kGZAnswerSets,
};

std::vector<AtomSet> minimal_sets(const std::vector<AtomSet>& sets) {
  std::vector<AtomSet> out;
  for (AtomSet s : sets) {
    const bool dominated = std::any_of(sets.begin(), sets.end(),
                                       [&](AtomSet o) { return o.strict_subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

// ⊆-least v in [lo, hi] with f(v) = v, if the fixpoints have a least element.
template <typename F>
std::optional<AtomSet> least_fixpoint(AtomSet lo, AtomSet hi, F&& f) {
  std::vector<AtomSet> fixed;
  for_each_in_interval(lo, hi, [&](AtomSet v) {
    if (f(v) == v) fixed.push_back(v);
    return true;
  });
  auto mins = minimal_sets(fixed);
  if (mins.size() != 1) return std::nullopt;
  return mins.front();
}

template <typename Pred>
std::vector<ApproxPair> undominated(const std::vector<ApproxPair>& pairs, Pred&& below) {
  std::vector<ApproxPair> out;
  for (const auto& a : pairs) {
    const bool dominated = std::any_of(pairs.begin(), pairs.end(), [&](const ApproxPair& b) {
      return b != a && below(b, a);
    });
    if (!dominated) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ApproxPair> all_consistent(const Program& program) {
  return enumerate_consistent_pairs(program.universe(), kMaxAtoms);
}

// Rule bodies and heads prepared for three-valued model checks.
class ModelChecker {
 public:
  explicit ModelChecker(const Program& q) : universe_(q.universe()) {
    for (std::size_t i = 0; i < q.rules().size(); ++i) {
      rules_.emplace_back(q.compiled()[i].head, q.rules()[i].body_formula());
    }
  }

  bool is_model(const ApproxPair& pair) const {
    for (const auto& [head, body] : rules_) {
      const unsigned h = (head.intersects(pair.lower) ? 1u : 0u) |
                         (head.intersects(pair.upper) ? 2u : 0u);
      if (!leq_t(eval(universe_, pair, body), static_cast<TruthValue>(h))) return false;
    }
    return true;
  }

 private:
  AtomUniverse universe_;
  std::vector<std::pair<AtomSet, Formula>> rules_;
};

void require_dn_aggregate_free(const Program& program, const char* what) {
  const auto cls = classify(program);
  if (!cls.is_disjunctively_normal() || cls.has_aggregates) {
    fail_precondition(std::string(what) + " needs a disjunctively normal aggregate-free program");
  }
}

}  // namespace

std::string to_string(SemanticsKind kind) {
  switch (kind) {
    case SemanticsKind::kFixpoints:
      return "fixpoints";
    case SemanticsKind::kStable:
      return "stable";
    case SemanticsKind::kTotalStable:
      return "total-stable";
    case SemanticsKind::kKripkeKleene:
      return "kk";
    case SemanticsKind::kWellFounded:
      return "wf";
    case SemanticsKind::kHT:
      return "ht";
    case SemanticsKind::kSEQ:
      return "seq";
    case SemanticsKind::kSEQApprox:
      return "seq-approx";
    case SemanticsKind::kThreeValuedStable:
      return "three-valued-stable";
    case SemanticsKind::kGZAnswerSets:
      return "gz-answer-sets";
  }
  return "fixpoints";
}

std::optional<SemanticsKind> parse_semantics_kind(std::string_view name) {
  for (SemanticsKind k : kAllSemantics) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

bool uses_operator(SemanticsKind kind) {
  switch (kind) {
    case SemanticsKind::kKripkeKleene:
    case SemanticsKind::kWellFounded:
    case SemanticsKind::kThreeValuedStable:
    case SemanticsKind::kGZAnswerSets:
      return false;
    default:
      return true;
  }
}

std::vector<ApproxPair> fixpoints(Operator& op) {
  std::vector<ApproxPair> out;
  for (const auto& pair : all_consistent(op.program())) {
    const NdPair& r = op(pair);
    if (r.lower_set.contains(pair.lower) && r.upper_set.contains(pair.upper)) {
      out.push_back(pair);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NdSet complete_lower_stable(Operator& op, AtomSet y) {
  const AtomSet top = op.kind() == OperatorKind::kIC ? op.program().universe().full() : y;
  std::vector<AtomSet> fixed;
  for_each_in_interval(AtomSet{}, top, [&](AtomSet x) {
    if (op(ApproxPair{x, y}).lower_set.contains(x)) fixed.push_back(x);
    return true;
  });
  return NdSet(minimal_sets(fixed));
}

NdSet complete_upper_stable(Operator& op, AtomSet x) {
  const AtomSet bottom = op.kind() == OperatorKind::kIC ? AtomSet{} : x;
  std::vector<AtomSet> fixed;
  for_each_in_interval(bottom, op.program().universe().full(), [&](AtomSet y) {
    if (op(ApproxPair{x, y}).upper_set.contains(y)) fixed.push_back(y);
    return true;
  });
  return NdSet(minimal_sets(fixed));
}

std::vector<ApproxPair> stable_fixpoints(Operator& op) {
  std::map<std::uint32_t, NdSet> upper;
  std::vector<ApproxPair> out;
  for_each_in_interval(AtomSet{}, op.program().universe().full(), [&](AtomSet y) {
    for (AtomSet x : complete_lower_stable(op, y)) {
      if (!x.subset_of(y)) continue;
      auto it = upper.find(x.bits());
      if (it == upper.end()) it = upper.emplace(x.bits(), complete_upper_stable(op, x)).first;
      if (it->second.contains(y)) out.push_back({x, y});
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AtomSet> total_stable_fixpoints(Operator& op) {
  std::vector<AtomSet> out;
  for (const auto& pair : stable_fixpoints(op)) {
    if (pair.is_total()) out.push_back(pair.lower);
  }
  return out;
}

ApproxPair kk_fixpoint_det(const Program& program) {
  require_operator_class(OperatorKind::kDMTdet, program);
  ApproxPair pair{AtomSet{}, program.universe().full()};
  for (;;) {
    const ApproxPair next = dmt_det(program, pair);
    if (next == pair) return pair;
    pair = next;
  }
}

std::vector<ApproxPair> det_stable_pairs(const Program& program) {
  require_operator_class(OperatorKind::kDMTdet, program);
  const AtomSet full = program.universe().full();
  std::map<std::uint32_t, std::optional<AtomSet>> upper;
  std::vector<ApproxPair> out;
  for_each_in_interval(AtomSet{}, full, [&](AtomSet y) {
    const auto x = least_fixpoint(AtomSet{}, y, [&](AtomSet v) {
      return dmt_det(program, ApproxPair{v, y}).lower;
    });
    if (!x) return true;
    auto it = upper.find(x->bits());
    if (it == upper.end()) {
      const auto lfp = least_fixpoint(*x, full, [&](AtomSet v) {
        return dmt_det(program, ApproxPair{*x, v}).upper;
      });
      it = upper.emplace(x->bits(), lfp).first;
    }
    if (it->second == y) out.push_back({*x, y});
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

WellFounded wf_fixpoint_det(const Program& program) {
  return {undominated(det_stable_pairs(program),
                      [](const ApproxPair& b, const ApproxPair& a) { return leq_i(b, a); })};
}

std::vector<ApproxPair> ht_models_program(const Program& program) {
  require_dn_aggregate_free(program, "HT models");
  const auto& u = program.universe();
  std::vector<std::pair<AtomSet, Formula>> rules;
  for (std::size_t i = 0; i < program.rules().size(); ++i) {
    rules.emplace_back(program.compiled()[i].head, program.rules()[i].body_formula());
  }
  std::vector<ApproxPair> out;
  for (const auto& pair : all_consistent(program)) {
    const bool ok = std::all_of(rules.begin(), rules.end(), [&](const auto& r) {
      return ht_satisfies_rule(u, pair, r.second, r.first);
    });
    if (ok) out.push_back(pair);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ApproxPair> ht_pairs(Operator& op) {
  std::vector<ApproxPair> out;
  for (const auto& pair : all_consistent(op.program())) {
    if (!smyth_leq(op.ic_at(pair.upper), NdSet{pair.upper})) continue;
    if (!smyth_leq(op(pair).lower_set, NdSet{pair.lower})) continue;
    out.push_back(pair);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ApproxPair> min_t(const std::vector<ApproxPair>& pairs) {
  return undominated(pairs, [](const ApproxPair& b, const ApproxPair& a) { return leq_t(b, a); });
}

std::vector<ApproxPair> max_i(const std::vector<ApproxPair>& pairs) {
  return undominated(pairs, [](const ApproxPair& b, const ApproxPair& a) { return leq_i(a, b); });
}

std::vector<ApproxPair> maximal_canonical(const std::vector<ApproxPair>& pairs) {
  return undominated(pairs, [](const ApproxPair& b, const ApproxPair& a) {
    return difference(b.upper, b.lower).strict_subset_of(difference(a.upper, a.lower));
  });
}

std::vector<ApproxPair> seq(Operator& op) { return maximal_canonical(min_t(ht_pairs(op))); }

std::vector<ApproxPair> seq_no_difference(Operator& op) { return max_i(min_t(ht_pairs(op))); }

bool is_three_valued_model(const Program& program, const ApproxPair& pair) {
  return ModelChecker(program).is_model(pair);
}

bool is_three_valued_stable(const Program& program, const ApproxPair& pair) {
  const ModelChecker models(gl_transform(program, pair));
  if (!models.is_model(pair)) return false;
  return for_each_in_interval(AtomSet{}, pair.upper, [&](AtomSet z) {
    return for_each_in_interval(AtomSet{}, pair.lower & z, [&](AtomSet w) {
      const ApproxPair smaller{w, z};
      return smaller == pair || !models.is_model(smaller);
    });
  });
}

std::vector<ApproxPair> three_valued_stable(const Program& program) {
  require_dn_aggregate_free(program, "three-valued stable models");
  std::vector<ApproxPair> out;
  for (const auto& pair : all_consistent(program)) {
    if (is_three_valued_stable(program, pair)) out.push_back(pair);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AtomSet> gz_answer_sets(const Program& program) {
  std::vector<AtomSet> out;
  for_each_in_interval(AtomSet{}, program.universe().full(), [&](AtomSet x) {
    if (is_three_valued_stable(gz_reduct(program, x), ApproxPair{x, x})) out.push_back(x);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

SemanticsResult run_semantics(SemanticsKind semantics, OperatorKind kind,
                              const Program& program, std::size_t cap) {
  enforce_atom_cap(program.universe(), cap);
  SemanticsResult result;
  result.semantics = semantics;
  result.universe = program.universe();
  if (!uses_operator(semantics)) {
    if (semantics == SemanticsKind::kKripkeKleene) {
      result.op = OperatorKind::kDMTdet;
      result.models = {kk_fixpoint_det(program)};
    } else if (semantics == SemanticsKind::kWellFounded) {
      result.op = OperatorKind::kDMTdet;
      const WellFounded wf = wf_fixpoint_det(program);
      result.models = wf.minimal;
      result.anomaly = wf.anomaly();
    } else if (semantics == SemanticsKind::kThreeValuedStable) {
      result.models = three_valued_stable(program);
    } else {
      for (AtomSet x : gz_answer_sets(program)) result.models.push_back({x, x});
    }
    return result;
  }
  result.op = kind;
  Operator op(program, kind);
  switch (semantics) {
    case SemanticsKind::kFixpoints:
      result.models = fixpoints(op);
      break;
    case SemanticsKind::kStable:
      result.models = stable_fixpoints(op);
      break;
    case SemanticsKind::kTotalStable:
      for (AtomSet x : total_stable_fixpoints(op)) result.models.push_back({x, x});
      break;
    case SemanticsKind::kHT:
      result.models = ht_pairs(op);
      break;
    case SemanticsKind::kSEQ:
      result.models = seq(op);
      break;
    case SemanticsKind::kSEQApprox:
      result.models = seq_no_difference(op);
      break;
    default:
      break;
  }
  return result;
}

}  // namespace aftlab
