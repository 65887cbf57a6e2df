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

#include "aftlab/laws.hpp"

#include <algorithm>
#include <map>

#include "aftlab/error.hpp"
#include "aftlab/semantics.hpp"
#include "aftlab/syntax.hpp"

namespace aftlab {

namespace {

using Verdict = std::optional<std::string>;

const std::string kErrorPrefix = "error: ";

constexpr OperatorKind kNdaoKinds[] = {OperatorKind::kIC, OperatorKind::kDMT,
                                       OperatorKind::kUltimate, OperatorKind::kGZ};

bool dn_aggregate_free(const Program& p) {
  const auto c = classify(p);
  return c.is_disjunctively_normal() && !c.has_aggregates;
}

bool gz_reducible(const Program& p) {
  const auto c = classify(p);
  return c.is_disjunctively_normal() && !c.has_negated_aggregates;
}

bool always(const Program&) { return true; }
bool ic_defined(const Program& p) { return supports(OperatorKind::kIC, p); }
bool det_defined(const Program& p) { return supports(OperatorKind::kDMTdet, p); }

// Operators for every kind defined on the program, sharing one ApplyFn.
class Operators {
 public:
  Operators(const Program& p, const ApplyFn& fn) : program_(p), fn_(fn) {}

  Operator& get(OperatorKind k) {
    auto it = ops_.find(k);
    if (it == ops_.end()) it = ops_.try_emplace(k, program_, k, fn_).first;
    return it->second;
  }

  std::vector<OperatorKind> kinds(bool include_det) const {
    std::vector<OperatorKind> out;
    for (OperatorKind k : kAllOperatorKinds) {
      if (k == OperatorKind::kDMTdet && !include_det) continue;
      if (supports(k, program_)) out.push_back(k);
    }
    return out;
  }

  const Program& program() const { return program_; }
  const AtomUniverse& universe() const { return program_.universe(); }

 private:
  const Program& program_;
  ApplyFn fn_;
  std::map<OperatorKind, Operator> ops_;
};

std::string at(const AtomUniverse& u, const ApproxPair& pair) { return format_pair(u, pair); }

std::string pairs_text(const AtomUniverse& u, const std::vector<ApproxPair>& pairs) {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ", ";
    out += format_pair(u, pairs[i]);
  }
  return out + "}";
}

std::vector<ApproxPair> totals(const std::vector<ApproxPair>& pairs) {
  std::vector<ApproxPair> out;
  std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out),
               [](const ApproxPair& p) { return p.is_total(); });
  return out;
}

std::vector<ApproxPair> as_pairs(const std::vector<AtomSet>& sets) {
  std::vector<ApproxPair> out;
  for (AtomSet x : sets) out.push_back({x, x});
  return out;
}

std::vector<AtomSet> all_sets(const AtomUniverse& u) { return enumerate_interval(AtomSet{}, u.full()); }

Verdict monotonicity(Operators& ops) {
  const auto pairs = enumerate_consistent_pairs(ops.universe(), kMaxAtoms);
  for (OperatorKind k : ops.kinds(true)) {
    Operator& op = ops.get(k);
    for (const auto& a : pairs) {
      for (const auto& b : pairs) {
        if (a == b || !leq_i(a, b)) continue;
        if (!aprec_leq(op(a), op(b))) {
          return to_string(k) + " at " + at(ops.universe(), a) + " ≤i " + at(ops.universe(), b) +
                 " gives incomparable results";
        }
      }
    }
  }
  return std::nullopt;
}

Verdict exactness(Operators& ops) {
  for (OperatorKind k : ops.kinds(false)) {
    Operator& op = ops.get(k);
    for (AtomSet x : all_sets(ops.universe())) {
      const NdPair& r = op({x, x});
      const NdSet& expected = op.ic_at(x);
      if (r.lower_set != expected || r.upper_set != expected) {
        return to_string(k) + " at " + at(ops.universe(), {x, x}) + " gives " +
               format_ndset(ops.universe(), r.lower_set) + " × " +
               format_ndset(ops.universe(), r.upper_set) + ", expected ic = " +
               format_ndset(ops.universe(), expected);
      }
    }
  }
  return std::nullopt;
}

Verdict below_ultimate(Operators& ops, const std::vector<OperatorKind>& kinds) {
  Operator& ult = ops.get(OperatorKind::kUltimate);
  for (const auto& pair : enumerate_consistent_pairs(ops.universe(), kMaxAtoms)) {
    for (OperatorKind k : kinds) {
      if (!aprec_leq(ops.get(k)(pair), ult(pair))) {
        return to_string(k) + " is not ⪯ ultimate at " + at(ops.universe(), pair);
      }
    }
  }
  return std::nullopt;
}

Verdict precision_chain(Operators& ops) {
  Operator& gz = ops.get(OperatorKind::kGZ);
  Operator& dmt = ops.get(OperatorKind::kDMT);
  Operator& ult = ops.get(OperatorKind::kUltimate);
  for (const auto& pair : enumerate_consistent_pairs(ops.universe(), kMaxAtoms)) {
    if (!aprec_leq(gz(pair), dmt(pair))) {
      return "gz is not ⪯ dmt at " + at(ops.universe(), pair);
    }
    if (!aprec_leq(dmt(pair), ult(pair))) {
      return "dmt is not ⪯ ultimate at " + at(ops.universe(), pair);
    }
  }
  return std::nullopt;
}

Verdict ultimate_maximality(Operators& ops) {
  std::vector<OperatorKind> kinds{OperatorKind::kDMT, OperatorKind::kGZ};
  if (ic_defined(ops.program())) kinds.insert(kinds.begin(), OperatorKind::kIC);
  return below_ultimate(ops, kinds);
}

Verdict symmetry(Operators& ops) {
  Operator& op = ops.get(OperatorKind::kIC);
  const auto sets = all_sets(ops.universe());
  for (AtomSet x : sets) {
    for (AtomSet y : sets) {
      if (op({x, y}).lower_set != op({y, x}).upper_set) {
        return "ic lower at " + at(ops.universe(), {x, y}) + " differs from upper at " +
               at(ops.universe(), {y, x});
      }
    }
  }
  return std::nullopt;
}

Verdict upwards_coherence(Operators& ops) {
  for (OperatorKind k : ops.kinds(false)) {
    for (const auto& pair : enumerate_consistent_pairs(ops.universe(), kMaxAtoms)) {
      const NdPair& r = ops.get(k)(pair);
      if (!smyth_leq(r.lower_set, r.upper_set)) {
        return to_string(k) + " lower set is not ⪯S upper set at " + at(ops.universe(), pair);
      }
    }
  }
  return std::nullopt;
}

Verdict non_disjunctive_collapse(Operators& ops) {
  auto join = [](const NdSet& s) {
    AtomSet out;
    for (AtomSet e : s) out |= e;
    return out;
  };
  for (const auto& pair : enumerate_consistent_pairs(ops.universe(), kMaxAtoms)) {
    const NdPair& nd = ops.get(OperatorKind::kDMT)(pair);
    const NdPair& det = ops.get(OperatorKind::kDMTdet)(pair);
    const ApproxPair joined{join(nd.lower_set), join(nd.upper_set)};
    const ApproxPair expected{join(det.lower_set), join(det.upper_set)};
    if (joined != expected) {
      return "dmt joins to " + at(ops.universe(), joined) + " but dmt-det gives " +
             at(ops.universe(), expected) + " at " + at(ops.universe(), pair);
    }
  }
  return std::nullopt;
}

Verdict non_emptiness(Operators& ops) {
  for (OperatorKind k : ops.kinds(true)) {
    for (const auto& pair : enumerate_consistent_pairs(ops.universe(), kMaxAtoms)) {
      const NdPair& r = ops.get(k)(pair);
      if (r.lower_set.empty() || r.upper_set.empty()) {
        return to_string(k) + " returns an empty set at " + at(ops.universe(), pair);
      }
    }
  }
  return std::nullopt;
}

Verdict ht_models(Operators& ops) {
  const auto algebraic = ht_pairs(ops.get(OperatorKind::kIC));
  const auto direct = ht_models_program(ops.program());
  if (algebraic == direct) return std::nullopt;
  return "ht pairs of ic " + pairs_text(ops.universe(), algebraic) + " differ from HT models " +
         pairs_text(ops.universe(), direct);
}

Verdict ht_total_stable(Operators& ops) {
  for (OperatorKind k : ops.kinds(false)) {
    const auto from_ht = totals(min_t(ht_pairs(ops.get(k))));
    const auto stable = totals(stable_fixpoints(ops.get(k)));
    if (from_ht != stable) {
      return to_string(k) + ": total ≤t-minimal HT pairs " + pairs_text(ops.universe(), from_ht) +
             " differ from total stable fixpoints " + pairs_text(ops.universe(), stable);
    }
  }
  return std::nullopt;
}

Verdict seq_nonempty(Operators& ops) {
  for (OperatorKind k : ops.kinds(true)) {
    if (seq(ops.get(k)).empty()) return to_string(k) + " has no semi-equilibrium pairs";
  }
  return std::nullopt;
}

Verdict seq_coincidence(Operators& ops) {
  for (OperatorKind k : ops.kinds(false)) {
    const auto s = seq(ops.get(k));
    if (totals(s).empty()) continue;
    const auto stable = as_pairs(total_stable_fixpoints(ops.get(k)));
    if (s != stable) {
      return to_string(k) + ": seq " + pairs_text(ops.universe(), s) +
             " contains a total pair but differs from the total stable fixpoints " +
             pairs_text(ops.universe(), stable);
    }
  }
  return std::nullopt;
}

Verdict seq_approx_superset(Operators& ops) {
  for (OperatorKind k : ops.kinds(true)) {
    const auto exact = seq(ops.get(k));
    const auto approx = seq_no_difference(ops.get(k));
    if (!std::includes(approx.begin(), approx.end(), exact.begin(), exact.end())) {
      return to_string(k) + ": " + pairs_text(ops.universe(), approx) + " misses part of seq " +
             pairs_text(ops.universe(), exact);
    }
  }
  return std::nullopt;
}

Verdict stable_minimal(Operators& ops) {
  for (OperatorKind k : {OperatorKind::kDMT, OperatorKind::kGZ, OperatorKind::kUltimate}) {
    const auto minimal = min_t(fixpoints(ops.get(k)));
    for (const auto& s : stable_fixpoints(ops.get(k))) {
      if (!std::binary_search(minimal.begin(), minimal.end(), s)) {
        return to_string(k) + " stable fixpoint " + at(ops.universe(), s) +
               " is not a ≤t-minimal fixpoint";
      }
    }
  }
  return std::nullopt;
}

Verdict gz_minimal_total(Operators& ops) {
  for (const auto& m : min_t(fixpoints(ops.get(OperatorKind::kGZ)))) {
    if (!m.is_total()) {
      return "gz has the non-total ≤t-minimal fixpoint " + at(ops.universe(), m);
    }
  }
  return std::nullopt;
}

Verdict gz_answer_set_law(Operators& ops) {
  const auto stable = total_stable_fixpoints(ops.get(OperatorKind::kGZ));
  const auto answers = gz_answer_sets(ops.program());
  if (stable == answers) return std::nullopt;
  return "total gz stable fixpoints " + pairs_text(ops.universe(), as_pairs(stable)) +
         " differ from GZ answer sets " + pairs_text(ops.universe(), as_pairs(answers));
}

Verdict dmt_det_stable(Operators& ops) {
  const auto nd = stable_fixpoints(ops.get(OperatorKind::kDMT));
  const auto det = det_stable_pairs(ops.program());
  if (nd == det) return std::nullopt;
  return "dmt stable fixpoints " + pairs_text(ops.universe(), nd) +
         " differ from dmt-det stable pairs " + pairs_text(ops.universe(), det);
}

Verdict prefixpoints(Operators& ops) {
  for (OperatorKind k : ops.kinds(false)) {
    Operator& op = ops.get(k);
    for (AtomSet y : all_sets(ops.universe())) {
      const AtomSet top = k == OperatorKind::kIC ? ops.universe().full() : y;
      std::vector<AtomSet> pre;
      for (AtomSet x : enumerate_interval(AtomSet{}, top)) {
        if (smyth_leq(op({x, y}).lower_set, NdSet{x})) pre.push_back(x);
      }
      std::vector<AtomSet> minimal;
      for (AtomSet x : pre) {
        if (std::none_of(pre.begin(), pre.end(), [&](AtomSet o) { return o.strict_subset_of(x); })) {
          minimal.push_back(x);
        }
      }
      const NdSet fixed = complete_lower_stable(op, y);
      if (NdSet(minimal) != fixed) {
        return to_string(k) + " at y = " + ops.universe().format(y) +
               ": minimal pre-fixpoints " + format_ndset(ops.universe(), NdSet(minimal)) +
               " differ from minimal fixpoints " + format_ndset(ops.universe(), fixed);
      }
    }
  }
  return std::nullopt;
}

Verdict total_lower_bound(Operators& ops) {
  for (OperatorKind k : ops.kinds(false)) {
    const auto stable = stable_fixpoints(ops.get(k));
    for (AtomSet x : all_sets(ops.universe())) {
      const bool is_stable = std::binary_search(stable.begin(), stable.end(), ApproxPair{x, x});
      const bool lower = complete_lower_stable(ops.get(k), x).contains(x);
      if (is_stable != lower) {
        return to_string(k) + " at " + at(ops.universe(), {x, x}) + ": stable = " +
               (is_stable ? "yes" : "no") + " but minimal lower fixpoint = " +
               (lower ? "yes" : "no");
      }
    }
  }
  return std::nullopt;
}

Verdict models_are_ht(Operators& ops) {
  const auto ht = ht_models_program(ops.program());
  for (const auto& pair : enumerate_consistent_pairs(ops.universe(), kMaxAtoms)) {
    if (is_three_valued_model(ops.program(), pair) &&
        !std::binary_search(ht.begin(), ht.end(), pair)) {
      return "three-valued model " + at(ops.universe(), pair) + " is not an HT model";
    }
  }
  return std::nullopt;
}

Verdict three_valued_total(Operators& ops) {
  const auto gl = totals(three_valued_stable(ops.program()));
  const auto ic = as_pairs(total_stable_fixpoints(ops.get(OperatorKind::kIC)));
  if (gl == ic) return std::nullopt;
  return "total three-valued stable models " + pairs_text(ops.universe(), gl) +
         " differ from total ic stable fixpoints " + pairs_text(ops.universe(), ic);
}

struct LawDef {
  LawInfo info;
  bool (*applies)(const Program&);
  Verdict (*check)(Operators&);
};

const std::vector<LawDef>& law_table() {
  static const std::vector<LawDef> table = {
      {{"monotonicity", "i1 ≤i i2 implies O(i1) ⪯A O(i2), every kind"}, always, monotonicity},
      {{"exactness", "O(x,x) = ic(x) × ic(x) for ic, dmt, ultimate, gz"}, always, exactness},
      {{"precision-chain", "gz ⪯A dmt ⪯A ultimate pointwise"}, always, precision_chain},
      {{"ultimate-maximality", "ic, dmt, gz ⪯A ultimate pointwise"}, always, ultimate_maximality},
      {{"symmetry", "ic lower at (x,y) = ic upper at (y,x)"}, ic_defined, symmetry},
      {{"upwards-coherence", "lower set ⪯S upper set"}, always, upwards_coherence},
      {{"non-disjunctive-collapse", "dmt joins to dmt-det on atomic heads"}, det_defined,
       non_disjunctive_collapse},
      {{"non-emptiness", "no operator returns an empty set"}, always, non_emptiness},
      {{"ht-models", "HT pairs of ic = HT models of the program"}, dn_aggregate_free, ht_models},
      {{"ht-total-stable", "total ≤t-minimal HT pairs = total stable fixpoints"}, always,
       ht_total_stable},
      {{"seq-nonempty", "seq is never empty"}, always, seq_nonempty},
      {{"seq-coincidence", "a total seq pair forces seq = total stable fixpoints"}, always,
       seq_coincidence},
      {{"seq-approx-superset", "max_i of min_t HT pairs contains seq"}, always,
       seq_approx_superset},
      {{"stable-minimal", "stable fixpoints are ≤t-minimal fixpoints (dmt, gz, ultimate)"},
       always, stable_minimal},
      {{"gz-minimal-total", "≤t-minimal fixpoints of gz are total"}, always, gz_minimal_total},
      {{"gz-answer-sets", "total gz stable fixpoints = GZ answer sets"}, gz_reducible,
       gz_answer_set_law},
      {{"dmt-det-stable", "dmt stable fixpoints = dmt-det stable pairs"}, det_defined,
       dmt_det_stable},
      {{"prefixpoints", "minimal pre-fixpoints of O_l(., y) = minimal fixpoints"}, always,
       prefixpoints},
      {{"total-lower-bound", "(x,x) stable iff x is a minimal fixpoint of O_l(., x)"}, always,
       total_lower_bound},
      {{"models-are-ht", "three-valued models are HT models"}, dn_aggregate_free, models_are_ht},
      {{"three-valued-total", "total three-valued stable models = total ic stable fixpoints"},
       dn_aggregate_free, three_valued_total},
  };
  return table;
}

const LawDef& find_law(std::string_view name) {
  for (const auto& d : law_table()) {
    if (d.info.name == name) return d;
  }
  throw Error(ErrorKind::kUsage, "unknown law '" + std::string(name) + "'");
}

}  // namespace

const std::vector<LawInfo>& all_laws() {
  static const std::vector<LawInfo> infos = [] {
    std::vector<LawInfo> out;
    for (const auto& d : law_table()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

bool is_law(std::string_view name) {
  return std::any_of(law_table().begin(), law_table().end(),
                     [&](const LawDef& d) { return d.info.name == name; });
}

bool law_applies(std::string_view name, const Program& program) {
  return find_law(name).applies(program);
}

std::optional<std::string> check_law(std::string_view name, const Program& program,
                                     const ApplyFn& fn) {
  const LawDef& law = find_law(name);
  Operators ops(program, fn);
  try {
    return law.check(ops);
  } catch (const Error& e) {
    return kErrorPrefix + e.what();
  }
}

Program shrink(const Program& program, const std::function<bool(const Program&)>& fails) {
  auto still_fails = [&](std::vector<Rule> rules) -> std::optional<Program> {
    try {
      Program candidate(std::move(rules));
      if (fails(candidate)) return candidate;
    } catch (const Error&) {
    }
    return std::nullopt;
  };
  Program current = program;
  bool progress = true;
  while (progress) {
    progress = false;
    const auto& rules = current.rules();
    std::vector<std::vector<Rule>> candidates;
    for (std::size_t i = 0; i < rules.size() && rules.size() > 1; ++i) {
      auto c = rules;
      c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
      candidates.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const Rule& r = rules[i];
      for (std::size_t h = 0; h < r.head().size() && r.head().size() > 1; ++h) {
        auto head = r.head();
        head.erase(head.begin() + static_cast<std::ptrdiff_t>(h));
        auto c = rules;
        c[i] = r.has_formula_body() ? Rule(head, r.formula()) : Rule(head, r.literals());
        candidates.push_back(std::move(c));
      }
      if (r.has_formula_body()) continue;
      const Conjunction& body = r.literals();
      for (std::size_t l = 0; l < body.size(); ++l) {
        Conjunction smaller = body;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(l));
        auto c = rules;
        c[i] = Rule(r.head(), std::move(smaller));
        candidates.push_back(std::move(c));
        if (!body[l].is_aggregate()) continue;
        const auto& entries = body[l].agg().term.entries;
        for (std::size_t e = 0; e < entries.size() && entries.size() > 1; ++e) {
          AggregateAtom agg = body[l].agg();
          agg.term.entries.erase(agg.term.entries.begin() + static_cast<std::ptrdiff_t>(e));
          Conjunction edited = body;
          edited[l] = BodyLiteral::aggregate(std::move(agg), body[l].negated);
          auto c2 = rules;
          c2[i] = Rule(r.head(), std::move(edited));
          candidates.push_back(std::move(c2));
        }
      }
    }
    for (auto& c : candidates) {
      if (auto smaller = still_fails(std::move(c))) {
        current = std::move(*smaller);
        progress = true;
        break;
      }
    }
  }
  return current;
}

std::vector<LawReport> run_laws(const std::vector<Program>& programs,
                                const std::vector<std::string>& names, const ApplyFn& fn) {
  std::vector<LawReport> reports;
  for (const auto& name : names) {
    const LawDef& law = find_law(name);
    LawReport report;
    report.name = name;
    for (const auto& p : programs) {
      if (!law.applies(p)) {
        ++report.skipped;
        continue;
      }
      ++report.checked;
      const auto first = check_law(name, p, fn);
      if (!first) continue;
      const bool crashed = first->rfind(kErrorPrefix, 0) == 0;
      const Program small = shrink(p, [&](const Program& q) {
        if (!law.applies(q)) return false;
        const auto v = check_law(name, q, fn);
        return v && (v->rfind(kErrorPrefix, 0) == 0) == crashed;
      });
      report.failure = LawFailure{*check_law(name, small, fn), format_program(small)};
      break;
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

std::string format_reports(const std::vector<LawReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += (r.passed() ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.checked) +
           " checked, " + std::to_string(r.skipped) + " skipped)\n";
    if (!r.failure) continue;
    out += "  " + r.failure->message + "\n  reproducer:\n";
    std::size_t start = 0;
    const std::string& text = r.failure->reproducer;
    while (start < text.size()) {
      const auto nl = text.find('\n', start);
      out += "    " + text.substr(start, nl - start) + "\n";
      start = nl == std::string::npos ? text.size() : nl + 1;
    }
  }
  return out;
}

}  // namespace aftlab
