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

#include "aftlab/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "aftlab/error.hpp"

namespace aftlab {

AtomUniverse::AtomUniverse(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
  if (!names_.empty() && names_.front().empty()) {
    fail_precondition("atom names must be non-empty");
  }
  if (names_.size() > kMaxAtoms) {
    throw Error(ErrorKind::kCapExceeded,
                "universe has " + std::to_string(names_.size()) +
                    " atoms; the hard limit is " + std::to_string(kMaxAtoms));
  }
}

std::optional<std::size_t> AtomUniverse::index(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t AtomUniverse::require_index(std::string_view name) const {
  if (auto i = index(name)) return *i;
  fail_precondition("unknown atom '" + std::string(name) + "'");
}

AtomSet AtomUniverse::set_of(std::initializer_list<std::string_view> names) const {
  AtomSet out;
  for (auto n : names) out |= AtomSet::singleton(require_index(n));
  return out;
}

AtomSet AtomUniverse::set_of(std::span<const std::string> names) const {
  AtomSet out;
  for (const auto& n : names) out |= AtomSet::singleton(require_index(n));
  return out;
}

std::vector<std::string> AtomUniverse::names_of(AtomSet set) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (set.contains(i)) out.push_back(names_[i]);
  }
  return out;
}

std::string AtomUniverse::format(AtomSet set) const {
  if (set.empty()) return "∅";
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!set.contains(i)) continue;
    if (!first) out += ',';
    out += names_[i];
    first = false;
  }
  return out + "}";
}

void enforce_atom_cap(const AtomUniverse& universe, std::size_t cap) {
  if (universe.size() > cap) {
    throw Error(ErrorKind::kCapExceeded,
                "universe has " + std::to_string(universe.size()) +
                    " atoms, above the cap of " + std::to_string(cap) +
                    " (raise it with --max-atoms or AFTLAB_MAX_ATOMS)");
  }
}

std::string format_pair(const AtomUniverse& universe, const ApproxPair& pair) {
  return "(" + universe.format(pair.lower) + ", " + universe.format(pair.upper) + ")";
}

NdSet::NdSet(std::initializer_list<AtomSet> elements)
    : NdSet(std::vector<AtomSet>(elements)) {}

NdSet::NdSet(std::vector<AtomSet> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool NdSet::contains(AtomSet element) const {
  return std::binary_search(elements_.begin(), elements_.end(), element);
}

void NdSet::insert(AtomSet element) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), element);
  if (it == elements_.end() || *it != element) elements_.insert(it, element);
}

void NdSet::merge(const NdSet& other) {
  std::vector<AtomSet> out;
  out.reserve(elements_.size() + other.elements_.size());
  std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                 other.elements_.end(), std::back_inserter(out));
  elements_ = std::move(out);
}

std::string format_ndset(const AtomUniverse& universe, const NdSet& set) {
  std::string out = "{";
  bool first = true;
  for (AtomSet e : set) {
    if (!first) out += ',';
    out += universe.format(e);
    first = false;
  }
  return out + "}";
}

bool leq_t(const ApproxPair& a, const ApproxPair& b) {
  return a.lower.subset_of(b.lower) && a.upper.subset_of(b.upper);
}

bool leq_i(const ApproxPair& a, const ApproxPair& b) {
  return a.lower.subset_of(b.lower) && b.upper.subset_of(a.upper);
}

bool smyth_leq(const NdSet& x, const NdSet& y) {
  return std::all_of(y.begin(), y.end(), [&](AtomSet above) {
    return std::any_of(x.begin(), x.end(),
                       [&](AtomSet below) { return below.subset_of(above); });
  });
}

bool hoare_leq(const NdSet& x, const NdSet& y) {
  return std::all_of(x.begin(), x.end(), [&](AtomSet below) {
    return std::any_of(y.begin(), y.end(),
                       [&](AtomSet above) { return below.subset_of(above); });
  });
}

bool aprec_leq(const NdPair& a, const NdPair& b) {
  return smyth_leq(a.lower_set, b.lower_set) && hoare_leq(b.upper_set, a.upper_set);
}

std::vector<AtomSet> enumerate_interval(AtomSet x, AtomSet y) {
  if (!x.subset_of(y)) fail_precondition("interval bounds are inconsistent (x ⊄ y)");
  std::vector<AtomSet> out;
  out.reserve(std::size_t{1} << (y - x).size());
  for_each_in_interval(x, y, [&](AtomSet z) {
    out.push_back(z);
    return true;
  });
  return out;
}

std::vector<ApproxPair> enumerate_consistent_pairs(const AtomUniverse& universe,
                                                   std::size_t cap) {
  enforce_atom_cap(universe, cap);
  std::vector<ApproxPair> out;
  for_each_in_interval(AtomSet{}, universe.full(), [&](AtomSet upper) {
    for_each_in_interval(AtomSet{}, upper, [&](AtomSet lower) {
      out.push_back({lower, upper});
      return true;
    });
    return true;
  });
  return out;
}

}  // namespace aftlab
