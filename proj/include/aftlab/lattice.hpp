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

// The finite powerset lattice over a program's atoms, the bilattice of
// approximation pairs, and the set-lifted orders used by non-deterministic
// operators.

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aftlab {

inline constexpr std::size_t kDefaultAtomCap = 12;
// AtomSet is a 32-bit mask; anything past this is hopeless for brute force
// anyway.
inline constexpr std::size_t kMaxAtoms = 20;

// An element of the powerset lattice, stored as a bit mask over the indices
// of an AtomUniverse. Ordering (operator<=>) is numeric on the mask and only
// serves deterministic iteration; the lattice order is subset_of().
class AtomSet {
 public:
  constexpr AtomSet() = default;
  constexpr explicit AtomSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr AtomSet singleton(std::size_t index) {
    return AtomSet(std::uint32_t{1} << index);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t index) const {
    return (bits_ >> index) & 1u;
  }
  constexpr bool subset_of(AtomSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool strict_subset_of(AtomSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(AtomSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr AtomSet operator|(AtomSet o) const { return AtomSet(bits_ | o.bits_); }
  constexpr AtomSet operator&(AtomSet o) const { return AtomSet(bits_ & o.bits_); }
  constexpr AtomSet operator-(AtomSet o) const { return AtomSet(bits_ & ~o.bits_); }
  constexpr AtomSet& operator|=(AtomSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr AtomSet& operator&=(AtomSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const AtomSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

// The ordered, duplicate-free list of atom names. Bit i of an AtomSet refers
// to names()[i]; names are kept in lexicographic order.
class AtomUniverse {
 public:
  AtomUniverse() = default;
  // Sorts and deduplicates. Throws on empty names or more than kMaxAtoms.
  explicit AtomUniverse(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  std::optional<std::size_t> index(std::string_view name) const;
  // Throws a precondition error for atoms outside the universe.
  std::size_t require_index(std::string_view name) const;

  AtomSet full() const {
    return AtomSet(names_.empty() ? 0u
                                  : static_cast<std::uint32_t>(
                                        (std::uint64_t{1} << names_.size()) - 1));
  }
  AtomSet set_of(std::initializer_list<std::string_view> names) const;
  AtomSet set_of(std::span<const std::string> names) const;
  std::vector<std::string> names_of(AtomSet set) const;

  // "{p,q}" with "∅" for the empty set.
  std::string format(AtomSet set) const;

  bool operator==(const AtomUniverse&) const = default;

 private:
  std::vector<std::string> names_;
};

// Throws ErrorKind::kCapExceeded when the universe is larger than `cap`.
void enforce_atom_cap(const AtomUniverse& universe, std::size_t cap);

struct ApproxPair {
  AtomSet lower;
  AtomSet upper;

  bool is_consistent() const { return lower.subset_of(upper); }
  bool is_total() const { return lower == upper; }

  auto operator<=>(const ApproxPair&) const = default;
};

std::string format_pair(const AtomUniverse& universe, const ApproxPair& pair);

// A finite set of lattice elements, kept sorted and duplicate-free.
class NdSet {
 public:
  NdSet() = default;
  NdSet(std::initializer_list<AtomSet> elements);
  explicit NdSet(std::vector<AtomSet> elements);

  const std::vector<AtomSet>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(AtomSet element) const;
  void insert(AtomSet element);
  void merge(const NdSet& other);

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool operator==(const NdSet&) const = default;

 private:
  std::vector<AtomSet> elements_;
};

// "{{p},{q}}"; the empty element renders as ∅.
std::string format_ndset(const AtomUniverse& universe, const NdSet& set);

struct NdPair {
  NdSet lower_set;
  NdSet upper_set;

  bool operator==(const NdPair&) const = default;
};

// Truth order: componentwise inclusion.
bool leq_t(const ApproxPair& a, const ApproxPair& b);
// Information order: lower grows, upper shrinks.
bool leq_i(const ApproxPair& a, const ApproxPair& b);

// Smyth: every element of `y` is above some element of `x`.
bool smyth_leq(const NdSet& x, const NdSet& y);
// Hoare: every element of `x` is below some element of `y`.
bool hoare_leq(const NdSet& x, const NdSet& y);
// The precision order on ndao outputs.
bool aprec_leq(const NdPair& a, const NdPair& b);

// The lattice difference y ⊘ x; on a powerset it is unique and equals y \ x.
inline AtomSet difference(AtomSet y, AtomSet x) { return y - x; }

// Every z with x ⊆ z ⊆ y, in increasing order of the free bits. Throws when
// x ⊄ y.
std::vector<AtomSet> enumerate_interval(AtomSet x, AtomSet y);

// Calls f(z) for every z in [x, y] without materializing the interval.
// Requires x ⊆ y. Stops early when f returns false.
template <typename F>
bool for_each_in_interval(AtomSet x, AtomSet y, F&& f) {
  const std::uint32_t free = (y - x).bits();
  std::uint32_t sub = 0;
  do {
    if (!f(AtomSet(x.bits() | sub))) return false;
    sub = (sub - free) & free;
  } while (sub != 0);
  return true;
}

// All (x, y) with x ⊆ y ⊆ universe, grouped by upper bound. 3^n pairs.
std::vector<ApproxPair> enumerate_consistent_pairs(const AtomUniverse& universe,
                                                   std::size_t cap = kDefaultAtomCap);

}  // namespace aftlab
