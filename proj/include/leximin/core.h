// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEXIMIN_CORE_H_
#define LEXIMIN_CORE_H_

#include <compare>
#include <span>
#include <vector>

#include "leximin/item_set.h"
#include "leximin/valuations.h"

namespace leximin {

// Agents are numbered 1..n. Bundle index 0 is the unallocated pool X_0.
using AgentId = int;
inline constexpr AgentId kUnallocated = 0;

class Instance {
 public:
  // Throws InvalidInstance unless n >= 1, c >= 1 and every valuation covers
  // exactly `num_items` items and passes its structural check.
  Instance(int num_agents, int num_items, Utility c,
           std::vector<Valuation> valuations);

  int num_agents() const { return num_agents_; }
  int num_items() const { return num_items_; }
  Utility c() const { return c_; }

  const Valuation& valuation(AgentId i) const { return valuations_[i - 1]; }
  const std::vector<Valuation>& valuations() const { return valuations_; }

  ItemSet NoItems() const { return ItemSet(num_items_); }
  ItemSet AllItems() const { return ItemSet::Full(num_items_); }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int num_agents_;
  int num_items_;
  Utility c_;
  std::vector<Valuation> valuations_;
};

// An (n+1)-way partition of the items: bundle(0) is X_0, bundle(i) is X_i.
// Every mutation keeps the partition invariant.
class Allocation {
 public:
  Allocation() = default;
  // Everything starts in X_0.
  Allocation(int num_agents, int num_items);
  // X_0 is whatever `bundles` leaves out. Throws ContractViolation if two
  // bundles overlap.
  static Allocation FromBundles(int num_items, std::span<const ItemSet> bundles);
  // Requires `bundles` and `unallocated` to exactly cover 0..m-1.
  static Allocation FromParts(int num_items, std::span<const ItemSet> bundles,
                              const ItemSet& unallocated);

  int num_agents() const { return static_cast<int>(parts_.size()) - 1; }
  int num_items() const { return static_cast<int>(owner_.size()); }

  const ItemSet& bundle(AgentId h) const { return parts_[h]; }
  const ItemSet& unallocated() const { return parts_[kUnallocated]; }
  AgentId owner(ItemId o) const { return owner_[o]; }
  bool complete() const { return parts_[kUnallocated].empty(); }

  // Moves `o` into bundle `h` (h may be kUnallocated).
  void Move(ItemId o, AgentId h);

  // Recomputes the partition invariant from scratch; throws
  // InvariantViolation on failure.
  void CheckInvariant() const;

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<ItemSet> parts_;
  std::vector<AgentId> owner_;
};

// Per-agent union of two allocations; X_0 is the complement.
// Requires bundle-wise disjointness across agents of the result.
Allocation UnionOf(const Allocation& a, const Allocation& b);

// Entry i-1 is v_i(X_i).
using UtilityVector = std::vector<Utility>;

// A utility vector sorted ascending.
class SortedUtilityVector {
 public:
  SortedUtilityVector() = default;
  explicit SortedUtilityVector(UtilityVector values);

  const UtilityVector& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  Utility operator[](std::size_t k) const { return values_[k]; }

  friend bool operator==(const SortedUtilityVector&,
                         const SortedUtilityVector&) = default;

 private:
  UtilityVector values_;
};

// Lexicographic comparison; throws ContractViolation on length mismatch.
std::strong_ordering LexCompare(std::span<const Utility> a,
                                std::span<const Utility> b);
std::strong_ordering LexCompare(const SortedUtilityVector& a,
                                const SortedUtilityVector& b);

bool ParetoDominates(std::span<const Utility> a, std::span<const Utility> b);

UtilityVector UtilityVectorOf(const Instance& inst, const Allocation& x);

}  // namespace leximin

#endif  // LEXIMIN_CORE_H_
