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

#ifndef LEXIMIN_VALUATIONS_H_
#define LEXIMIN_VALUATIONS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "leximin/item_set.h"

namespace leximin {

using Utility = std::int64_t;

// Explicit tables are indexed by subset bitmask, so they are bounded.
inline constexpr int kMaxExplicitItems = 20;

// v(S) = sum of per-item values. The `general` flag marks arbitrary integer
// values (accepted by the oracles and generators, rejected by the solver).
struct AdditiveSpec {
  std::vector<Utility> values;
  bool general = false;

  friend bool operator==(const AdditiveSpec&, const AdditiveSpec&) = default;
};

struct CappedGroup {
  std::vector<ItemId> items;  // ascending
  int cap = 0;
  Utility hi = 0;
  Utility lo = 0;

  friend bool operator==(const CappedGroup&, const CappedGroup&) = default;
};

// v(S) = sum_g [hi_g * min(|S & C_g|, cap_g) + lo_g * max(|S & C_g| - cap_g, 0)]
//        + default_marginal * |S \ union_g C_g|
struct CappedGroupsSpec {
  std::vector<CappedGroup> groups;
  Utility default_marginal = 0;

  friend bool operator==(const CappedGroupsSpec&,
                         const CappedGroupsSpec&) = default;
};

// Complete value table; entry k is v of the subset whose bitmask is k.
// Missing entries are allowed at construction and reported on lookup.
struct ExplicitSpec {
  std::vector<std::optional<Utility>> table;

  friend bool operator==(const ExplicitSpec&, const ExplicitSpec&) = default;
};

enum class ValuationKind { kAdditive, kGeneralAdditive, kCappedGroups, kExplicit };

const char* ValuationKindName(ValuationKind kind);

// A value oracle over items {0..m-1}. Immutable after construction.
class Valuation {
 public:
  static Valuation Additive(std::vector<Utility> values);
  static Valuation GeneralAdditive(std::vector<Utility> values);
  static Valuation CappedGroups(int num_items, std::vector<CappedGroup> groups,
                                Utility default_marginal);
  static Valuation Explicit(int num_items,
                            std::vector<std::optional<Utility>> table);
  // Materializes `f` on all 2^m subsets (m <= kMaxExplicitItems).
  static Valuation Tabulate(int num_items,
                            const std::function<Utility(const ItemSet&)>& f);

  ValuationKind kind() const;
  int num_items() const { return num_items_; }

  Utility Value(const ItemSet& s) const;
  // Delta(S, o) = v(S + o) - v(S). Requires o not in S.
  Utility Marginal(const ItemSet& s, ItemId o) const;
  // Delta(base, o) for every item; entries for items in `base` are 0.
  std::vector<Utility> Marginals(const ItemSet& base) const;
  // Marginals of inserting the items of `s` one at a time in ascending order,
  // aligned with s.items().
  std::vector<Utility> CanonicalTelescoping(const ItemSet& s) const;

  // Throws InvalidInstance if the spec is structurally broken or, when
  // `in_range` is set, if its declared marginals leave {-1, 0, c}.
  void CheckStructure(Utility c, bool in_range) const;

  const AdditiveSpec* additive() const { return std::get_if<AdditiveSpec>(&spec_); }
  const CappedGroupsSpec* capped_groups() const {
    return std::get_if<CappedGroupsSpec>(&spec_);
  }
  const ExplicitSpec* explicit_table() const {
    return std::get_if<ExplicitSpec>(&spec_);
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.num_items_ == b.num_items_ && a.spec_ == b.spec_;
  }

 private:
  using Spec = std::variant<AdditiveSpec, CappedGroupsSpec, ExplicitSpec>;
  Valuation(int num_items, Spec spec);

  Utility Lookup(std::uint64_t mask) const;

  int num_items_ = 0;
  Spec spec_;
  std::vector<int> group_of_;  // capped_groups only; -1 = ungrouped
};

// Sorted telescoping vector of `s` when items are added in `order`.
std::vector<Utility> TelescopingVector(const Valuation& v, const ItemSet& s,
                                       std::span<const ItemId> order);

// Validators work on explicit tables; other kinds are tabulated first.
// All of them require m <= kMaxExplicitItems.

struct SubmodularityReport {
  bool ok = true;
  bool empty_set_nonzero = false;
  // Delta(smaller, item) < Delta(larger, item) with smaller subset of larger.
  ItemSet smaller;
  ItemSet larger;
  ItemId item = -1;
  Utility smaller_marginal = 0;
  Utility larger_marginal = 0;

  std::string Describe() const;
};
SubmodularityReport ValidateSubmodular(const Valuation& v);

struct OrderNeutralityReport {
  bool ok = true;
  ItemSet witness;
  // Two distinct sorted telescoping vectors of `witness`, lexicographically
  // ordered.
  std::vector<Utility> first;
  std::vector<Utility> second;

  std::string Describe() const;
};
OrderNeutralityReport ValidateOrderNeutral(const Valuation& v);

struct RangeReport {
  bool ok = true;
  ItemSet set;
  ItemId item = -1;
  Utility marginal = 0;

  std::string Describe() const;
};
RangeReport ValidateRange(const Valuation& v, Utility c);

}  // namespace leximin

#endif  // LEXIMIN_VALUATIONS_H_
