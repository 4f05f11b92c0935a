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

#include "leximin/valuations.h"

#include <algorithm>
#include <sstream>

#include "leximin/errors.h"

namespace leximin {
namespace {

std::string FormatSet(const ItemSet& s) {
  std::string out = "{";
  bool first = true;
  s.ForEach([&](ItemId o) {
    if (!first) out += ",";
    out += std::to_string(o);
    first = false;
  });
  return out + "}";
}

std::string FormatVector(const std::vector<Utility>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(v[k]);
  }
  return out + ")";
}

bool InMarginalRange(Utility x, Utility c) { return x == -1 || x == 0 || x == c; }

// The validators all run over a dense table.
std::vector<Utility> DenseTable(const Valuation& v) {
  const int m = v.num_items();
  if (m > kMaxExplicitItems) {
    throw ContractViolation("validators need at most " +
                            std::to_string(kMaxExplicitItems) + " items, got " +
                            std::to_string(m));
  }
  const std::uint64_t size = std::uint64_t{1} << m;
  std::vector<Utility> table(size);
  if (const ExplicitSpec* e = v.explicit_table()) {
    for (std::uint64_t mask = 0; mask < size; ++mask) {
      if (!e->table[mask].has_value()) {
        throw MalformedValuation("explicit table has no entry for subset " +
                                 FormatSet(ItemSet::FromMask(m, mask)));
      }
      table[mask] = *e->table[mask];
    }
  } else {
    for (std::uint64_t mask = 0; mask < size; ++mask) {
      table[mask] = v.Value(ItemSet::FromMask(m, mask));
    }
  }
  return table;
}

}  // namespace

const char* ValuationKindName(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::kAdditive:
      return "additive";
    case ValuationKind::kGeneralAdditive:
      return "general_additive";
    case ValuationKind::kCappedGroups:
      return "capped_groups";
    case ValuationKind::kExplicit:
      return "explicit";
  }
  return "unknown";
}

Valuation::Valuation(int num_items, Spec spec)
    : num_items_(num_items), spec_(std::move(spec)) {}

Valuation Valuation::Additive(std::vector<Utility> values) {
  const int m = static_cast<int>(values.size());
  return Valuation(m, AdditiveSpec{std::move(values), false});
}

Valuation Valuation::GeneralAdditive(std::vector<Utility> values) {
  const int m = static_cast<int>(values.size());
  return Valuation(m, AdditiveSpec{std::move(values), true});
}

Valuation Valuation::CappedGroups(int num_items, std::vector<CappedGroup> groups,
                                  Utility default_marginal) {
  std::vector<int> group_of(num_items, -1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::sort(groups[g].items.begin(), groups[g].items.end());
    for (ItemId o : groups[g].items) {
      if (o < 0 || o >= num_items) {
        throw InvalidInstance("group " + std::to_string(g) + " names item " +
                              std::to_string(o) + " outside 0.." +
                              std::to_string(num_items - 1));
      }
      if (group_of[o] != -1) {
        throw InvalidInstance("item " + std::to_string(o) +
                              " appears in more than one group");
      }
      group_of[o] = static_cast<int>(g);
    }
    if (groups[g].cap < 0) {
      throw InvalidInstance("group " + std::to_string(g) + " has negative cap");
    }
  }
  Valuation v(num_items,
              CappedGroupsSpec{std::move(groups), default_marginal});
  v.group_of_ = std::move(group_of);
  return v;
}

Valuation Valuation::Explicit(int num_items,
                              std::vector<std::optional<Utility>> table) {
  if (num_items < 0 || num_items > kMaxExplicitItems) {
    throw InvalidInstance("explicit tables support at most " +
                          std::to_string(kMaxExplicitItems) + " items");
  }
  if (table.size() != (std::size_t{1} << num_items)) {
    throw InvalidInstance("explicit table over " + std::to_string(num_items) +
                          " items needs " +
                          std::to_string(std::size_t{1} << num_items) +
                          " entries");
  }
  return Valuation(num_items, ExplicitSpec{std::move(table)});
}

Valuation Valuation::Tabulate(int num_items,
                              const std::function<Utility(const ItemSet&)>& f) {
  if (num_items > kMaxExplicitItems) {
    throw ContractViolation("cannot tabulate more than " +
                            std::to_string(kMaxExplicitItems) + " items");
  }
  std::vector<std::optional<Utility>> table(std::size_t{1} << num_items);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = f(ItemSet::FromMask(num_items, mask));
  }
  return Explicit(num_items, std::move(table));
}

ValuationKind Valuation::kind() const {
  if (const auto* a = additive()) {
    return a->general ? ValuationKind::kGeneralAdditive
                      : ValuationKind::kAdditive;
  }
  if (capped_groups() != nullptr) return ValuationKind::kCappedGroups;
  return ValuationKind::kExplicit;
}

Utility Valuation::Lookup(std::uint64_t mask) const {
  const auto& entry = std::get<ExplicitSpec>(spec_).table[mask];
  if (!entry.has_value()) {
    throw MalformedValuation("explicit table has no entry for subset " +
                             FormatSet(ItemSet::FromMask(num_items_, mask)));
  }
  return *entry;
}

Utility Valuation::Value(const ItemSet& s) const {
  if (const auto* a = additive()) {
    Utility total = 0;
    s.ForEach([&](ItemId o) { total += a->values[o]; });
    return total;
  }
  if (const auto* cg = capped_groups()) {
    std::vector<int> counts(cg->groups.size(), 0);
    int ungrouped = 0;
    s.ForEach([&](ItemId o) {
      if (group_of_[o] < 0) {
        ++ungrouped;
      } else {
        ++counts[group_of_[o]];
      }
    });
    Utility total = cg->default_marginal * ungrouped;
    for (std::size_t g = 0; g < counts.size(); ++g) {
      const CappedGroup& group = cg->groups[g];
      total += group.hi * std::min(counts[g], group.cap) +
               group.lo * std::max(counts[g] - group.cap, 0);
    }
    return total;
  }
  return Lookup(s.mask());
}

Utility Valuation::Marginal(const ItemSet& s, ItemId o) const {
  if (s.contains(o)) {
    throw ContractViolation("marginal of item " + std::to_string(o) +
                            " already in the bundle");
  }
  if (const auto* a = additive()) return a->values[o];
  if (const auto* cg = capped_groups()) {
    const int g = group_of_[o];
    if (g < 0) return cg->default_marginal;
    int count = 0;
    for (ItemId x : cg->groups[g].items) count += s.contains(x) ? 1 : 0;
    const CappedGroup& group = cg->groups[g];
    return count < group.cap ? group.hi : group.lo;
  }
  const std::uint64_t mask = s.mask();
  return Lookup(mask | (std::uint64_t{1} << o)) - Lookup(mask);
}

std::vector<Utility> Valuation::Marginals(const ItemSet& base) const {
  std::vector<Utility> out(num_items_, 0);
  if (const auto* a = additive()) {
    for (ItemId o = 0; o < num_items_; ++o) {
      if (!base.contains(o)) out[o] = a->values[o];
    }
    return out;
  }
  if (const auto* cg = capped_groups()) {
    std::vector<int> counts(cg->groups.size(), 0);
    base.ForEach([&](ItemId o) {
      if (group_of_[o] >= 0) ++counts[group_of_[o]];
    });
    for (ItemId o = 0; o < num_items_; ++o) {
      if (base.contains(o)) continue;
      const int g = group_of_[o];
      if (g < 0) {
        out[o] = cg->default_marginal;
      } else {
        const CappedGroup& group = cg->groups[g];
        out[o] = counts[g] < group.cap ? group.hi : group.lo;
      }
    }
    return out;
  }
  const std::uint64_t mask = base.mask();
  const Utility at_base = Lookup(mask);
  for (ItemId o = 0; o < num_items_; ++o) {
    if (!base.contains(o)) {
      out[o] = Lookup(mask | (std::uint64_t{1} << o)) - at_base;
    }
  }
  return out;
}

std::vector<Utility> Valuation::CanonicalTelescoping(const ItemSet& s) const {
  std::vector<Utility> out;
  out.reserve(s.size());
  if (const auto* a = additive()) {
    s.ForEach([&](ItemId o) { out.push_back(a->values[o]); });
    return out;
  }
  if (const auto* cg = capped_groups()) {
    std::vector<int> counts(cg->groups.size(), 0);
    s.ForEach([&](ItemId o) {
      const int g = group_of_[o];
      if (g < 0) {
        out.push_back(cg->default_marginal);
        return;
      }
      const CappedGroup& group = cg->groups[g];
      out.push_back(counts[g] < group.cap ? group.hi : group.lo);
      ++counts[g];
    });
    return out;
  }
  std::uint64_t prefix = 0;
  Utility previous = Lookup(0);
  s.ForEach([&](ItemId o) {
    prefix |= std::uint64_t{1} << o;
    const Utility current = Lookup(prefix);
    out.push_back(current - previous);
    previous = current;
  });
  return out;
}

void Valuation::CheckStructure(Utility c, bool in_range) const {
  auto range_error = [&](const std::string& what, Utility x) {
    std::ostringstream msg;
    msg << what << ": value " << x << " not in {-1, 0, " << c << "}";
    throw InvalidInstance(msg.str());
  };
  if (const auto* a = additive()) {
    if (a->general || !in_range) return;
    for (std::size_t o = 0; o < a->values.size(); ++o) {
      if (!InMarginalRange(a->values[o], c)) {
        range_error("item " + std::to_string(o), a->values[o]);
      }
    }
    return;
  }
  if (const auto* cg = capped_groups()) {
    if (!in_range) return;
    for (std::size_t g = 0; g < cg->groups.size(); ++g) {
      const CappedGroup& group = cg->groups[g];
      const std::string where = "group " + std::to_string(g);
      if (!InMarginalRange(group.hi, c)) range_error(where + " hi", group.hi);
      if (group.lo != -1 && group.lo != 0) {
        throw InvalidInstance(where + " lo: value " + std::to_string(group.lo) +
                              " not in {-1, 0}");
      }
      if (group.lo > group.hi) {
        throw InvalidInstance(where + ": lo must not exceed hi");
      }
    }
    if (!InMarginalRange(cg->default_marginal, c)) {
      range_error("default", cg->default_marginal);
    }
  }
}

std::vector<Utility> TelescopingVector(const Valuation& v, const ItemSet& s,
                                       std::span<const ItemId> order) {
  if (static_cast<int>(order.size()) != s.size()) {
    throw ContractViolation("order is not a permutation of the bundle");
  }
  ItemSet prefix(v.num_items());
  std::vector<Utility> out;
  out.reserve(order.size());
  for (ItemId o : order) {
    if (o < 0 || o >= v.num_items() || !s.contains(o) || prefix.contains(o)) {
      throw ContractViolation("order is not a permutation of the bundle");
    }
    out.push_back(v.Marginal(prefix, o));
    prefix.insert(o);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string SubmodularityReport::Describe() const {
  if (ok) return "submodular";
  if (empty_set_nonzero) return "v(empty set) != 0";
  std::ostringstream msg;
  msg << "marginal of item " << item << " grows from " << smaller_marginal
      << " at " << FormatSet(smaller) << " to " << larger_marginal << " at "
      << FormatSet(larger);
  return msg.str();
}

SubmodularityReport ValidateSubmodular(const Valuation& v) {
  const std::vector<Utility> table = DenseTable(v);
  const int m = v.num_items();
  SubmodularityReport report;
  if (table[0] != 0) {
    report.ok = false;
    report.empty_set_nonzero = true;
    report.smaller = ItemSet(m);
    report.larger = ItemSet(m);
    return report;
  }
  // Pairwise check: Delta(S, o) >= Delta(S + o', o) for all S, o != o'.
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    for (int o = 0; o < m; ++o) {
      const std::uint64_t bit = std::uint64_t{1} << o;
      if (mask & bit) continue;
      const Utility at_s = table[mask | bit] - table[mask];
      for (int other = 0; other < m; ++other) {
        const std::uint64_t other_bit = std::uint64_t{1} << other;
        if (other == o || (mask & other_bit)) continue;
        const std::uint64_t t = mask | other_bit;
        const Utility at_t = table[t | bit] - table[t];
        if (at_s < at_t) {
          report.ok = false;
          report.smaller = ItemSet::FromMask(m, mask);
          report.larger = ItemSet::FromMask(m, t);
          report.item = o;
          report.smaller_marginal = at_s;
          report.larger_marginal = at_t;
          return report;
        }
      }
    }
  }
  return report;
}

std::string OrderNeutralityReport::Describe() const {
  if (ok) return "order-neutral";
  return "bundle " + FormatSet(witness) + " has sorted telescoping vectors " +
         FormatVector(first) + " and " + FormatVector(second);
}

OrderNeutralityReport ValidateOrderNeutral(const Valuation& v) {
  const std::vector<Utility> table = DenseTable(v);
  const int m = v.num_items();
  // by_size[k] lists the masks with popcount k, ascending.
  std::vector<std::vector<std::uint64_t>> by_size(m + 1);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    by_size[std::popcount(mask)].push_back(mask);
  }
  // unique[mask] holds the single sorted telescoping vector of mask. Only two
  // layers are alive at a time.
  std::vector<std::vector<Utility>> unique(table.size());
  OrderNeutralityReport report;
  for (int k = 1; k <= m; ++k) {
    for (std::uint64_t mask : by_size[k]) {
      bool have = false;
      for (int o = 0; o < m; ++o) {
        const std::uint64_t bit = std::uint64_t{1} << o;
        if (!(mask & bit)) continue;
        const std::uint64_t rest = mask ^ bit;
        std::vector<Utility> candidate = unique[rest];
        const Utility delta = table[mask] - table[rest];
        candidate.insert(
            std::upper_bound(candidate.begin(), candidate.end(), delta), delta);
        if (!have) {
          unique[mask] = std::move(candidate);
          have = true;
        } else if (candidate != unique[mask]) {
          report.ok = false;
          report.witness = ItemSet::FromMask(m, mask);
          report.first = std::min(candidate, unique[mask]);
          report.second = std::max(candidate, unique[mask]);
          return report;
        }
      }
    }
    if (k >= 2) {
      for (std::uint64_t mask : by_size[k - 1]) {
        std::vector<Utility>().swap(unique[mask]);
      }
    }
  }
  return report;
}

std::string RangeReport::Describe() const {
  if (ok) return "marginals in range";
  return "marginal of item " + std::to_string(item) + " at " + FormatSet(set) +
         " is " + std::to_string(marginal);
}

RangeReport ValidateRange(const Valuation& v, Utility c) {
  const std::vector<Utility> table = DenseTable(v);
  const int m = v.num_items();
  RangeReport report;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    for (int o = 0; o < m; ++o) {
      const std::uint64_t bit = std::uint64_t{1} << o;
      if (mask & bit) continue;
      const Utility delta = table[mask | bit] - table[mask];
      if (!InMarginalRange(delta, c)) {
        report.ok = false;
        report.set = ItemSet::FromMask(m, mask);
        report.item = o;
        report.marginal = delta;
        return report;
      }
    }
  }
  return report;
}

}  // namespace leximin
