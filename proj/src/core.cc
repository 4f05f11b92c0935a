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

#include "leximin/core.h"

#include <algorithm>
#include <string>

#include "leximin/errors.h"

namespace leximin {

Instance::Instance(int num_agents, int num_items, Utility c,
                   std::vector<Valuation> valuations)
    : num_agents_(num_agents),
      num_items_(num_items),
      c_(c),
      valuations_(std::move(valuations)) {
  if (num_agents < 1) throw InvalidInstance("need at least one agent");
  if (num_items < 0) throw InvalidInstance("negative item count");
  if (c < 1) throw InvalidInstance("c must be a positive integer");
  if (static_cast<int>(valuations_.size()) != num_agents) {
    throw InvalidInstance("expected " + std::to_string(num_agents) +
                          " valuations, got " +
                          std::to_string(valuations_.size()));
  }
  for (int i = 0; i < num_agents; ++i) {
    const Valuation& v = valuations_[i];
    const std::string agent = "agent " + std::to_string(i + 1);
    if (v.num_items() != num_items) {
      throw InvalidInstance(agent + ": valuation covers " +
                            std::to_string(v.num_items()) + " items, expected " +
                            std::to_string(num_items));
    }
    try {
      v.CheckStructure(c, /*in_range=*/true);
    } catch (const InvalidInstance& e) {
      throw InvalidInstance(agent + " " + e.what());
    }
  }
}

Allocation::Allocation(int num_agents, int num_items)
    : parts_(num_agents + 1, ItemSet(num_items)),
      owner_(num_items, kUnallocated) {
  parts_[kUnallocated] = ItemSet::Full(num_items);
}

Allocation Allocation::FromBundles(int num_items,
                                   std::span<const ItemSet> bundles) {
  Allocation x(static_cast<int>(bundles.size()), num_items);
  for (std::size_t k = 0; k < bundles.size(); ++k) {
    const AgentId h = static_cast<AgentId>(k + 1);
    bundles[k].ForEach([&](ItemId o) {
      if (x.owner_[o] != kUnallocated) {
        throw ContractViolation("item " + std::to_string(o) +
                                " is in two bundles");
      }
      x.Move(o, h);
    });
  }
  return x;
}

Allocation Allocation::FromParts(int num_items,
                                 std::span<const ItemSet> bundles,
                                 const ItemSet& unallocated) {
  Allocation x = FromBundles(num_items, bundles);
  if (!(x.unallocated() == unallocated)) {
    throw ContractViolation(
        "bundles and unallocated pool do not partition the items");
  }
  return x;
}

void Allocation::Move(ItemId o, AgentId h) {
  parts_[owner_[o]].erase(o);
  parts_[h].insert(o);
  owner_[o] = h;
}

void Allocation::CheckInvariant() const {
  std::vector<int> seen(owner_.size(), 0);
  for (std::size_t h = 0; h < parts_.size(); ++h) {
    parts_[h].ForEach([&](ItemId o) {
      ++seen[o];
      if (owner_[o] != static_cast<AgentId>(h)) {
        throw InvariantViolation("owner index disagrees for item " +
                                 std::to_string(o));
      }
    });
  }
  for (std::size_t o = 0; o < seen.size(); ++o) {
    if (seen[o] != 1) {
      throw InvariantViolation("item " + std::to_string(o) + " appears in " +
                               std::to_string(seen[o]) + " bundles");
    }
  }
}

Allocation UnionOf(const Allocation& a, const Allocation& b) {
  std::vector<ItemSet> bundles;
  bundles.reserve(a.num_agents());
  for (AgentId h = 1; h <= a.num_agents(); ++h) {
    bundles.push_back(a.bundle(h) | b.bundle(h));
  }
  return Allocation::FromBundles(a.num_items(), bundles);
}

SortedUtilityVector::SortedUtilityVector(UtilityVector values)
    : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

std::strong_ordering LexCompare(std::span<const Utility> a,
                                std::span<const Utility> b) {
  if (a.size() != b.size()) {
    throw ContractViolation("cannot compare vectors of lengths " +
                            std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  }
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

std::strong_ordering LexCompare(const SortedUtilityVector& a,
                                const SortedUtilityVector& b) {
  return LexCompare(a.values(), b.values());
}

bool ParetoDominates(std::span<const Utility> a, std::span<const Utility> b) {
  if (a.size() != b.size()) {
    throw ContractViolation("cannot compare vectors of lengths " +
                            std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  }
  bool strict = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return false;
    if (a[k] > b[k]) strict = true;
  }
  return strict;
}

UtilityVector UtilityVectorOf(const Instance& inst, const Allocation& x) {
  UtilityVector u(inst.num_agents());
  for (AgentId i = 1; i <= inst.num_agents(); ++i) {
    u[i - 1] = inst.valuation(i).Value(x.bundle(i));
  }
  return u;
}

}  // namespace leximin
