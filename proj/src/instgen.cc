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

#include "leximin/instgen.h"

#include <array>
#include <numeric>
#include <optional>
#include <string>

#include "leximin/errors.h"

namespace leximin {

std::uint64_t SplitMix64::Next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::Below(std::uint64_t bound) {
  if (bound == 0) throw ContractViolation("empty sampling range");
  return Next() % bound;
}

int SplitMix64::Between(int lo, int hi) {
  if (lo > hi) throw ContractViolation("empty sampling range");
  return lo + static_cast<int>(
                  Below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Instance GenRandomAdditive(int num_agents, int num_items, Utility c,
                           ValueRatios ratios, std::uint64_t seed) {
  if (ratios.c < 0 || ratios.zero < 0 || ratios.minus_one < 0 ||
      ratios.c + ratios.zero + ratios.minus_one == 0) {
    throw ContractViolation("value ratios must be non-negative with a "
                            "positive total");
  }
  const std::uint64_t total = ratios.c + ratios.zero + ratios.minus_one;
  SplitMix64 rng(seed);
  std::vector<Valuation> valuations;
  for (int i = 0; i < num_agents; ++i) {
    std::vector<Utility> values(num_items);
    for (Utility& value : values) {
      const std::uint64_t x = rng.Below(total);
      if (x < static_cast<std::uint64_t>(ratios.c)) {
        value = c;
      } else if (x < static_cast<std::uint64_t>(ratios.c + ratios.zero)) {
        value = 0;
      } else {
        value = -1;
      }
    }
    valuations.push_back(Valuation::Additive(std::move(values)));
  }
  return Instance(num_agents, num_items, c, std::move(valuations));
}

Instance GenCappedGroups(int num_agents, int num_items, Utility c,
                         IntRange groups, IntRange caps, std::uint64_t seed) {
  if (groups.lo < 0 || caps.lo < 0) {
    throw ContractViolation("group counts and caps must be non-negative");
  }
  const std::array<std::pair<Utility, Utility>, 4> kShapes = {
      std::pair<Utility, Utility>{c, 0}, {c, -1}, {0, -1}, {0, 0}};
  SplitMix64 rng(seed);
  std::vector<Valuation> valuations;
  for (int i = 0; i < num_agents; ++i) {
    const int k = rng.Between(groups.lo, groups.hi);
    std::vector<CappedGroup> drawn(k);
    for (ItemId o = 0; o < num_items; ++o) {
      const int slot = static_cast<int>(rng.Below(k + 1));
      if (slot < k) drawn[slot].items.push_back(o);
    }
    for (CappedGroup& group : drawn) {
      group.cap = rng.Between(caps.lo, caps.hi);
      const auto [hi, lo] = kShapes[rng.Below(kShapes.size())];
      group.hi = hi;
      group.lo = lo;
    }
    const Utility default_marginal = rng.Below(2) == 0 ? 0 : -1;
    std::vector<CappedGroup> kept;
    for (CappedGroup& group : drawn) {
      if (!group.items.empty()) kept.push_back(std::move(group));
    }
    valuations.push_back(
        Valuation::CappedGroups(num_items, std::move(kept), default_marginal));
  }
  return Instance(num_agents, num_items, c, std::move(valuations));
}

Instance GenHardness(const ExPdmInstance& expdm, int q) {
  const int p = expdm.p;
  const int a = expdm.a;
  if (p < 3) throw InvalidInstance("the reduction needs p >= 3");
  if (q < 1) throw InvalidInstance("the reduction needs q >= 1");
  if (std::gcd(p, q) != 1) {
    throw InvalidInstance("p = " + std::to_string(p) + " and q = " +
                          std::to_string(q) + " are not coprime");
  }
  if (a < 1) throw InvalidInstance("each part needs at least one vertex");
  if (expdm.edges.empty()) throw InvalidInstance("no edges");
  const int num_items = p * a + a * q;
  std::vector<Valuation> valuations;
  for (std::size_t e = 0; e < expdm.edges.size(); ++e) {
    const std::vector<int>& edge = expdm.edges[e];
    if (static_cast<int>(edge.size()) != p) {
      throw InvalidInstance("edge " + std::to_string(e) + " does not have " +
                            std::to_string(p) + " endpoints");
    }
    std::vector<Utility> values(num_items, -p);
    for (int k = 0; k < p; ++k) {
      if (edge[k] < 0 || edge[k] >= a) {
        throw InvalidInstance("edge " + std::to_string(e) +
                              " names a vertex outside its part");
      }
      values[k * a + edge[k]] = q;
    }
    valuations.push_back(Valuation::GeneralAdditive(std::move(values)));
  }
  const int num_agents = static_cast<int>(valuations.size());
  return Instance(num_agents, num_items, q, std::move(valuations));
}

ExPdmInstance MatchingExPdm() {
  return ExPdmInstance{3, 2, {{0, 0, 0}, {1, 1, 1}, {0, 1, 1}}};
}

ExPdmInstance NoMatchingExPdm() {
  return ExPdmInstance{3, 2, {{0, 0, 0}, {0, 1, 1}}};
}

int GraphicMatroidRank(int num_vertices,
                       std::span<const std::pair<int, int>> edges,
                       const ItemSet& s) {
  std::vector<int> parent(num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int rank = 0;
  s.ForEach([&](ItemId e) {
    const int u = find(edges[e].first);
    const int w = find(edges[e].second);
    if (u != w) {
      parent[u] = w;
      ++rank;
    }
  });
  return rank;
}

std::map<std::string, Instance> Fixtures() {
  std::map<std::string, Instance> out;
  {
    const Utility c = 3;
    out.emplace("ex2",
                Instance(2, 4, c,
                         {Valuation::CappedGroups(4, {{{0, 1}, 1, c, 0}}, 0),
                          Valuation::CappedGroups(4, {{{2, 3}, 0, 0, -1}}, 0)}));
  }
  {
    const Utility c = 2;
    out.emplace("ex_classic",
                Instance(1, 2, c,
                         {Valuation::CappedGroups(2, {{{0, 1}, 1, c, -1}}, 0)}));
  }
  {
    const Utility c = 2;
    out.emplace(
        "ex_ef1",
        Instance(2, 6, c,
                 {Valuation::CappedGroups(
                      6, {{{0, 1}, 2, c, -1}, {{2, 3, 4, 5}, 2, c, -1}}, -1),
                  Valuation::CappedGroups(6, {{{0, 1}, 2, c, -1}}, -1)}));
  }
  {
    const Utility c = 1;
    out.emplace(
        "ex_mms",
        Instance(2, 10, c,
                 {Valuation::CappedGroups(
                      10, {{{0, 1, 2, 3}, 2, c, 0}, {{4, 5}, 2, c, 0}}, -1),
                  Valuation::CappedGroups(10, {{{4, 5}, 2, c, -1}}, -1)}));
  }
  out.emplace("non_on",
              Instance(1, 2, 1, {Valuation::Explicit(2, {0, 0, 1, 0})}));
  {
    // Six vertices, nine edges; vertex labels are 1-based as drawn.
    const std::vector<std::pair<int, int>> edges = {
        {1, 2}, {1, 3}, {2, 3}, {4, 2}, {4, 3},
        {4, 5}, {3, 5}, {2, 6}, {4, 6}};
    out.emplace("fig1",
                Instance(1, 9, 1,
                         {Valuation::Tabulate(9, [&](const ItemSet& s) {
                           return GraphicMatroidRank(7, edges, s);
                         })}));
  }
  return out;
}

}  // namespace leximin
