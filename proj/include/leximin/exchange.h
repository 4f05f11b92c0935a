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

#ifndef LEXIMIN_EXCHANGE_H_
#define LEXIMIN_EXCHANGE_H_

#include <optional>
#include <string>
#include <vector>

#include "leximin/core.h"
#include "leximin/threshold.h"

namespace leximin {

// Directed graph on items. o -> o' iff o is in some X_j (j >= 1), o' is not,
// and beta_j(X_j - o + o') = beta_j(X_j). Items in X_0 have no out-edges.
struct ExchangeGraph {
  std::vector<AgentId> owner;                    // per item
  std::vector<std::vector<ItemId>> successors;   // ascending per item

  int num_items() const { return static_cast<int>(owner.size()); }
  int num_edges() const;
  bool HasEdge(ItemId from, ItemId to) const;
};

ExchangeGraph BuildExchangeGraph(const Allocation& x, const BinaryProfile& betas);

// Edge weights in doubled units: 1 when the edge leaves xc_j for x0_j of the
// same agent j, else 2.
struct WeightedExchangeGraph {
  ExchangeGraph graph;
  std::vector<std::vector<int>> weights;  // aligned with graph.successors
  std::vector<AgentId> x0_owner;          // per item

  int Weight(ItemId from, ItemId to) const;
};

// Throws InvariantViolation unless xc is clean w.r.t. beta^c, xc | x0 is clean
// w.r.t. beta^0 and xc_h, x0_h are disjoint for every agent.
void CheckExchangeInvariants(const Instance& inst, const Allocation& xc,
                             const Allocation& x0);

// Checks the invariants above, then builds the graph on xc.
WeightedExchangeGraph BuildWeightedGraph(const Instance& inst,
                                         const Allocation& xc,
                                         const Allocation& x0);

// F(X, i): items outside X_i whose beta-marginal for agent i is 1.
ItemSet FSet(const BinaryValuation& beta, const Allocation& x, AgentId i);
ItemSet FSet(const Instance& inst, const Allocation& x, AgentId i, Utility tau);

enum class PathKind { kParetoImproving, kExchange };

struct AugmentingPath {
  std::vector<ItemId> items;
  PathKind kind = PathKind::kParetoImproving;
  AgentId source_agent = 0;
  AgentId target = kUnallocated;
  int doubled_weight = 0;

  friend bool operator==(const AugmentingPath&,
                         const AugmentingPath&) = default;
};

// Shortest path by edge count from `sources` to `targets`, ties broken by the
// lexicographically smallest item sequence. Paths stop at the first target.
std::optional<std::vector<ItemId>> ShortestPath(const ExchangeGraph& g,
                                                const ItemSet& sources,
                                                const ItemSet& targets);

// Least-cost path from `sources` to X^c_0. Cost is the sum of edge weights
// plus a pickup charge for the last item: 1 if it already sits in x0 of the
// agent that absorbs it, else 2. Ties: fewer edges, then smallest sequence.
std::optional<AugmentingPath> MinWeightParetoPath(
    const WeightedExchangeGraph& g, const ItemSet& sources, AgentId requester);

// Least-weight path from `sources` to xc_target, same tie-breaks.
std::optional<AugmentingPath> MinWeightExchangePath(
    const WeightedExchangeGraph& g, const ItemSet& sources, AgentId requester,
    AgentId target);

// X Lambda P with o_1 going to `requester`: o_{l+1} moves to the previous
// owner of o_l.
void ShiftAlongPath(Allocation& x, const std::vector<ItemId>& path,
                    AgentId requester);

struct ExchangeState {
  Allocation xc;
  Allocation x0;
};

// Applies the augmentation with no checks. For pareto paths the last item
// also leaves x0.
ExchangeState ApplyPath(const Allocation& xc, const Allocation& x0,
                        const AugmentingPath& p);

// ApplyPath followed by the cleanness, disjointness and bundle-size checks.
ExchangeState Augment(const Instance& inst, const Allocation& xc,
                      const Allocation& x0, const AugmentingPath& p);

// "o1 -> o2 w=1" lines, items 1-based, sorted by (from, to).
std::string FormatEdgeList(const WeightedExchangeGraph& g);

// 1-based display name of an item.
std::string ItemName(ItemId o);

}  // namespace leximin

#endif  // LEXIMIN_EXCHANGE_H_
