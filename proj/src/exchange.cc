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

#include "leximin/exchange.h"

#include <functional>
#include <sstream>
#include <tuple>
#include <utility>

#include "leximin/errors.h"

namespace leximin {
namespace {

struct Label {
  int cost = 0;
  int edges = 0;
  std::vector<ItemId> seq;

  friend bool operator<(const Label& a, const Label& b) {
    return std::tie(a.cost, a.edges, a.seq) < std::tie(b.cost, b.edges, b.seq);
  }
};

// Extra cost charged when a path stops at `last`; `prev` is -1 for a
// single-item path.
using TerminalCost = std::function<int(ItemId prev, ItemId last)>;

// Dijkstra over full labels. The order (cost, edges, sequence) is preserved
// by appending an edge, so the first label settled at a node is optimal.
// Targets are never extended: a path through a target has a cheaper prefix.
std::optional<Label> LabelSearch(const ExchangeGraph& g,
                                 const std::vector<std::vector<int>>* weights,
                                 const ItemSet& sources, const ItemSet& targets,
                                 const TerminalCost& terminal) {
  const int m = g.num_items();
  std::vector<std::optional<Label>> best(m);
  std::vector<bool> settled(m, false);
  std::optional<Label> answer;
  auto offer_final = [&](Label label) {
    if (!answer || label < *answer) answer = std::move(label);
  };
  sources.ForEach([&](ItemId s) {
    if (targets.contains(s)) {
      offer_final(Label{terminal(-1, s), 0, {s}});
    } else {
      best[s] = Label{0, 0, {s}};
    }
  });
  while (true) {
    int v = -1;
    for (int u = 0; u < m; ++u) {
      if (!settled[u] && best[u] && (v < 0 || *best[u] < *best[v])) v = u;
    }
    if (v < 0) break;
    // Anything reached from here costs strictly more.
    if (answer && answer->cost <= best[v]->cost) break;
    settled[v] = true;
    const Label& at = *best[v];
    const std::vector<ItemId>& next = g.successors[v];
    for (std::size_t k = 0; k < next.size(); ++k) {
      const ItemId w = next[k];
      if (settled[w]) continue;
      Label extended{at.cost + (weights ? (*weights)[v][k] : 1), at.edges + 1,
                     at.seq};
      extended.seq.push_back(w);
      if (targets.contains(w)) {
        extended.cost += terminal(v, w);
        offer_final(std::move(extended));
      } else if (!best[w] || extended < *best[w]) {
        best[w] = std::move(extended);
      }
    }
  }
  return answer;
}

}  // namespace

int ExchangeGraph::num_edges() const {
  int total = 0;
  for (const auto& out : successors) total += static_cast<int>(out.size());
  return total;
}

bool ExchangeGraph::HasEdge(ItemId from, ItemId to) const {
  for (ItemId w : successors[from]) {
    if (w == to) return true;
  }
  return false;
}

int WeightedExchangeGraph::Weight(ItemId from, ItemId to) const {
  const std::vector<ItemId>& out = graph.successors[from];
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] == to) return weights[from][k];
  }
  throw ContractViolation("no edge " + ItemName(from) + " -> " + ItemName(to));
}

ExchangeGraph BuildExchangeGraph(const Allocation& x,
                                 const BinaryProfile& betas) {
  const int m = x.num_items();
  ExchangeGraph g;
  g.owner.resize(m);
  g.successors.assign(m, {});
  for (ItemId o = 0; o < m; ++o) g.owner[o] = x.owner(o);
  for (AgentId j = 1; j <= x.num_agents(); ++j) {
    const BinaryValuation& beta = *betas[j - 1];
    const ItemSet& bundle = x.bundle(j);
    const int full = beta.Value(bundle);
    bundle.ForEach([&](ItemId o) {
      const ItemSet rest = bundle.Without(o);
      const int without = beta.Value(rest);
      const std::vector<int> gain = beta.Marginals(rest);
      for (ItemId w = 0; w < m; ++w) {
        if (!bundle.contains(w) && without + gain[w] == full) {
          g.successors[o].push_back(w);
        }
      }
    });
  }
  return g;
}

void CheckExchangeInvariants(const Instance& inst, const Allocation& xc,
                             const Allocation& x0) {
  xc.CheckInvariant();
  x0.CheckInvariant();
  for (AgentId h = 1; h <= inst.num_agents(); ++h) {
    const ItemSet& top = xc.bundle(h);
    const ItemSet& zero = x0.bundle(h);
    if (top.Intersects(zero)) {
      throw InvariantViolation("xc and x0 overlap for agent " +
                               std::to_string(h));
    }
    const ThresholdFunction beta_c(inst.valuation(h), inst.c());
    if (beta_c.Value(top) != top.size()) {
      throw InvariantViolation("xc is not clean for agent " +
                               std::to_string(h));
    }
    const ItemSet both = top | zero;
    const ThresholdFunction beta_0(inst.valuation(h), 0);
    if (beta_0.Value(both) != both.size()) {
      throw InvariantViolation("xc | x0 is not clean for agent " +
                               std::to_string(h));
    }
    for (AgentId k = h + 1; k <= inst.num_agents(); ++k) {
      if (both.Intersects(xc.bundle(k) | x0.bundle(k))) {
        throw InvariantViolation("xc | x0 gives an item to agents " +
                                 std::to_string(h) + " and " +
                                 std::to_string(k));
      }
    }
  }
}

WeightedExchangeGraph BuildWeightedGraph(const Instance& inst,
                                         const Allocation& xc,
                                         const Allocation& x0) {
  CheckExchangeInvariants(inst, xc, x0);
  WeightedExchangeGraph w;
  w.graph = BuildExchangeGraph(xc, ThresholdProfile(inst, inst.c()));
  const int m = inst.num_items();
  w.x0_owner.resize(m);
  for (ItemId o = 0; o < m; ++o) w.x0_owner[o] = x0.owner(o);
  w.weights.resize(m);
  for (ItemId o = 0; o < m; ++o) {
    for (ItemId to : w.graph.successors[o]) {
      w.weights[o].push_back(w.x0_owner[to] == w.graph.owner[o] ? 1 : 2);
    }
  }
  return w;
}

ItemSet FSet(const BinaryValuation& beta, const Allocation& x, AgentId i) {
  const ItemSet& bundle = x.bundle(i);
  const std::vector<int> gain = beta.Marginals(bundle);
  ItemSet out(x.num_items());
  for (ItemId o = 0; o < x.num_items(); ++o) {
    if (!bundle.contains(o) && gain[o] == 1) out.insert(o);
  }
  return out;
}

ItemSet FSet(const Instance& inst, const Allocation& x, AgentId i,
             Utility tau) {
  return FSet(ThresholdFunction(inst.valuation(i), tau), x, i);
}

std::optional<std::vector<ItemId>> ShortestPath(const ExchangeGraph& g,
                                                const ItemSet& sources,
                                                const ItemSet& targets) {
  std::optional<Label> found =
      LabelSearch(g, nullptr, sources, targets, [](ItemId, ItemId) { return 0; });
  if (!found) return std::nullopt;
  return std::move(found->seq);
}

std::optional<AugmentingPath> MinWeightParetoPath(
    const WeightedExchangeGraph& g, const ItemSet& sources, AgentId requester) {
  ItemSet targets(g.graph.num_items());
  for (ItemId o = 0; o < g.graph.num_items(); ++o) {
    if (g.graph.owner[o] == kUnallocated) targets.insert(o);
  }
  const TerminalCost pickup = [&](ItemId prev, ItemId last) {
    const AgentId absorber = prev < 0 ? requester : g.graph.owner[prev];
    return g.x0_owner[last] == absorber ? 1 : 2;
  };
  std::optional<Label> found =
      LabelSearch(g.graph, &g.weights, sources, targets, pickup);
  if (!found) return std::nullopt;
  return AugmentingPath{std::move(found->seq), PathKind::kParetoImproving,
                        requester, kUnallocated, found->cost};
}

std::optional<AugmentingPath> MinWeightExchangePath(
    const WeightedExchangeGraph& g, const ItemSet& sources, AgentId requester,
    AgentId target) {
  if (target == kUnallocated || target == requester) {
    throw ContractViolation("exchange path target must be another agent");
  }
  ItemSet targets(g.graph.num_items());
  for (ItemId o = 0; o < g.graph.num_items(); ++o) {
    if (g.graph.owner[o] == target) targets.insert(o);
  }
  std::optional<Label> found = LabelSearch(
      g.graph, &g.weights, sources, targets, [](ItemId, ItemId) { return 0; });
  if (!found) return std::nullopt;
  return AugmentingPath{std::move(found->seq), PathKind::kExchange, requester,
                        target, found->cost};
}

void ShiftAlongPath(Allocation& x, const std::vector<ItemId>& path,
                    AgentId requester) {
  ItemSet seen(x.num_items());
  std::vector<AgentId> previous;
  previous.reserve(path.size());
  for (ItemId o : path) {
    if (o < 0 || o >= x.num_items() || seen.contains(o)) {
      throw ContractViolation("path items must be distinct and in range");
    }
    seen.insert(o);
    previous.push_back(x.owner(o));
  }
  if (path.empty()) return;
  x.Move(path[0], requester);
  for (std::size_t l = 0; l + 1 < path.size(); ++l) {
    x.Move(path[l + 1], previous[l]);
  }
}

ExchangeState ApplyPath(const Allocation& xc, const Allocation& x0,
                        const AugmentingPath& p) {
  ExchangeState next{xc, x0};
  ShiftAlongPath(next.xc, p.items, p.source_agent);
  if (p.kind == PathKind::kParetoImproving && !p.items.empty()) {
    next.x0.Move(p.items.back(), kUnallocated);
  }
  return next;
}

ExchangeState Augment(const Instance& inst, const Allocation& xc,
                      const Allocation& x0, const AugmentingPath& p) {
  ExchangeState next = ApplyPath(xc, x0, p);
  CheckExchangeInvariants(inst, next.xc, next.x0);
  for (AgentId h = 1; h <= inst.num_agents(); ++h) {
    int expected = xc.bundle(h).size();
    if (h == p.source_agent) ++expected;
    if (p.kind == PathKind::kExchange && h == p.target) --expected;
    if (next.xc.bundle(h).size() != expected) {
      throw InvariantViolation("augmentation changed |xc_" +
                               std::to_string(h) + "| unexpectedly");
    }
  }
  return next;
}

std::string FormatEdgeList(const WeightedExchangeGraph& g) {
  std::ostringstream out;
  for (ItemId o = 0; o < g.graph.num_items(); ++o) {
    const std::vector<ItemId>& next = g.graph.successors[o];
    for (std::size_t k = 0; k < next.size(); ++k) {
      out << ItemName(o) << " -> " << ItemName(next[k])
          << " w=" << g.weights[o][k] << "\n";
    }
  }
  return out.str();
}

std::string ItemName(ItemId o) { return "o" + std::to_string(o + 1); }

}  // namespace leximin
