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

#include "leximin/solver.h"

#include <optional>
#include <string>
#include <utility>

#include "leximin/errors.h"
#include "leximin/yankee.h"

namespace leximin {
namespace {

__int128 AugmentationBound(int n, int m) {
  const __int128 n2 = static_cast<__int128>(n) * n;
  const __int128 m3 = static_cast<__int128>(m) * m * m;
  return m + n2 * n2 * m3;
}

void CountAndCheck(const SolverState& state, int n, int m) {
  const __int128 total =
      state.pareto_augmentations + state.exchange_augmentations;
  if (total > AugmentationBound(n, m)) {
    throw InvariantViolation("phase 2 exceeded m + n^4 m^3 augmentations");
  }
}

}  // namespace

void TraceWriter::OnAugment(const SolverState& /*after*/,
                            const AugmentingPath& path) {
  out_ << "phase2 "
       << (path.kind == PathKind::kParetoImproving ? "pareto" : "exchange")
       << " i=" << path.source_agent << " j=" << path.target << " path=[";
  for (std::size_t k = 0; k < path.items.size(); ++k) {
    out_ << (k ? "," : "") << ItemName(path.items[k]);
  }
  out_ << "] w=" << path.doubled_weight << "\n";
}

void TraceWriter::OnAssign(const SolverState& /*after*/, AgentId agent,
                           ItemId item) {
  out_ << "phase3 give " << ItemName(item) << " to agent " << agent << "\n";
}

void CheckSupported(const Instance& inst) {
  for (AgentId i = 1; i <= inst.num_agents(); ++i) {
    const Valuation& v = inst.valuation(i);
    const std::string who = "agent " + std::to_string(i) + ": ";
    switch (v.kind()) {
      case ValuationKind::kGeneralAdditive:
        throw UnsupportedValuation(
            who + "general additive valuations are outside the solver's class");
      case ValuationKind::kExplicit: {
        try {
          const RangeReport range = ValidateRange(v, inst.c());
          if (!range.ok) throw UnsupportedValuation(who + range.Describe());
          const SubmodularityReport sub = ValidateSubmodular(v);
          if (!sub.ok) throw UnsupportedValuation(who + sub.Describe());
          const OrderNeutralityReport neutral = ValidateOrderNeutral(v);
          if (!neutral.ok) throw UnsupportedValuation(who + neutral.Describe());
        } catch (const MalformedValuation& e) {
          throw UnsupportedValuation(who + e.what());
        }
        break;
      }
      case ValuationKind::kAdditive:
      case ValuationKind::kCappedGroups:
        break;
    }
  }
}

__int128 ScaledPotential(const Allocation& xc) {
  const __int128 n2 =
      static_cast<__int128>(xc.num_agents()) * xc.num_agents();
  __int128 total = 0;
  for (AgentId h = 1; h <= xc.num_agents(); ++h) {
    const __int128 term = n2 * xc.bundle(h).size() + h;
    total += term * term;
  }
  return total;
}

SolverState Phase1(const Instance& inst) {
  const int n = inst.num_agents();
  const int m = inst.num_items();
  SolverState state{Allocation(n, m),
                    YankeeSwap(m, ThresholdProfile(inst, 0)),
                    Allocation(n, m), Phase::kTwo, 0, 0};
  CheckExchangeInvariants(inst, state.xc, state.x0);
  return state;
}

void Phase2(const Instance& inst, SolverState& state,
            SolverObserver* observer) {
  const int n = inst.num_agents();
  const int m = inst.num_items();
  state.phase = Phase::kTwo;
  auto apply = [&](const AugmentingPath& path) {
    ExchangeState next = Augment(inst, state.xc, state.x0, path);
    state.xc = std::move(next.xc);
    state.x0 = std::move(next.x0);
    ++(path.kind == PathKind::kParetoImproving ? state.pareto_augmentations
                                               : state.exchange_augmentations);
    CountAndCheck(state, n, m);
    if (observer) observer->OnAugment(state, path);
  };
  bool changed = true;
  while (changed) {
    changed = false;
    bool improved = true;
    while (improved) {
      improved = false;
      const WeightedExchangeGraph g =
          BuildWeightedGraph(inst, state.xc, state.x0);
      for (AgentId i = 1; i <= n && !improved; ++i) {
        const std::optional<AugmentingPath> path =
            MinWeightParetoPath(g, FSet(inst, state.xc, i, inst.c()), i);
        if (path) {
          apply(*path);
          improved = true;
        }
      }
    }
    const WeightedExchangeGraph g = BuildWeightedGraph(inst, state.xc, state.x0);
    for (AgentId i = 1; i <= n && !changed; ++i) {
      const int size_i = state.xc.bundle(i).size();
      std::optional<ItemSet> sources;
      for (AgentId j = 1; j <= n && !changed; ++j) {
        const int size_j = state.xc.bundle(j).size();
        const bool wanted =
            size_i + 1 < size_j || (size_i + 1 == size_j && i < j);
        if (j == i || !wanted) continue;
        if (!sources) sources = FSet(inst, state.xc, i, inst.c());
        const std::optional<AugmentingPath> path =
            MinWeightExchangePath(g, *sources, i, j);
        if (!path) continue;
        const __int128 before = ScaledPotential(state.xc);
        apply(*path);
        if (ScaledPotential(state.xc) >= before) {
          throw InvariantViolation("exchange augmentation did not decrease "
                                   "the potential");
        }
        changed = true;
      }
    }
  }
  state.phase = Phase::kThree;
}

SolveReport Phase3(const Instance& inst, SolverState state,
                   SolverObserver* observer) {
  const int n = inst.num_agents();
  const int m = inst.num_items();
  state.phase = Phase::kThree;
  const Utility c = inst.c();
  auto bundle_of = [&](AgentId h) {
    return state.xc.bundle(h) | state.x0.bundle(h) | state.xm1.bundle(h);
  };
  const ItemSet leftover = state.xc.unallocated() & state.x0.unallocated() &
                           state.xm1.unallocated();
  std::vector<Utility> value(n + 1, 0);
  for (AgentId h = 1; h <= n; ++h) value[h] = inst.valuation(h).Value(bundle_of(h));
  for (ItemId o : leftover.items()) {
    AgentId i = 1;
    for (AgentId h = 2; h <= n; ++h) {
      if (value[h] >= value[i]) i = h;
    }
    const ItemSet bundle = bundle_of(i);
    const Utility delta = inst.valuation(i).Marginal(bundle, o);
    if (delta != -1) {
      throw InvariantViolation("phase 3 item " + ItemName(o) + " has marginal " +
                               std::to_string(delta) + " for agent " +
                               std::to_string(i));
    }
    state.xm1.Move(o, i);
    value[i] += delta;
    if (value[i] != c * state.xc.bundle(i).size() - state.xm1.bundle(i).size()) {
      throw InvariantViolation("phase 3 broke v_i = c|xc_i| - |xm1_i| for "
                               "agent " + std::to_string(i));
    }
    if (observer) observer->OnAssign(state, i, o);
  }
  state.phase = Phase::kDone;

  std::vector<ItemSet> bundles;
  bundles.reserve(n);
  for (AgentId h = 1; h <= n; ++h) bundles.push_back(bundle_of(h));
  SolveReport report;
  report.allocation = Allocation::FromBundles(m, bundles);
  if (!report.allocation.complete()) {
    throw InvariantViolation("solver output is not complete");
  }
  report.decomposition = TriDecomposition{state.xc, state.x0, state.xm1};
  const TriDecompositionCheck check =
      VerifyTriDecomposition(inst, report.allocation, report.decomposition);
  if (!check.ok) {
    throw DecompositionFailure(
        check.clause, "solver decomposition clause (" +
                          std::string(1, check.clause) + ") fails for agent " +
                          std::to_string(check.agent) + ": " + check.detail);
  }
  report.utilities = UtilityVectorOf(inst, report.allocation);
  report.sorted = SortedUtilityVector(report.utilities);
  Utility from_parts = 0;
  for (AgentId h = 1; h <= n; ++h) {
    report.usw += report.utilities[h - 1];
    from_parts += c * state.xc.bundle(h).size() - state.xm1.bundle(h).size();
  }
  if (report.usw != from_parts) {
    throw InvariantViolation("usw disagrees with the decomposition");
  }
  report.pareto_augmentations = state.pareto_augmentations;
  report.exchange_augmentations = state.exchange_augmentations;
  return report;
}

SolveReport Solve(const Instance& inst, SolverObserver* observer) {
  CheckSupported(inst);
  SolverState state = Phase1(inst);
  Phase2(inst, state, observer);
  return Phase3(inst, std::move(state), observer);
}

}  // namespace leximin
