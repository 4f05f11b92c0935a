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

#include "leximin/oracle.h"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "leximin/errors.h"
#include "leximin/fairness.h"

namespace leximin {
namespace {

UtilityVector ValuesOf(const Instance& inst, std::span<const ItemSet> bundles) {
  UtilityVector u(bundles.size());
  for (std::size_t h = 0; h < bundles.size(); ++h) {
    u[h] = inst.valuation(static_cast<AgentId>(h + 1)).Value(bundles[h]);
  }
  return u;
}

UtilityVector CPartValues(Utility c, const Allocation& xc) {
  UtilityVector u(xc.num_agents());
  for (AgentId h = 1; h <= xc.num_agents(); ++h) {
    u[h - 1] = c * xc.bundle(h).size();
  }
  return u;
}

}  // namespace

OracleBudget OracleBudget::FromEnvironment() {
  OracleBudget budget;
  const char* raw = std::getenv("MANNA_ORACLE_BUDGET");
  if (raw == nullptr) return budget;
  std::uint64_t parsed = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, parsed);
  if (ec == std::errc() && ptr == end && parsed > 0) {
    budget.max_enumerations = parsed;
  }
  return budget;
}

void OracleBudget::Check(int num_agents, int num_items) const {
  std::uint64_t count = 1;
  for (int k = 0; k < num_items; ++k) {
    if (count > max_enumerations / static_cast<std::uint64_t>(num_agents)) {
      throw BudgetExceeded(std::to_string(num_agents) + "^" +
                           std::to_string(num_items) +
                           " allocations exceed the oracle budget of " +
                           std::to_string(max_enumerations));
    }
    count *= static_cast<std::uint64_t>(num_agents);
  }
}

void ForEachCompleteAllocation(
    int num_agents, int num_items, const OracleBudget& budget,
    const std::function<void(std::span<const ItemSet> bundles)>& visit) {
  if (num_agents < 1) throw ContractViolation("need at least one agent");
  budget.Check(num_agents, num_items);
  std::vector<AgentId> owner(num_items, 1);
  std::vector<ItemSet> bundles(num_agents, ItemSet(num_items));
  for (ItemId o = 0; o < num_items; ++o) bundles[0].insert(o);
  while (true) {
    visit(bundles);
    ItemId k = 0;
    for (; k < num_items; ++k) {
      bundles[owner[k] - 1].erase(k);
      if (owner[k] < num_agents) {
        bundles[owner[k]++].insert(k);
        break;
      }
      owner[k] = 1;
      bundles[0].insert(k);
    }
    if (k == num_items) return;
  }
}

BruteLeximinResult BruteLeximin(const Instance& inst,
                                const OracleBudget& budget) {
  std::optional<BruteLeximinResult> best;
  ForEachCompleteAllocation(
      inst.num_agents(), inst.num_items(), budget,
      [&](std::span<const ItemSet> bundles) {
        SortedUtilityVector sorted(ValuesOf(inst, bundles));
        if (!best || LexCompare(sorted, best->sorted) > 0) {
          best = BruteLeximinResult{
              std::move(sorted), Allocation::FromBundles(inst.num_items(), bundles)};
        }
      });
  return std::move(*best);
}

Utility BruteMaxUsw(const Instance& inst, const OracleBudget& budget) {
  Utility best = std::numeric_limits<Utility>::min();
  ForEachCompleteAllocation(inst.num_agents(), inst.num_items(), budget,
                            [&](std::span<const ItemSet> bundles) {
                              Utility total = 0;
                              for (Utility u : ValuesOf(inst, bundles)) total += u;
                              best = std::max(best, total);
                            });
  return best;
}

Utility BruteMms(const Instance& inst, AgentId i, const OracleBudget& budget) {
  if (i < 1 || i > inst.num_agents()) {
    throw ContractViolation("no agent " + std::to_string(i));
  }
  const Valuation& v = inst.valuation(i);
  Utility best = std::numeric_limits<Utility>::min();
  ForEachCompleteAllocation(inst.num_agents(), inst.num_items(), budget,
                            [&](std::span<const ItemSet> bundles) {
                              Utility worst = std::numeric_limits<Utility>::max();
                              for (const ItemSet& part : bundles) {
                                worst = std::min(worst, v.Value(part));
                              }
                              best = std::max(best, worst);
                            });
  return best;
}

bool BruteLorenzDominating(const Instance& inst, const Allocation& x,
                           const OracleBudget& budget) {
  if (!x.complete()) {
    throw ContractViolation("Lorenz dominance is checked on complete allocations");
  }
  const SortedUtilityVector mine(UtilityVectorOf(inst, x));
  bool dominating = true;
  ForEachCompleteAllocation(
      inst.num_agents(), inst.num_items(), budget,
      [&](std::span<const ItemSet> bundles) {
        if (dominating &&
            !LorenzGeq(mine, SortedUtilityVector(ValuesOf(inst, bundles)))) {
          dominating = false;
        }
      });
  return dominating;
}

std::optional<double> BruteMaxPMeanWelfare(const Instance& inst, double p,
                                           const OracleBudget& budget) {
  std::optional<double> best;
  ForEachCompleteAllocation(inst.num_agents(), inst.num_items(), budget,
                            [&](std::span<const ItemSet> bundles) {
                              const UtilityVector u = ValuesOf(inst, bundles);
                              const std::optional<double> w = PMeanWelfare(u, p);
                              if (w && (!best || *w > *best)) best = w;
                            });
  return best;
}

std::strong_ordering CompareDomination(Utility c, const DecomposedOutcome& a,
                                       const DecomposedOutcome& b) {
  const UtilityVector ca = CPartValues(c, a.decomposition.xc);
  const UtilityVector cb = CPartValues(c, b.decomposition.xc);
  if (auto order = LexCompare(SortedUtilityVector(ca), SortedUtilityVector(cb));
      order != 0) {
    return order;
  }
  if (auto order = LexCompare(ca, cb); order != 0) return order;
  return LexCompare(a.utilities, b.utilities);
}

std::strong_ordering CompareDomination(const Instance& inst,
                                       const Allocation& a,
                                       const Allocation& b) {
  return CompareDomination(
      inst.c(), DecomposedOutcome{Decompose3(inst, a), UtilityVectorOf(inst, a)},
      DecomposedOutcome{Decompose3(inst, b), UtilityVectorOf(inst, b)});
}

}  // namespace leximin
