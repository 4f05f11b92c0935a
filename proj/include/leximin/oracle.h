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

#ifndef LEXIMIN_ORACLE_H_
#define LEXIMIN_ORACLE_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "leximin/core.h"
#include "leximin/threshold.h"

namespace leximin {

// Exhaustive search refuses to start when n^m exceeds `max_enumerations`.
struct OracleBudget {
  std::uint64_t max_enumerations = 100'000'000;

  // Default budget, overridden by MANNA_ORACLE_BUDGET when it parses as a
  // positive integer.
  static OracleBudget FromEnvironment();

  // Throws BudgetExceeded if n^m > max_enumerations.
  void Check(int num_agents, int num_items) const;
};

// Visits every complete allocation of m items to agents 1..n. Item 0 is the
// fastest-moving digit and agents count up from 1. `bundles[i - 1]` is X_i.
void ForEachCompleteAllocation(
    int num_agents, int num_items, const OracleBudget& budget,
    const std::function<void(std::span<const ItemSet> bundles)>& visit);

struct BruteLeximinResult {
  SortedUtilityVector sorted;
  Allocation witness;  // first optimum in enumeration order
};

BruteLeximinResult BruteLeximin(
    const Instance& inst,
    const OracleBudget& budget = OracleBudget::FromEnvironment());

Utility BruteMaxUsw(const Instance& inst,
                    const OracleBudget& budget = OracleBudget::FromEnvironment());

// max over n-way partitions of min over parts of v_i(part).
Utility BruteMms(const Instance& inst, AgentId i,
                 const OracleBudget& budget = OracleBudget::FromEnvironment());

// True iff X Lorenz-dominates every complete allocation.
bool BruteLorenzDominating(
    const Instance& inst, const Allocation& x,
    const OracleBudget& budget = OracleBudget::FromEnvironment());

// Largest p-mean welfare over complete allocations where it is defined, i.e.
// all utilities are non-negative; nullopt if there is none.
std::optional<double> BruteMaxPMeanWelfare(
    const Instance& inst, double p,
    const OracleBudget& budget = OracleBudget::FromEnvironment());

struct DecomposedOutcome {
  TriDecomposition decomposition;
  UtilityVector utilities;
};

// Domination order: (a) sorted c-part values, then (b) c-part values agent by
// agent, then (c) full utility vectors. `greater` means `a` dominates.
std::strong_ordering CompareDomination(Utility c, const DecomposedOutcome& a,
                                       const DecomposedOutcome& b);

// Same, decomposing both allocations with Decompose3 (unique for additive
// valuations).
std::strong_ordering CompareDomination(const Instance& inst,
                                       const Allocation& a,
                                       const Allocation& b);

}  // namespace leximin

#endif  // LEXIMIN_ORACLE_H_
