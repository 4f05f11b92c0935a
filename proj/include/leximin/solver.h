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

#ifndef LEXIMIN_SOLVER_H_
#define LEXIMIN_SOLVER_H_

#include <cstdint>
#include <ostream>

#include "leximin/core.h"
#include "leximin/exchange.h"
#include "leximin/threshold.h"

namespace leximin {

enum class Phase { kOne, kTwo, kThree, kDone };

struct SolverState {
  Allocation xc;
  Allocation x0;
  Allocation xm1;
  Phase phase = Phase::kOne;
  std::int64_t pareto_augmentations = 0;
  std::int64_t exchange_augmentations = 0;
};

struct SolveReport {
  Allocation allocation;
  UtilityVector utilities;
  SortedUtilityVector sorted;
  TriDecomposition decomposition;
  std::int64_t pareto_augmentations = 0;
  std::int64_t exchange_augmentations = 0;
  Utility usw = 0;

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

// Hooks called after each state change. The default does nothing.
class SolverObserver {
 public:
  virtual ~SolverObserver() = default;
  virtual void OnAugment(const SolverState& /*after*/,
                         const AugmentingPath& /*path*/) {}
  virtual void OnAssign(const SolverState& /*after*/, AgentId /*agent*/,
                        ItemId /*item*/) {}
};

// Writes one line per augmentation and per phase-3 assignment.
class TraceWriter : public SolverObserver {
 public:
  explicit TraceWriter(std::ostream& out) : out_(out) {}
  void OnAugment(const SolverState& after, const AugmentingPath& path) override;
  void OnAssign(const SolverState& after, AgentId agent, ItemId item) override;

 private:
  std::ostream& out_;
};

// Throws UnsupportedValuation for general additive valuations and for
// explicit tables that are not submodular, order neutral and {-1, 0, c}.
void CheckSupported(const Instance& inst);

// n^4 * sum_h (|xc_h| + h / n^2)^2, exact.
__int128 ScaledPotential(const Allocation& xc);

// x0 from Yankee Swap over beta^0; xc and xm1 empty.
SolverState Phase1(const Instance& inst);

// Pareto-improving augmentations until none is left, then one exchange
// augmentation for the first pair (i, j) with |xc_i| + 1 < |xc_j|, or
// |xc_i| + 1 = |xc_j| and i < j; repeat until neither applies.
void Phase2(const Instance& inst, SolverState& state,
            SolverObserver* observer = nullptr);

// Hands each leftover item, smallest first, to the highest-index agent among
// those with maximum current value.
SolveReport Phase3(const Instance& inst, SolverState state,
                   SolverObserver* observer = nullptr);

SolveReport Solve(const Instance& inst, SolverObserver* observer = nullptr);

}  // namespace leximin

#endif  // LEXIMIN_SOLVER_H_
