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

#ifndef LEXIMIN_FAIRNESS_H_
#define LEXIMIN_FAIRNESS_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "leximin/core.h"

namespace leximin {

// Entry i-1 is agent i's verdict.
using AgentVerdicts = std::vector<bool>;

bool AllTrue(const AgentVerdicts& verdicts);

// n * v_i(X_i) >= v_i(O), possibly after adding or removing one item.
// Throws ContractViolation if X is not complete.
AgentVerdicts CheckProp1(const Instance& inst, const Allocation& x);

struct Ef1Report {
  // ok[i-1][j-1]: agent i does not envy agent j up to one item.
  std::vector<std::vector<bool>> ok;

  bool all() const;
  std::vector<std::pair<AgentId, AgentId>> violations() const;
};

// Throws ContractViolation if X is not complete.
Ef1Report CheckEf1(const Instance& inst, const Allocation& x);

AgentVerdicts CheckMms(const Instance& inst, const Allocation& x,
                       std::span<const Utility> mms);

// Every prefix sum of `a` is at least that of `b`. Throws ContractViolation
// on a length mismatch.
bool LorenzGeq(const SortedUtilityVector& a, const SortedUtilityVector& b);

// Power mean ((1/n) sum u_i^p)^(1/p) for p <= 1, the geometric mean at p = 0.
// nullopt when some u_i < 0. For p <= 0 any zero entry gives 0.
std::optional<double> PMeanWelfare(std::span<const Utility> u, double p);

}  // namespace leximin

#endif  // LEXIMIN_FAIRNESS_H_
