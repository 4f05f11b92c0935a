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

#include "leximin/fairness.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "leximin/errors.h"

namespace leximin {
namespace {

void RequireComplete(const Allocation& x, const char* what) {
  if (!x.complete()) {
    throw ContractViolation(std::string(what) +
                            " is defined for complete allocations only");
  }
}

}  // namespace

bool AllTrue(const AgentVerdicts& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](bool ok) { return ok; });
}

AgentVerdicts CheckProp1(const Instance& inst, const Allocation& x) {
  RequireComplete(x, "PROP1");
  const int n = inst.num_agents();
  const ItemSet everything = inst.AllItems();
  AgentVerdicts verdicts(n, false);
  for (AgentId i = 1; i <= n; ++i) {
    const Valuation& v = inst.valuation(i);
    const Utility share = v.Value(everything);
    const ItemSet& own = x.bundle(i);
    auto enough = [&](const ItemSet& s) { return n * v.Value(s) >= share; };
    bool ok = enough(own);
    for (ItemId o = 0; o < inst.num_items() && !ok; ++o) {
      ok = enough(own.contains(o) ? own.Without(o) : own.With(o));
    }
    verdicts[i - 1] = ok;
  }
  return verdicts;
}

bool Ef1Report::all() const {
  for (const auto& row : ok) {
    if (!AllTrue(row)) return false;
  }
  return true;
}

std::vector<std::pair<AgentId, AgentId>> Ef1Report::violations() const {
  std::vector<std::pair<AgentId, AgentId>> out;
  for (std::size_t i = 0; i < ok.size(); ++i) {
    for (std::size_t j = 0; j < ok[i].size(); ++j) {
      if (!ok[i][j]) out.emplace_back(i + 1, j + 1);
    }
  }
  return out;
}

Ef1Report CheckEf1(const Instance& inst, const Allocation& x) {
  RequireComplete(x, "EF1");
  const int n = inst.num_agents();
  Ef1Report report;
  report.ok.assign(n, std::vector<bool>(n, true));
  for (AgentId i = 1; i <= n; ++i) {
    const Valuation& v = inst.valuation(i);
    const ItemSet& own = x.bundle(i);
    for (AgentId j = 1; j <= n; ++j) {
      if (i == j) continue;
      const ItemSet& other = x.bundle(j);
      bool ok = v.Value(own) >= v.Value(other);
      (own | other).ForEach([&](ItemId o) {
        if (!ok) ok = v.Value(own.Without(o)) >= v.Value(other.Without(o));
      });
      report.ok[i - 1][j - 1] = ok;
    }
  }
  return report;
}

AgentVerdicts CheckMms(const Instance& inst, const Allocation& x,
                       std::span<const Utility> mms) {
  if (static_cast<int>(mms.size()) != inst.num_agents()) {
    throw ContractViolation("one MMS value per agent is required");
  }
  AgentVerdicts verdicts(inst.num_agents());
  for (AgentId i = 1; i <= inst.num_agents(); ++i) {
    verdicts[i - 1] = inst.valuation(i).Value(x.bundle(i)) >= mms[i - 1];
  }
  return verdicts;
}

bool LorenzGeq(const SortedUtilityVector& a, const SortedUtilityVector& b) {
  if (a.size() != b.size()) {
    throw ContractViolation("Lorenz comparison of vectors of different length");
  }
  Utility sum_a = 0;
  Utility sum_b = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sum_a += a[k];
    sum_b += b[k];
    if (sum_a < sum_b) return false;
  }
  return true;
}

std::optional<double> PMeanWelfare(std::span<const Utility> u, double p) {
  if (p > 1) throw ContractViolation("p-mean welfare needs p <= 1");
  if (u.empty()) throw ContractViolation("p-mean welfare of no agents");
  for (Utility x : u) {
    if (x < 0) return std::nullopt;
  }
  const double n = static_cast<double>(u.size());
  if (p <= 0 && std::find(u.begin(), u.end(), 0) != u.end()) return 0.0;
  double acc = 0;
  if (p == 0) {
    for (Utility x : u) acc += std::log(static_cast<double>(x));
    return std::exp(acc / n);
  }
  for (Utility x : u) acc += std::pow(static_cast<double>(x), p);
  return std::pow(acc / n, 1.0 / p);
}

}  // namespace leximin
