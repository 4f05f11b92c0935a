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

#include "leximin/yankee.h"

#include <optional>
#include <vector>

#include "leximin/errors.h"
#include "leximin/exchange.h"

namespace leximin {

Allocation YankeeSwap(int num_items, const BinaryProfile& betas) {
  const int n = static_cast<int>(betas.size());
  Allocation x(n, num_items);
  std::vector<bool> active(n + 1, true);
  active[kUnallocated] = false;
  while (true) {
    AgentId i = kUnallocated;
    for (AgentId h = 1; h <= n; ++h) {
      if (active[h] && (i == kUnallocated ||
                        x.bundle(h).size() < x.bundle(i).size())) {
        i = h;
      }
    }
    if (i == kUnallocated) break;
    const ExchangeGraph g = BuildExchangeGraph(x, betas);
    const ItemSet sources = FSet(*betas[i - 1], x, i);
    const std::optional<std::vector<ItemId>> path =
        ShortestPath(g, sources, x.unallocated());
    if (!path) {
      active[i] = false;
      continue;
    }
    ShiftAlongPath(x, *path, i);
  }
  for (AgentId h = 1; h <= n; ++h) {
    if (betas[h - 1]->Value(x.bundle(h)) != x.bundle(h).size()) {
      throw InvariantViolation("yankee swap left agent " + std::to_string(h) +
                               " with an unclean bundle");
    }
  }
  return x;
}

}  // namespace leximin
