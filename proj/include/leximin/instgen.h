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

#ifndef LEXIMIN_INSTGEN_H_
#define LEXIMIN_INSTGEN_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leximin/core.h"

namespace leximin {

// splitmix64 with the usual constants; the reference stream for every
// generator so instances are identical across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  // Next() % bound; bound must be positive.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [lo, hi] via Below.
  int Between(int lo, int hi);

 private:
  std::uint64_t state_;
};

// Relative weights of the values c, 0 and -1.
struct ValueRatios {
  int c = 1;
  int zero = 1;
  int minus_one = 1;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
};

// Every v_i(o) is drawn independently, agent by agent and item by item.
// Throws ContractViolation on negative ratios or a zero total.
Instance GenRandomAdditive(int num_agents, int num_items, Utility c,
                           ValueRatios ratios, std::uint64_t seed);

// Per agent: a group count k from `groups`, then a slot in [0, k] per item
// (slot k = ungrouped), then per group a cap from `caps` and (hi, lo) from
// (c, 0), (c, -1), (0, -1), (0, 0), then a default marginal in {0, -1}.
// Empty groups are dropped.
Instance GenCappedGroups(int num_agents, int num_items, Utility c,
                         IntRange groups, IntRange caps, std::uint64_t seed);

// Exact p-dimensional matching. Vertex v of part k (both 0-based) is item
// k * a + v in the reduction.
struct ExPdmInstance {
  int p = 3;
  int a = 1;
  std::vector<std::vector<int>> edges;  // one vertex per part
};

// One agent per edge over p*a vertex items and a*q dummies (highest indices).
// Agents value their incident vertices at q and everything else at -p. The
// result is general additive with c = q. Throws InvalidInstance unless p >= 3,
// q >= 1, gcd(p, q) = 1 and the edges are well formed.
Instance GenHardness(const ExPdmInstance& expdm, int q);

// p = 3, a = 2 instances with and without a perfect matching.
ExPdmInstance MatchingExPdm();
ExPdmInstance NoMatchingExPdm();

// Size of the largest acyclic subset of `s`, where item k is edges[k].
int GraphicMatroidRank(int num_vertices,
                       std::span<const std::pair<int, int>> edges,
                       const ItemSet& s);

// Named example instances: ex2, ex_classic, ex_ef1, ex_mms, non_on, fig1.
std::map<std::string, Instance> Fixtures();

}  // namespace leximin

#endif  // LEXIMIN_INSTGEN_H_
