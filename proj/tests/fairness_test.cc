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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "leximin/errors.h"
#include "leximin/oracle.h"
#include "leximin/solver.h"
#include "test_util.h"

namespace leximin {
namespace {

using testing::Fixture;

TEST(Prop1Test, Examples) {
  const Instance mms = Fixture("ex_mms");
  EXPECT_EQ(CheckProp1(mms, Solve(mms).allocation), (AgentVerdicts{true, true}));
  const Instance single(1, 2, 1, {Valuation::Additive({1, -1})});
  const std::vector<ItemSet> all = {ItemSet::Full(2)};
  EXPECT_TRUE(AllTrue(CheckProp1(single, Allocation::FromBundles(2, all))));
  EXPECT_THROW(CheckProp1(single, Allocation(1, 2)), ContractViolation);
}

TEST(Prop1Test, RemovingAChoreCounts) {
  // Agent 1 holds both chores; dropping one reaches the share of -1.
  const Instance inst(2, 2, 1, {Valuation::Additive({-1, -1}), Valuation::Additive({0, 0})});
  const std::vector<ItemSet> bundles = {ItemSet::Full(2), ItemSet(2)};
  EXPECT_EQ(CheckProp1(inst, Allocation::FromBundles(2, bundles)),
            (AgentVerdicts{true, true}));
  const Instance three(3, 3, 1,
                       {Valuation::Additive({-1, -1, -1}), Valuation::Additive({0, 0, 0}),
                        Valuation::Additive({0, 0, 0})});
  const std::vector<ItemSet> heavy = {ItemSet::Full(3), ItemSet(3), ItemSet(3)};
  EXPECT_EQ(CheckProp1(three, Allocation::FromBundles(3, heavy)),
            (AgentVerdicts{false, true, true}));
}

TEST(Ef1Test, EfOneFixtureViolation) {
  const Instance inst = Fixture("ex_ef1");
  const Allocation x = Solve(inst).allocation;
  const Ef1Report r = CheckEf1(inst, x);
  EXPECT_FALSE(r.all());
  EXPECT_EQ(r.violations(), (std::vector<std::pair<AgentId, AgentId>>{{1, 2}}));
  EXPECT_EQ(inst.valuation(1).Value(x.bundle(1)), 3);
  EXPECT_EQ(inst.valuation(1).Value(x.bundle(2)), 6);
}

TEST(Ef1Test, AdditiveLeximinExample) {
  const Utility c = 2;
  const Instance inst(2, 2, c,
                      {Valuation::Additive({c, -1}), Valuation::Additive({c, -1})});
  const BruteLeximinResult best = BruteLeximin(inst);
  EXPECT_EQ(best.sorted.values(), (std::vector<Utility>{0, c - 1}));
  EXPECT_TRUE(CheckEf1(inst, best.witness).all());
  EXPECT_TRUE(CheckEf1(inst, Solve(inst).allocation).all());
}

TEST(Ef1Test, NoItems) {
  const Instance inst(2, 0, 1, {Valuation::Additive({}), Valuation::Additive({})});
  EXPECT_TRUE(CheckEf1(inst, Allocation(2, 0)).all());
}

TEST(MmsTest, Examples) {
  const Instance inst = Fixture("ex_mms");
  const std::vector<Utility> mms = {BruteMms(inst, 1), BruteMms(inst, 2)};
  EXPECT_EQ(mms[0], 1);
  const AgentVerdicts v = CheckMms(inst, Solve(inst).allocation, mms);
  EXPECT_FALSE(v[0]);
  const Instance single(1, 2, 1, {Valuation::Additive({1, -1})});
  const std::vector<ItemSet> all = {ItemSet::Full(2)};
  const std::vector<Utility> own = {BruteMms(single, 1)};
  EXPECT_TRUE(AllTrue(CheckMms(single, Allocation::FromBundles(2, all), own)));
}

TEST(LorenzGeqTest, Examples) {
  EXPECT_TRUE(LorenzGeq(SortedUtilityVector({0, 2}), SortedUtilityVector({-1, 3})));
  EXPECT_FALSE(LorenzGeq(SortedUtilityVector({1, 1}), SortedUtilityVector({0, 3})));
  EXPECT_THROW(LorenzGeq(SortedUtilityVector({1}), SortedUtilityVector({0, 3})),
               ContractViolation);
}

TEST(PMeanWelfareTest, Examples) {
  EXPECT_EQ(*PMeanWelfare(std::vector<Utility>{3, 0}, 0), 0.0);
  EXPECT_EQ(*PMeanWelfare(std::vector<Utility>{2, 2}, 1), 2.0);
  EXPECT_FALSE(PMeanWelfare(std::vector<Utility>{-1, 3}, 0));
  EXPECT_FALSE(PMeanWelfare(std::vector<Utility>{-1, 3}, 1));
  EXPECT_FALSE(PMeanWelfare(std::vector<Utility>{-1, 3}, -2));
  EXPECT_NEAR(*PMeanWelfare(std::vector<Utility>{1, 4}, 0), 2.0, 1e-12);
  EXPECT_NEAR(*PMeanWelfare(std::vector<Utility>{1, 1}, -1), 1.0, 1e-12);
  EXPECT_EQ(*PMeanWelfare(std::vector<Utility>{0, 5}, -1), 0.0);
  EXPECT_THROW(PMeanWelfare(std::vector<Utility>{1}, 2), ContractViolation);
}

// Applies item permutation `perm` (old item o becomes perm[o]).
Instance Relabel(const Instance& inst, const std::vector<ItemId>& perm) {
  std::vector<Valuation> out;
  for (const Valuation& v : inst.valuations()) {
    if (const AdditiveSpec* a = v.additive()) {
      std::vector<Utility> values(a->values.size());
      for (std::size_t o = 0; o < values.size(); ++o) values[perm[o]] = a->values[o];
      out.push_back(Valuation::Additive(values));
    } else {
      std::vector<CappedGroup> groups = v.capped_groups()->groups;
      for (CappedGroup& g : groups) {
        for (ItemId& o : g.items) o = perm[o];
      }
      out.push_back(Valuation::CappedGroups(inst.num_items(), groups,
                                            v.capped_groups()->default_marginal));
    }
  }
  return Instance(inst.num_agents(), inst.num_items(), inst.c(), out);
}

TEST(FairnessTest, VerdictsIgnoreItemRelabeling) {
  SplitMix64 rng(3);
  for (int k = 0; k < 40; ++k) {
    const auto family = k % 2 ? testing::Family::kAdditive : testing::Family::kCappedGroups;
    const Instance inst = testing::SuiteInstance(family, k, 200);
    const int m = inst.num_items();
    std::vector<ItemId> perm(m);
    for (ItemId o = 0; o < m; ++o) perm[o] = o;
    for (int o = m - 1; o > 0; --o) std::swap(perm[o], perm[rng.Below(o + 1)]);
    std::vector<ItemSet> bundles(inst.num_agents(), ItemSet(m));
    std::vector<ItemSet> moved(inst.num_agents(), ItemSet(m));
    for (ItemId o = 0; o < m; ++o) {
      const auto h = rng.Below(inst.num_agents());
      bundles[h].insert(o);
      moved[h].insert(perm[o]);
    }
    const Instance relabeled = Relabel(inst, perm);
    const Allocation x = Allocation::FromBundles(m, bundles);
    const Allocation y = Allocation::FromBundles(m, moved);
    EXPECT_EQ(UtilityVectorOf(inst, x), UtilityVectorOf(relabeled, y));
    EXPECT_EQ(CheckProp1(inst, x), CheckProp1(relabeled, y));
    EXPECT_EQ(CheckEf1(inst, x).ok, CheckEf1(relabeled, y).ok);
  }
}

}  // namespace
}  // namespace leximin
