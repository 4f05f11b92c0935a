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

#include "leximin/valuations.h"

#include <vector>

#include "gtest/gtest.h"
#include "leximin/errors.h"
#include "leximin/instgen.h"
#include "test_util.h"

namespace leximin {
namespace {

using testing::Fixture;

TEST(ValuationTest, CappedGroupsValue) {
  const Utility c = 3;
  const Valuation v = Valuation::CappedGroups(4, {{{0, 1}, 1, c, 0}}, 0);
  EXPECT_EQ(v.Value(ItemSet(4, {0, 1, 2})), c);
  EXPECT_EQ(v.Value(ItemSet(4)), 0);
  EXPECT_EQ(v.Marginal(ItemSet(4), 0), c);
  EXPECT_EQ(v.Marginal(ItemSet(4, {0}), 1), 0);
}

TEST(ValuationTest, FixtureValues) {
  const Instance ef1 = Fixture("ex_ef1");
  EXPECT_EQ(ef1.valuation(2).Value(ItemSet(6, {0, 1, 2})), 3);
  const Instance classic = Fixture("ex_classic");
  EXPECT_EQ(classic.valuation(1).Marginal(ItemSet(2, {0}), 1), -1);
}

TEST(ValuationTest, MarginalOfAnOwnedItemIsAContractViolation) {
  const Valuation v = Valuation::Additive({1, 0});
  EXPECT_THROW(v.Marginal(ItemSet(2, {0}), 0), ContractViolation);
}

TEST(ValuationTest, MarginalsMatchPointwiseMarginals) {
  for (int k = 0; k < 20; ++k) {
    const Instance inst = testing::SuiteInstance(testing::Family::kCappedGroups, k, 100);
    SplitMix64 rng(k);
    for (AgentId i = 1; i <= inst.num_agents(); ++i) {
      const Valuation& v = inst.valuation(i);
      const ItemSet base = ItemSet::FromMask(
          inst.num_items(), rng.Below(std::uint64_t{1} << inst.num_items()));
      const std::vector<Utility> all = v.Marginals(base);
      for (ItemId o = 0; o < inst.num_items(); ++o) {
        EXPECT_EQ(all[o], base.contains(o) ? 0 : v.Marginal(base, o));
      }
    }
  }
}

TEST(ValuationTest, ExplicitTableWithAHoleIsMalformedOnLookup) {
  const Valuation v = Valuation::Explicit(1, {0, std::nullopt});
  EXPECT_EQ(v.Value(ItemSet(1)), 0);
  EXPECT_THROW(v.Value(ItemSet(1, {0})), MalformedValuation);
}

TEST(ValuationTest, CappedGroupsRejectOverlapAndBadItems) {
  EXPECT_THROW(Valuation::CappedGroups(3, {{{0, 1}, 1, 1, 0}, {{1}, 1, 1, 0}}, 0),
               InvalidInstance);
  EXPECT_THROW(Valuation::CappedGroups(3, {{{3}, 1, 1, 0}}, 0), InvalidInstance);
  EXPECT_THROW(Valuation::CappedGroups(3, {{{0}, -1, 1, 0}}, 0), InvalidInstance);
}

TEST(TelescopingVectorTest, NonOrderNeutralTable) {
  const Instance non_on = Fixture("non_on");
  const Valuation& v = non_on.valuation(1);
  const ItemSet both(2, {0, 1});
  EXPECT_EQ(TelescopingVector(v, both, std::vector<ItemId>{0, 1}),
            (std::vector<Utility>{0, 0}));
  EXPECT_EQ(TelescopingVector(v, both, std::vector<ItemId>{1, 0}),
            (std::vector<Utility>{-1, 1}));
  EXPECT_TRUE(TelescopingVector(v, ItemSet(2), std::vector<ItemId>{}).empty());
  EXPECT_THROW(TelescopingVector(v, both, std::vector<ItemId>{0}),
               ContractViolation);
}

TEST(ValidateSubmodularTest, Examples) {
  EXPECT_TRUE(ValidateSubmodular(Fixture("non_on").valuation(1)).ok);
  EXPECT_TRUE(ValidateSubmodular(Fixture("fig1").valuation(1)).ok);
  const SubmodularityReport bad = ValidateSubmodular(Valuation::Explicit(1, {1, 1}));
  EXPECT_FALSE(bad.ok);
  EXPECT_TRUE(bad.empty_set_nonzero);
}

TEST(ValidateSubmodularTest, FindsIncreasingMarginal) {
  // v = |S|^2 on two items: marginal of o2 grows from 1 to 3.
  const SubmodularityReport r =
      ValidateSubmodular(Valuation::Explicit(2, {0, 1, 1, 4}));
  ASSERT_FALSE(r.ok);
  EXPECT_LT(r.smaller_marginal, r.larger_marginal);
  EXPECT_TRUE(r.smaller.IsSubsetOf(r.larger));
}

TEST(ValidateOrderNeutralTest, Examples) {
  const OrderNeutralityReport r = ValidateOrderNeutral(Fixture("non_on").valuation(1));
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.witness, ItemSet(2, {0, 1}));
  EXPECT_EQ(r.first, (std::vector<Utility>{-1, 1}));
  EXPECT_EQ(r.second, (std::vector<Utility>{0, 0}));
  EXPECT_TRUE(ValidateOrderNeutral(Valuation::Additive({3, -1, 0, 3})).ok);
  EXPECT_TRUE(ValidateOrderNeutral(Fixture("fig1").valuation(1)).ok);
}

TEST(ValidateOrderNeutralTest, TwoValueTablesAreOrderNeutral) {
  SplitMix64 rng(5);
  for (int k = 0; k < 30; ++k) {
    const Valuation v = testing::RandomTwoValueTable(rng.Between(1, 6), rng);
    ASSERT_TRUE(ValidateSubmodular(v).ok);
    EXPECT_TRUE(ValidateOrderNeutral(v).ok) << ValidateOrderNeutral(v).Describe();
  }
}

TEST(ValidateRangeTest, Examples) {
  EXPECT_TRUE(ValidateRange(Valuation::Additive({2, -1}), 2).ok);
  const RangeReport bad = ValidateRange(Valuation::Explicit(1, {0, 2}), 3);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.marginal, 2);
  const Utility c = 2;
  const Valuation capped = Valuation::Tabulate(4, [&](const ItemSet& s) {
    return c * std::min(s.size(), 2);
  });
  EXPECT_TRUE(ValidateRange(capped, c).ok);
}

TEST(ValidatorsTest, CappedGroupsFamilyPassesAllThree) {
  for (int k = 0; k < 40; ++k) {
    const Instance inst = testing::SuiteInstance(testing::Family::kCappedGroups, k, 900);
    for (const Valuation& v : inst.valuations()) {
      EXPECT_TRUE(ValidateSubmodular(v).ok);
      EXPECT_TRUE(ValidateOrderNeutral(v).ok);
      EXPECT_TRUE(ValidateRange(v, inst.c()).ok);
    }
  }
}

TEST(CheckStructureTest, RangeChecks) {
  EXPECT_THROW(Valuation::Additive({2}).CheckStructure(3, true), InvalidInstance);
  EXPECT_NO_THROW(Valuation::Additive({2}).CheckStructure(3, false));
  EXPECT_NO_THROW(Valuation::GeneralAdditive({7, -4}).CheckStructure(1, true));
  EXPECT_THROW(Valuation::CappedGroups(2, {{{0}, 1, 1, -2}}, 0).CheckStructure(1, true),
               InvalidInstance);
  EXPECT_THROW(Valuation::CappedGroups(2, {{{0}, 1, -1, 0}}, 0).CheckStructure(1, true),
               InvalidInstance);
  EXPECT_THROW(Valuation::CappedGroups(2, {}, 5).CheckStructure(1, true),
               InvalidInstance);
}

}  // namespace
}  // namespace leximin
