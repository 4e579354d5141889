// Copyright 2026 The pcst Authors
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

#include "pcst/laminar.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace pcst {
namespace {

using testing::ExplicitSets;
using testing::Subset;
using testing::VertexSet;

std::vector<int> Ints(const std::vector<SetId>& ids) {
  std::vector<int> out;
  for (SetId id : ids) out.push_back(static_cast<int>(id));
  return out;
}

TEST(LaminarFamilyTest, StartsWithSingletons) {
  const LaminarFamily family(3);
  EXPECT_EQ(family.size(), 3);
  EXPECT_EQ(family.MaximalCount(), 3);
  for (VertexId v = 0; v < 3; ++v) {
    EXPECT_EQ(family.Leaf(v), MakeSetId(static_cast<std::size_t>(v)));
    EXPECT_EQ(family.MaximalOf(v), family.Leaf(v));
    EXPECT_TRUE(family.Children(family.Leaf(v)).empty());
    EXPECT_FALSE(family.Parent(family.Leaf(v)));
  }
  EXPECT_THROW(LaminarFamily(0), LaminarError);
}

TEST(LaminarFamilyTest, ChainOfMerges) {
  LaminarFamily family(4);
  SetId top = family.Leaf(0);
  for (VertexId v = 1; v < 4; ++v) top = family.Merge(top, family.Leaf(v));
  EXPECT_EQ(family.size(), 7);
  EXPECT_EQ(family.MaximalCount(), 1);
  EXPECT_EQ(Ints(family.MaximalSets()), std::vector<int>{6});
  EXPECT_EQ(family.Members(MakeSetId(5)), (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(Ints(family.Chain(1)), (std::vector<int>{1, 4, 5, 6}));
  EXPECT_EQ(Ints(family.Chain(3)), (std::vector<int>{3, 6}));
  EXPECT_EQ(family.LowestCommonAncestor(MakeSetId(1), MakeSetId(2)), MakeSetId(5));
  EXPECT_EQ(family.LowestCommonAncestor(MakeSetId(4), MakeSetId(0)), MakeSetId(4));
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(family.MaximalOf(v), MakeSetId(6));
}

TEST(LaminarFamilyTest, MergeRejectsNonMaximalOrEqual) {
  LaminarFamily family(3);
  const SetId ab = family.Merge(family.Leaf(0), family.Leaf(1));
  EXPECT_THROW(family.Merge(family.Leaf(0), family.Leaf(2)), LaminarError);
  EXPECT_THROW(family.Merge(ab, ab), LaminarError);
  EXPECT_THROW(family.Merge(ab, MakeSetId(17)), LaminarError);
  EXPECT_EQ(family.LowestCommonAncestor(ab, family.Leaf(2)), std::nullopt);
}

TEST(LaminarQueriesTest, CrossingSetsExample) {
  const Instance instance(3, {{0, 2, Rational(5)}, {0, 1, Rational(1)}},
                          {Rational(1), Rational(1), Rational(1)});
  auto [family, duals] = InitSingletons(instance);
  const SetId ab = Merge(family, duals, family.Leaf(0), family.Leaf(1));
  Merge(family, duals, ab, family.Leaf(2));
  EXPECT_EQ(Ints(CrossingSets(family, instance, 0)), (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(Ints(CrossingSets(family, instance, 1)), (std::vector<int>{0, 1}));
  const std::vector<VertexId> x{0, 1};
  EXPECT_EQ(Ints(SubsetsBelow(family, x)), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(Ints(SupersetsOf(family, x)), (std::vector<int>{3, 4}));
  EXPECT_EQ(Ints(SupersetsOf(family, {})), (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(LaminarQueriesTest, SlackExamples) {
  const Instance instance(2, {{0, 1, Rational(3)}}, {Rational(2), Rational(5)});
  auto [family, duals] = InitSingletons(instance);
  duals.Raise(family.Leaf(0), Rational(2));
  duals.Raise(family.Leaf(1), Rational(2));
  EXPECT_EQ(RespectsCSlack(family, duals, instance, 0), Rational(-1));
  EXPECT_EQ(RespectsPiSlack(family, duals, instance, family.Leaf(0)), Rational(0));
  EXPECT_EQ(RespectsPiSlack(family, duals, instance, family.Leaf(1)), Rational(3));
  const SetId top = Merge(family, duals, family.Leaf(0), family.Leaf(1));
  EXPECT_EQ(duals.y(top), Rational(0));
  EXPECT_FALSE(duals.saturated(top));
  duals.Raise(top, Rational(1, 2));
  EXPECT_EQ(RespectsPiSlack(family, duals, instance, top), Rational(5, 2));
  EXPECT_EQ(RespectsCSlack(family, duals, instance, 0), Rational(-1));
  const std::vector<SetId> all{family.Leaf(0), family.Leaf(1), top};
  EXPECT_EQ(DualSum(duals, all), Rational(9, 2));
}

TEST(DualAssignmentTest, SaturationBookkeeping) {
  DualAssignment duals(3);
  duals.Saturate(MakeSetId(2));
  duals.Saturate(MakeSetId(0));
  EXPECT_EQ(Ints(duals.SaturatedSets()), (std::vector<int>{0, 2}));
  const SetId fresh = duals.Append();
  EXPECT_EQ(fresh, MakeSetId(3));
  EXPECT_FALSE(duals.saturated(fresh));
  EXPECT_EQ(duals.y(fresh), Rational(0));
}

// Random merge sequences checked against explicit vertex sets.
TEST(LaminarPropertyTest, QueriesAgreeWithExplicitSets) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const int n = 1 + static_cast<int>(seed % 10);
    const Instance instance = testing::SweepInstance(seed);
    ASSERT_EQ(instance.vertex_count(), n);
    auto [family, duals] = InitSingletons(instance);
    while (family.MaximalCount() > 1 && rng() % 8 != 0) {
      const std::vector<SetId> maximal = family.MaximalSets();
      const SetId a = maximal[rng() % maximal.size()];
      SetId b = a;
      while (b == a) b = maximal[rng() % maximal.size()];
      Merge(family, duals, a, b);
    }
    const std::vector<VertexSet> sets = ExplicitSets(family);
    ASSERT_EQ(family.size(), 2 * n - family.MaximalCount());

    // Laminarity and the partition by maximal sets.
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        bool disjoint = true;
        for (int v : sets[i]) disjoint = disjoint && !sets[j].count(v);
        ASSERT_TRUE(disjoint || Subset(sets[i], sets[j]) || Subset(sets[j], sets[i]));
        if (i != j) ASSERT_NE(sets[i], sets[j]);
      }
    }
    for (VertexId v = 0; v < n; ++v) {
      std::vector<int> chain;
      for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].count(v)) chain.push_back(static_cast<int>(i));
      }
      ASSERT_EQ(Ints(family.Chain(v)), chain);
      ASSERT_EQ(static_cast<int>(family.MaximalOf(v)), chain.back());
    }

    // Filters over a random vertex subset.
    std::vector<VertexId> x;
    for (VertexId v = 0; v < n; ++v) {
      if (rng() % 2) x.push_back(v);
    }
    const VertexSet xs(x.begin(), x.end());
    std::vector<int> below, above;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (Subset(sets[i], xs)) below.push_back(static_cast<int>(i));
      if (Subset(xs, sets[i])) above.push_back(static_cast<int>(i));
    }
    ASSERT_EQ(Ints(SubsetsBelow(family, x)), below);
    ASSERT_EQ(Ints(SupersetsOf(family, x)), above);

    for (EdgeId e = 0; e < instance.edge_count(); ++e) {
      const Edge& edge = instance.edge(e);
      std::vector<int> crossing;
      for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].count(edge.u) != sets[i].count(edge.v)) crossing.push_back(static_cast<int>(i));
      }
      ASSERT_EQ(Ints(CrossingSets(family, instance, e)), crossing);
    }
  }
}

TEST(LaminarPropertyTest, LowestCommonAncestorIsSmallestCommonSuperset) {
  LaminarFamily family(6);
  const SetId a = family.Merge(family.Leaf(0), family.Leaf(1));
  const SetId b = family.Merge(family.Leaf(2), family.Leaf(3));
  const SetId c = family.Merge(a, b);
  EXPECT_EQ(family.LowestCommonAncestor(family.Leaf(0), family.Leaf(3)), c);
  EXPECT_EQ(family.LowestCommonAncestor(a, family.Leaf(1)), a);
  EXPECT_EQ(family.LowestCommonAncestor(family.Leaf(4), family.Leaf(5)), std::nullopt);
  EXPECT_TRUE(family.Contains(c, 2));
  EXPECT_FALSE(family.Contains(a, 2));
}

}  // namespace
}  // namespace pcst
