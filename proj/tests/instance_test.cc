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

#include "pcst/instance.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace pcst {
namespace {

constexpr const char* kMinimalJson = R"({ "n": 1, "prizes": [5], "edges": [] })";

TEST(ParseInstanceTest, MinimalJson) {
  const Instance instance = ParseInstance(kMinimalJson, InstanceFormat::kJson);
  EXPECT_EQ(instance.vertex_count(), 1);
  EXPECT_EQ(instance.edge_count(), 0);
  EXPECT_EQ(instance.prize(0), Rational(5));
}

TEST(ParseInstanceTest, JsonNumbersAreExact) {
  const Instance instance = ParseInstance(
      R"({"n": 3, "prizes": [2.5, "5/2", 0.1], "edges": [[0, 1, 1e1], [1, 2, "7/3"]]})", InstanceFormat::kJson);
  EXPECT_EQ(instance.prize(0), instance.prize(1));
  EXPECT_EQ(instance.prize(0), Rational(5, 2));
  EXPECT_EQ(instance.prize(2), Rational(1, 10));
  EXPECT_EQ(instance.edge(0).cost, Rational(10));
  EXPECT_EQ(instance.edge(1).cost, Rational(7, 3));
}

TEST(ParseInstanceTest, JsonNamesAreOptional) {
  const Instance instance =
      ParseInstance(R"({"n": 2, "prizes": [1, 2], "edges": [[0, 1, 3]], "names": ["a", "b"]})",
                    InstanceFormat::kJson);
  EXPECT_EQ(instance.names(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(ParseInstance(EmitInstance(instance, InstanceFormat::kJson), InstanceFormat::kJson), instance);
}

TEST(ParseInstanceTest, JsonSyntaxErrorReportsLineAndColumn) {
  try {
    ParseInstance("{\n  \"n\": 2,\n  \"prizes\": [1, 2,]\n}", InstanceFormat::kJson);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 0);
  }
}

TEST(ParseInstanceTest, JsonSemanticErrors) {
  const char* bad[] = {
      R"({"n": 2, "prizes": [1, -1], "edges": []})",
      R"({"n": 2, "prizes": [1, 1], "edges": [[0, 1, "-1/2"]]})",
      R"({"n": 2, "prizes": [1, 1], "edges": [[0, 1, 1], [1, 0, 2]]})",
      R"({"n": 2, "prizes": [1, 1], "edges": [[0, 2, 1]]})",
      R"({"n": 2, "prizes": [1, 1], "edges": [[1, 1, 1]]})",
      R"({"n": 2, "prizes": [1], "edges": []})",
      R"({"n": 0, "prizes": [], "edges": []})",
      R"({"prizes": [1]})",
      R"({"n": 1, "prizes": ["abc"]})",
      R"([1, 2])",
  };
  for (const char* text : bad) EXPECT_THROW(ParseInstance(text, InstanceFormat::kJson), ParseError) << text;
}

constexpr const char* kStp = R"(33D32945 STP File, STP Format Version 1.0

SECTION Comment
Name "tiny"
END

SECTION Graph
Nodes 3
Edges 2
E 1 2 2
E 1 3 2.5
END

SECTION Terminals
Terminals 2
TP 2 3/2
TP 3 1
END

EOF
)";

TEST(ParseInstanceTest, StpLike) {
  const Instance instance = ParseInstance(kStp, InstanceFormat::kStp);
  EXPECT_EQ(instance.vertex_count(), 3);
  ASSERT_EQ(instance.edge_count(), 2);
  EXPECT_EQ(instance.edge(1), (Edge{0, 2, Rational(5, 2)}));
  EXPECT_EQ(instance.prize(0), Rational(0));
  EXPECT_EQ(instance.prize(1), Rational(3, 2));
  EXPECT_EQ(instance.prize(2), Rational(1));
}

TEST(ParseInstanceTest, StpErrorsCarryLocation) {
  struct Case {
    const char* text;
    int line;
    int column;
  };
  const Case cases[] = {
      {"SECTION Graph\nNodes 2\nEdges 1\nE 1 3 1\nEND\nEOF\n", 4, 5},
      {"SECTION Graph\nNodes 2\nEdges 1\nE 1 2 -1\nEND\nEOF\n", 4, 7},
      {"SECTION Graph\nNodes 2\nEdges 2\nE 1 2 1\nE 2 1 1\nEND\nEOF\n", 5, 1},
      {"SECTION Graph\nNodes 2\nEdges 1\nE 1 2 x\nEND\nEOF\n", 4, 7},
      {"SECTION Graph\nNodes 2\nEdges 2\nE 1 2 1\nEND\nEOF\n", 5, 1},
      {"SECTION Graph\nNodes 2\nEND\nSECTION Terminals\nTP 1 -3\nEND\nEOF\n", 5, 6},
      {"SECTION Graph\nNodes 2\nFoo 1\nEND\nEOF\n", 3, 1},
      {"SECTION Graph\nNodes 2\nE 1 2 1 9\nEND\nEOF\n", 3, 9},
  };
  for (const Case& c : cases) {
    try {
      ParseInstance(c.text, InstanceFormat::kStp);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text << " -> " << e.what();
      EXPECT_EQ(e.column(), c.column) << c.text << " -> " << e.what();
    }
  }
  EXPECT_THROW(ParseInstance("SECTION Graph\nNodes 2\nEND\n", InstanceFormat::kStp), ParseError);
}

TEST(EmitInstanceTest, SingleVertexDocuments) {
  const Instance instance(1, {}, {Rational(5)});
  EXPECT_EQ(EmitInstance(instance, InstanceFormat::kJson),
            "{\n  \"n\": 1,\n  \"prizes\": [\"5/1\"],\n  \"edges\": []\n}\n");
  EXPECT_EQ(EmitInstance(instance, InstanceFormat::kStp),
            "33D32945 STP File, STP Format Version 1.0\n\nSECTION Graph\nNodes 1\nEdges 0\nEND\n\n"
            "SECTION Terminals\nTerminals 1\nTP 1 5\nEND\n\nEOF\n");
}

TEST(EmitInstanceTest, RoundTripsBothFormats) {
  std::vector<Instance> instances{GenerateFigure1Star(Rational(1)), GenerateFigure1Star(Rational(1, 100)),
                                  GenerateFigure1Path(5, Rational(3, 7))};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomInstanceParams params;
    params.n = 12;
    params.edge_probability = Rational(1, 3);
    params.seed = seed;
    instances.push_back(GenerateRandom(params));
  }
  // Fractional costs and prizes, edges listed against id order.
  instances.emplace_back(3, std::vector<Edge>{{2, 0, Rational(7, 3)}, {1, 2, Rational(0)}},
                         std::vector<Rational>{Rational(1, 9), Rational(0), Rational(22, 7)});
  for (const Instance& instance : instances) {
    for (InstanceFormat format : {InstanceFormat::kJson, InstanceFormat::kStp}) {
      ASSERT_EQ(ParseInstance(EmitInstance(instance, format), format), instance);
    }
  }
}

TEST(InstanceTest, ConstructorRejectsInvalidGraphs) {
  EXPECT_THROW(Instance(0, {}, {}), InstanceError);
  EXPECT_THROW(Instance(2, {{0, 0, Rational(1)}}, {Rational(0), Rational(0)}), InstanceError);
  EXPECT_THROW(Instance(2, {{0, 1, Rational(1)}, {1, 0, Rational(1)}}, {Rational(0), Rational(0)}),
               InstanceError);
  EXPECT_THROW(Instance(2, {{0, 1, Rational(-1)}}, {Rational(0), Rational(0)}), InstanceError);
  EXPECT_THROW(Instance(2, {}, {Rational(0), Rational(-1)}), InstanceError);
  EXPECT_THROW(Instance(2, {{0, 5, Rational(1)}}, {Rational(0), Rational(0)}), InstanceError);
}

TEST(InstanceTest, DisconnectedGraphsAreAllowed) {
  const Instance instance(4, {{0, 1, Rational(1)}, {2, 3, Rational(1)}},
                          {Rational(1), Rational(1), Rational(1), Rational(1)});
  EXPECT_EQ(instance.incident(2), std::vector<EdgeId>{1});
  EXPECT_EQ(instance.FindEdge(3, 2), std::optional<EdgeId>(1));
  EXPECT_FALSE(instance.FindEdge(0, 3));
}

TEST(TreeTest, Predicates) {
  const Instance instance = GenerateFigure1Star(Rational(1));
  EXPECT_TRUE(IsTree(instance, Tree{{0}, {}}));
  EXPECT_TRUE(IsTree(instance, Tree{{0, 1, 2}, {0, 1}}));
  EXPECT_FALSE(IsTree(instance, Tree{{}, {}}));
  EXPECT_FALSE(IsTree(instance, Tree{{1, 2}, {}}));
  EXPECT_FALSE(IsTree(instance, Tree{{0, 1, 2}, {0}}));
  EXPECT_FALSE(IsTree(instance, Tree{{1, 2}, {0}}));
  EXPECT_FALSE(IsTree(instance, Tree{{0, 1}, {0, 0}}));
  EXPECT_EQ(TreeCost(instance, Tree{{0, 1, 2}, {0, 1}}), Rational(4));
  EXPECT_EQ(TreePenalty(instance, Tree{{0}, {}}), Rational(3));
}

TEST(GenerateFigure1Test, StarShape) {
  const Rational rho(1, 100);
  const Instance star = GenerateFigure1Star(rho);
  EXPECT_EQ(star.vertex_count(), 3);
  EXPECT_EQ(star.edges(), (std::vector<Edge>{{0, 1, Rational(2)}, {0, 2, Rational(2)}}));
  EXPECT_EQ(star.prize(0), Rational(10));
  EXPECT_EQ(star.prize(1), Rational(201, 200));
  EXPECT_EQ(star.prize(2), Rational(201, 200));
  EXPECT_THROW(GenerateFigure1Star(Rational(0)), std::invalid_argument);
  EXPECT_THROW(GenerateFigure1Star(Rational(-1)), std::invalid_argument);
}

TEST(GenerateFigure1Test, PathShape) {
  const Instance path = GenerateFigure1Path(4, Rational(1, 10));
  EXPECT_EQ(path.vertex_count(), 5);
  ASSERT_EQ(path.edge_count(), 4);
  for (EdgeId e = 0; e < 4; ++e) EXPECT_EQ(path.edge(e), (Edge{e, e + 1, Rational(2)}));
  EXPECT_EQ(path.prize(0), Rational(40));
  for (VertexId v = 1; v <= 4; ++v) EXPECT_EQ(path.prize(v), Rational(41, 40));

  const Instance small = GenerateFigure1Path(2, Rational(1));
  const Instance star = GenerateFigure1Star(Rational(1));
  EXPECT_EQ(small.vertex_count(), star.vertex_count());
  EXPECT_EQ(small.edge_count(), star.edge_count());
  EXPECT_THROW(GenerateFigure1Path(1, Rational(1)), std::invalid_argument);
  EXPECT_THROW(GenerateFigure1Path(3, Rational(0)), std::invalid_argument);
}

TEST(GenerateRandomTest, SingleVertex) {
  RandomInstanceParams params;
  params.n = 1;
  const Instance instance = GenerateRandom(params);
  EXPECT_EQ(instance.vertex_count(), 1);
  EXPECT_EQ(instance.edge_count(), 0);
}

TEST(GenerateRandomTest, DeterministicPerSeed) {
  RandomInstanceParams params;
  params.n = 8;
  params.edge_probability = Rational(1, 2);
  params.seed = 7;
  EXPECT_EQ(GenerateRandom(params), GenerateRandom(params));
  RandomInstanceParams other = params;
  other.seed = 8;
  EXPECT_FALSE(GenerateRandom(params) == GenerateRandom(other));
}

TEST(GenerateRandomTest, RespectsRangesOverManySeeds) {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    RandomInstanceParams params;
    params.n = 10;
    params.edge_probability = Rational(1, 2);
    params.max_cost = 6;
    params.max_prize = 4;
    params.seed = seed;
    const Instance instance = GenerateRandom(params);
    ASSERT_EQ(instance.vertex_count(), 10);
    for (const Edge& edge : instance.edges()) {
      ASSERT_TRUE(edge.cost >= 0 && edge.cost <= 6 && edge.cost.get_den() == 1);
      ASSERT_LT(edge.u, edge.v);
    }
    for (const Rational& p : instance.prizes()) ASSERT_TRUE(p >= 0 && p <= 4 && p.get_den() == 1);
    // Re-validating through the constructor exercises every instance invariant.
    ASSERT_NO_THROW(Instance(10, instance.edges(), instance.prizes()));
  }
}

TEST(GenerateRandomTest, ExtremeProbabilities) {
  RandomInstanceParams params;
  params.n = 6;
  params.edge_probability = Rational(0);
  EXPECT_EQ(GenerateRandom(params).edge_count(), 0);
  params.edge_probability = Rational(1);
  EXPECT_EQ(GenerateRandom(params).edge_count(), 15);
  params.edge_probability = Rational(3, 2);
  EXPECT_THROW(GenerateRandom(params), std::invalid_argument);
  params.edge_probability = Rational(1, 2);
  params.n = 0;
  EXPECT_THROW(GenerateRandom(params), std::invalid_argument);
}

}  // namespace
}  // namespace pcst
