// Copyright 2026 The symbreak Authors
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

#include "symbreak/named_graphs.h"

#include <vector>

#include "gtest/gtest.h"
#include "symbreak/error.h"
#include "symbreak/graph.h"

namespace symbreak {
namespace {

TEST(NamedGraphsTest, Cycle) {
  const Graph g = NamedGraph(NamedGraphSpec::Cycle(6));
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 6);
  EXPECT_TRUE(IsCycle(g));
}

TEST(NamedGraphsTest, Complete) {
  const Graph g = NamedGraph(NamedGraphSpec::Complete(5));
  EXPECT_EQ(g.size(), 10);
  EXPECT_EQ(MaxDegree(g), 4);
}

TEST(NamedGraphsTest, CompleteBipartiteParts) {
  const Graph g = NamedGraph(NamedGraphSpec::CompleteBipartite(2, 3));
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 6);
  EXPECT_TRUE(g.HasEdge(0, 2));
  EXPECT_FALSE(g.HasEdge(0, 1));
  EXPECT_FALSE(g.HasEdge(2, 3));
}

TEST(NamedGraphsTest, StarIsK1m) {
  const Graph g = NamedGraph(NamedGraphSpec::Star(4));
  EXPECT_EQ(g.Degree(0), 4);
  EXPECT_EQ(NamedGraphSpec::Star(4).Name(), "K1,4");
}

TEST(NamedGraphsTest, QIsK4MinusAnEdge) {
  const Graph q = NamedGraph(NamedGraphSpec::Q());
  EXPECT_EQ(q.order(), 4);
  EXPECT_EQ(q.size(), 5);
  EXPECT_EQ(DegreeSequence(q), (std::vector<int>{3, 3, 2, 2}));
}

TEST(NamedGraphsTest, LQIsTriangleWithPendant) {
  const Graph lq = NamedGraph(NamedGraphSpec::LQ());
  EXPECT_EQ(lq.order(), 4);
  EXPECT_EQ(lq.size(), 4);
  EXPECT_EQ(DegreeSequence(lq), (std::vector<int>{3, 2, 2, 1}));
}

TEST(NamedGraphsTest, Path) {
  const Graph g = NamedGraph(NamedGraphSpec::Path(4));
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(MaxDegree(g), 2);
}

TEST(NamedGraphsTest, ParsesNames) {
  EXPECT_EQ(ParseNamedGraphSpec("C6").Name(), "C6");
  EXPECT_EQ(ParseNamedGraphSpec("K4").Name(), "K4");
  EXPECT_EQ(ParseNamedGraphSpec("K3,3").Name(), "K3,3");
  EXPECT_EQ(ParseNamedGraphSpec("K_{1,4}").Name(), "K1,4");
  EXPECT_EQ(ParseNamedGraphSpec("P3").Name(), "P3");
  EXPECT_EQ(ParseNamedGraphSpec("Q").Name(), "Q");
  EXPECT_EQ(ParseNamedGraphSpec("L(Q)").Name(), "LQ");
}

TEST(NamedGraphsTest, RejectsBadNames) {
  EXPECT_THROW(ParseNamedGraphSpec("X5"), ContractError);
  EXPECT_THROW(ParseNamedGraphSpec("K"), ContractError);
  EXPECT_THROW(ParseNamedGraphSpec("Cx"), ContractError);
  EXPECT_THROW(NamedGraph(NamedGraphSpec::Cycle(2)), ContractError);
}

}  // namespace
}  // namespace symbreak
