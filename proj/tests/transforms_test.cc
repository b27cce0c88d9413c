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

#include "symbreak/transforms.h"

#include <vector>

#include "gtest/gtest.h"
#include "symbreak/error.h"
#include "symbreak/named_graphs.h"
#include "symbreak/symmetry.h"

namespace symbreak {
namespace {

Graph Named(const char* name) { return NamedGraph(ParseNamedGraphSpec(name)); }

TEST(LineGraphTest, PathOnThreeVertices) {
  const Graph l = LineGraph(Named("P3"));
  EXPECT_EQ(l.order(), 2);
  EXPECT_EQ(l.size(), 1);
  EXPECT_EQ(l.label(0), VertexLabel::EdgeVertex(0, 1));
  EXPECT_EQ(l.label(1), VertexLabel::EdgeVertex(1, 2));
}

TEST(LineGraphTest, CycleIsSelfLine) {
  EXPECT_TRUE(IsIsomorphic(LineGraph(Named("C4")), Named("C4")));
  EXPECT_TRUE(IsIsomorphic(LineGraph(Named("C7")), Named("C7")));
}

TEST(LineGraphTest, StarBecomesComplete) {
  EXPECT_TRUE(IsIsomorphic(LineGraph(Named("K1,4")), Named("K4")));
}

// The drawn L(Q) (triangle with a pendant) is the graph whose line graph is
// Q; the line graph of Q itself has five vertices.
TEST(LineGraphTest, QFixtures) {
  EXPECT_TRUE(IsIsomorphic(LineGraph(Named("LQ")), Named("Q")));
  const Graph lq = LineGraph(Named("Q"));
  EXPECT_EQ(lq.order(), 5);
  EXPECT_EQ(lq.size(), 8);
  EXPECT_FALSE(IsIsomorphic(lq, Named("LQ")));
}

TEST(LineGraphTest, EdgelessInputThrows) {
  EXPECT_THROW(LineGraph(Graph()), MalformedInputError);
}

TEST(EndlineGraphTest, TriangleCounts) {
  const Graph plus = EndlineGraph(Named("C3"));
  EXPECT_EQ(plus.order(), 6);
  EXPECT_EQ(plus.size(), 6);
  EXPECT_EQ(DegreeSequence(plus), (std::vector<int>{3, 3, 3, 1, 1, 1}));
  for (int v = 0; v < 3; ++v) {
    EXPECT_EQ(plus.label(3 + v), VertexLabel::Pendant(v));
    EXPECT_EQ(plus.Neighbors(3 + v), (std::vector<int>{v}));
  }
}

TEST(EndlineGraphTest, SingleVertex) {
  const Graph plus = EndlineGraph(Graph());
  EXPECT_EQ(plus.order(), 2);
  EXPECT_EQ(plus.size(), 1);
}

TEST(SubdivisionGraphTest, TriangleBecomesHexagon) {
  const Graph s = SubdivisionGraph(Named("C3"));
  EXPECT_EQ(s.order(), 6);
  EXPECT_EQ(s.size(), 6);
  EXPECT_TRUE(IsIsomorphic(s, Named("C6")));
}

TEST(SubdivisionGraphTest, EdgeVerticesFollowEdgeOrder) {
  const Graph g = Named("K4");
  const Graph s = SubdivisionGraph(g);
  ASSERT_EQ(s.order(), 10);
  for (int k = 0; k < g.size(); ++k) {
    const Edge& e = g.edges()[k];
    EXPECT_EQ(s.label(4 + k), VertexLabel::EdgeVertex(e.first, e.second));
    EXPECT_EQ(s.Neighbors(4 + k), (std::vector<int>{e.first, e.second}));
  }
  EXPECT_TRUE(Bipartition(s).has_value());
}

TEST(MiddleGraphTest, PathOnThreeVertices) {
  const Graph m = MiddleGraph(Named("P3"));
  // Three originals, two edge-vertices; two incidences each plus the
  // meeting pair.
  EXPECT_EQ(m.order(), 5);
  EXPECT_EQ(m.size(), 5);
  EXPECT_FALSE(m.HasEdge(0, 1));
  EXPECT_TRUE(m.HasEdge(3, 4));
}

TEST(MiddleGraphTest, CountsOnK4) {
  const Graph g = Named("K4");
  const Graph m = MiddleGraph(g);
  EXPECT_EQ(m.order(), 10);
  // 2m incidences plus |E(L(G))| = sum of C(deg, 2) = 4 * 3.
  EXPECT_EQ(m.size(), 12 + 12);
  EXPECT_EQ(MaxDegree(m), 2 + 2 * (MaxDegree(g) - 1));
}

TEST(MiddleGraphTest, IsLineGraphOfEndline) {
  for (const char* name : {"P3", "C4", "K4", "K3,3", "K1,3", "Q"}) {
    EXPECT_TRUE(IsIsomorphic(MiddleGraph(Named(name)),
                             LineGraph(EndlineGraph(Named(name)))))
        << name;
  }
}

TEST(MiddleGraphTest, EdgelessInputThrows) {
  EXPECT_THROW(MiddleGraph(Graph()), MalformedInputError);
}

}  // namespace
}  // namespace symbreak
