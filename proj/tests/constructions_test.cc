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

#include "symbreak/constructions.h"

#include <vector>

#include "gtest/gtest.h"
#include "symbreak/error.h"
#include "symbreak/named_graphs.h"
#include "symbreak/symmetry.h"
#include "symbreak/transforms.h"

namespace symbreak {
namespace {

Graph Named(const char* name) { return NamedGraph(ParseNamedGraphSpec(name)); }

TEST(MatchEndlineExceptionTest, RecognisesRelabeledCopies) {
  const Graph k33 = Named("K3,3").Relabeled(std::vector<int>{0, 2, 4, 1, 3, 5});
  EXPECT_EQ(MatchEndlineException(k33), EndlineException::kK33);
  EXPECT_EQ(MatchEndlineException(Named("C4")), EndlineException::kC4);
  EXPECT_FALSE(MatchEndlineException(Named("C5")).has_value());
  EXPECT_FALSE(MatchEndlineException(Named("K5")).has_value());
}

TEST(ExceptionalEndlineColoringTest, AllFourCertify) {
  for (const char* name : {"C4", "C6", "K4", "K3,3"}) {
    const Graph g = Named(name);
    const EdgeConstruction built = ExceptionalEndlineColoring(g);
    EXPECT_TRUE(built.certification.ok()) << name;
    EXPECT_FALSE(built.certification.fallback_used);
    EXPECT_EQ(built.coloring.palette, MaxDegree(g) + 2) << name;
    EXPECT_TRUE(built.graph.SameStructure(EndlineGraph(g)));
  }
}

TEST(ExceptionalEndlineColoringTest, K33MatchesPublishedFigure) {
  // Cycle z1..z6 = 0,3,1,4,2,5; pendant at z1 gets 1, other pendants 2,
  // cycle edges alternate 3 and 4 from z1z2, chords get 5.
  const Graph g = Named("K3,3");
  const EdgeConstruction built = ExceptionalEndlineColoring(g);
  const EdgeColoring& c = built.coloring;
  EXPECT_EQ(c.ColorOf(0, 3), 3);
  EXPECT_EQ(c.ColorOf(3, 1), 4);
  EXPECT_EQ(c.ColorOf(1, 4), 3);
  EXPECT_EQ(c.ColorOf(4, 2), 4);
  EXPECT_EQ(c.ColorOf(2, 5), 3);
  EXPECT_EQ(c.ColorOf(5, 0), 4);
  EXPECT_EQ(c.ColorOf(0, 4), 5);
  EXPECT_EQ(c.ColorOf(3, 2), 5);
  EXPECT_EQ(c.ColorOf(1, 5), 5);
  EXPECT_EQ(c.ColorOf(0, 6), 1);
  for (int v = 1; v < 6; ++v) EXPECT_EQ(c.ColorOf(v, 6 + v), 2);
}

TEST(ExceptionalEndlineColoringTest, WorksOnRelabeledInput) {
  const Graph g = Named("C6").Relabeled(std::vector<int>{3, 0, 4, 1, 5, 2});
  const EdgeConstruction built = ExceptionalEndlineColoring(g);
  EXPECT_TRUE(built.certification.ok());
  EXPECT_EQ(built.coloring.palette, 4);
}

TEST(ExceptionalEndlineColoringTest, RejectsOtherGraphs) {
  EXPECT_THROW(ExceptionalEndlineColoring(Named("C5")), ContractError);
}

TEST(EndlineExtensionColoringTest, UsesDeltaPlusOneColours) {
  for (const char* name : {"P3", "C3", "C5", "K1,4", "K5", "Q", "LQ", "K2,3"}) {
    const Graph g = Named(name);
    const EdgeConstruction built = EndlineExtensionColoring(g);
    EXPECT_TRUE(built.certification.ok()) << name;
    EXPECT_FALSE(built.certification.fallback_used) << name;
    EXPECT_EQ(built.coloring.palette, MaxDegree(g) + 1) << name;
  }
}

TEST(EndlineExtensionColoringTest, RejectsExceptionsAndSmallGraphs) {
  EXPECT_THROW(EndlineExtensionColoring(Named("K4")), ContractError);
  EXPECT_THROW(EndlineExtensionColoring(Named("K2")), ContractError);
}

TEST(SubdivisionLiftTest, RoundTrip) {
  const Graph g = Named("Q");
  const InvariantValue total = TotalDistinguishingNumber(g);
  const auto& f = std::get<TotalColoring>(total.witness);
  const Graph s = SubdivisionGraph(g);
  const VertexColoring lifted = LiftTotalToSubdivision(g, f);
  EXPECT_EQ(lifted.colors.size(), static_cast<std::size_t>(s.order()));
  EXPECT_TRUE(IsDistinguishing(s, lifted));
  EXPECT_EQ(RestrictSubdivisionToTotal(g, s, lifted), f);
}

TEST(SubdivisionLiftTest, RestrictRejectsWrongLabels) {
  const Graph g = Named("P3");
  const Graph wrong = SubdivisionGraph(g).WithDefaultLabels();
  EXPECT_THROW(
      RestrictSubdivisionToTotal(g, wrong, VertexColoring{{1, 1, 1, 2, 2}, 2}),
      ContractError);
}

TEST(SubdivisionProperDistinguishingTest, PaletteFollowsD) {
  struct Case {
    const char* name;
    int palette;
  };
  // D(K1,3) = 3, D(P4) = 2; K5 has D = 5.
  for (const Case& c : {Case{"K1,3", 3}, Case{"P4", 3}, Case{"K5", 5}}) {
    const VertexConstruction built = SubdivisionProperDistinguishing(Named(c.name));
    EXPECT_TRUE(built.certification.ok()) << c.name;
    EXPECT_EQ(built.coloring.palette, c.palette) << c.name;
  }
}

TEST(SubdivisionProperDistinguishingTest, AsymmetricGraphUsesTwoColours) {
  const Graph g = Graph::FromEdgeList(
      6, std::vector<std::pair<int, int>>{
             {0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {3, 5}});
  const VertexConstruction built = SubdivisionProperDistinguishing(g);
  EXPECT_TRUE(built.certification.ok());
  EXPECT_EQ(built.coloring.palette, 2);
}

TEST(SubdivisionProperDistinguishingTest, RejectsCycles) {
  EXPECT_THROW(SubdivisionProperDistinguishing(Named("C5")), ContractError);
}

}  // namespace
}  // namespace symbreak
