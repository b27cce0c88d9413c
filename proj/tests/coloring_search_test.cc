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

#include "symbreak/coloring_search.h"

#include <vector>

#include "gtest/gtest.h"
#include "symbreak/named_graphs.h"
#include "symbreak/symmetry.h"

namespace symbreak {
namespace {

ColoringProblem VertexProblem(const Graph& g, bool proper,
                              bool distinguishing) {
  ColoringProblem problem;
  problem.size = g.order();
  problem.proper = proper;
  problem.distinguishing = distinguishing;
  if (proper) {
    for (int v = 0; v < g.order(); ++v) {
      problem.conflicts.push_back(g.Neighbors(v));
    }
  }
  problem.group = AutomorphismGroup(g).elements();
  return problem;
}

TEST(FindColoringTest, OddCycleNeedsThreeColours) {
  const ColoringProblem problem =
      VertexProblem(NamedGraph(NamedGraphSpec::Cycle(5)), true, false);
  EXPECT_FALSE(FindColoring(problem, 2).coloring.has_value());
  const SearchOutcome three = FindColoring(problem, 3);
  ASSERT_TRUE(three.coloring.has_value());
  EXPECT_EQ(*three.coloring, (std::vector<int>{1, 2, 1, 2, 3}));
}

TEST(FindColoringTest, ReturnsLexicographicallyLeastDistinguishing) {
  // Path 0-1-2-3: the reflection must be broken.
  const ColoringProblem problem =
      VertexProblem(NamedGraph(NamedGraphSpec::Path(4)), false, true);
  EXPECT_FALSE(FindColoring(problem, 1).coloring.has_value());
  const SearchOutcome two = FindColoring(problem, 2);
  ASSERT_TRUE(two.coloring.has_value());
  EXPECT_EQ(*two.coloring, (std::vector<int>{1, 1, 1, 2}));
}

TEST(FindColoringTest, ExhaustedFlagWithBudget) {
  const ColoringProblem problem =
      VertexProblem(NamedGraph(NamedGraphSpec::Complete(6)), false, true);
  const SearchOutcome limited = FindColoring(problem, 5, 3);
  EXPECT_FALSE(limited.coloring.has_value());
  EXPECT_FALSE(limited.exhausted);
  const SearchOutcome full = FindColoring(problem, 5);
  EXPECT_FALSE(full.coloring.has_value());
  EXPECT_TRUE(full.exhausted);
}

TEST(ConflictCliqueNumberTest, CompleteGraph) {
  const ColoringProblem problem =
      VertexProblem(NamedGraph(NamedGraphSpec::Complete(5)), true, false);
  EXPECT_EQ(ConflictCliqueNumber(problem), 5);
}

TEST(ConflictCliqueNumberTest, BipartiteGraph) {
  const ColoringProblem problem = VertexProblem(
      NamedGraph(NamedGraphSpec::CompleteBipartite(3, 3)), true, false);
  EXPECT_EQ(ConflictCliqueNumber(problem), 2);
}

}  // namespace
}  // namespace symbreak
