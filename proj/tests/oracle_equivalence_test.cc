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

// Library results against the unpruned reference implementations.

#include <optional>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracle/brute_force.h"
#include "symbreak/corpus.h"
#include "symbreak/error.h"
#include "symbreak/graph6.h"
#include "symbreak/invariants.h"
#include "symbreak/symmetry.h"

namespace symbreak {
namespace {

std::optional<int> LibraryValue(const AutGroup& group, InvariantKind kind) {
  try {
    const InvariantValue v = ComputeInvariant(group, kind, InvariantOptions{});
    EXPECT_TRUE(v.certified);
    return v.value;
  } catch (const UndefinedInvariantError&) {
    return std::nullopt;
  } catch (const MalformedInputError&) {
    return std::nullopt;
  }
}

class OracleEquivalenceTest : public ::testing::TestWithParam<InvariantKind> {};

TEST_P(OracleEquivalenceTest, ConnectedGraphsUpToFiveVertices) {
  const InvariantKind kind = GetParam();
  for (const Graph& g : EnumerateCorpus(CorpusSpec::Builtin(5))) {
    const AutGroup group = AutomorphismGroup(g);
    std::optional<int> expected;
    if (g.size() > 0 || kind == InvariantKind::kChromatic ||
        kind == InvariantKind::kDistinguishing ||
        kind == InvariantKind::kDistinguishingChromatic) {
      expected = oracle::Invariant(g, kind);
    }
    EXPECT_EQ(LibraryValue(group, kind), expected)
        << ToGraph6(g) << " " << KindName(kind);
  }
}

INSTANTIATE_TEST_SUITE_P(
    AllKinds, OracleEquivalenceTest, ::testing::ValuesIn(AllKinds()),
    [](const ::testing::TestParamInfo<InvariantKind>& info) {
      return std::string(KindName(info.param));
    });

TEST(AutomorphismOracleTest, ConnectedGraphsUpToSixVertices) {
  for (const Graph& g : EnumerateCorpus(CorpusSpec::Builtin(6))) {
    std::vector<std::vector<int>> images;
    const AutGroup aut = AutomorphismGroup(g);
    for (const Permutation& p : aut.elements()) {
      images.push_back(p.image());
    }
    EXPECT_EQ(images, oracle::Automorphisms(g)) << ToGraph6(g);
  }
}

TEST(AutomorphismOracleTest, DisconnectedGraphsUpToSixVertices) {
  CorpusSpec spec = CorpusSpec::Builtin(6, /*connected_only=*/false);
  for (const Graph& g : EnumerateCorpus(spec)) {
    if (IsConnected(g)) continue;
    EXPECT_EQ(AutomorphismGroup(g).order(), oracle::Automorphisms(g).size())
        << ToGraph6(g);
  }
}

TEST(WitnessOracleTest, WitnessesPassNaiveDistinguishingCheck) {
  for (const Graph& g : EnumerateCorpus(CorpusSpec::Builtin(5))) {
    if (g.order() < 3) continue;
    const VertexColoring d =
        std::get<VertexColoring>(DistinguishingNumber(g).witness);
    EXPECT_TRUE(oracle::Distinguishes(g, d.colors,
                                      InvariantKind::kDistinguishing));
    const TotalColoring t =
        std::get<TotalColoring>(TotalDistinguishingNumber(g).witness);
    std::vector<int> colors = t.vertex.colors;
    colors.insert(colors.end(), t.edge.colors.begin(), t.edge.colors.end());
    EXPECT_TRUE(oracle::Distinguishes(g, colors,
                                      InvariantKind::kTotalDistinguishing));
  }
}

}  // namespace
}  // namespace symbreak
