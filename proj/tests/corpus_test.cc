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

#include "symbreak/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <string>

#include "gtest/gtest.h"
#include "oracle/brute_force.h"
#include "symbreak/error.h"
#include "symbreak/graph6.h"
#include "symbreak/symmetry.h"

namespace symbreak {
namespace {

int CountOrder(int n) {
  CorpusSpec spec = CorpusSpec::Builtin(n);
  spec.min_order = n;
  return static_cast<int>(EnumerateCorpus(spec).size());
}

TEST(CorpusTest, ConnectedCountsMatchOracle) {
  EXPECT_EQ(CountOrder(1), 1);
  EXPECT_EQ(CountOrder(2), 1);
  for (int n = 3; n <= 6; ++n) {
    EXPECT_EQ(CountOrder(n), oracle::CountConnectedClasses(n)) << n;
  }
}

TEST(CorpusTest, PublishedConnectedCounts) {
  EXPECT_EQ(CountOrder(3), 2);
  EXPECT_EQ(CountOrder(4), 6);
  EXPECT_EQ(CountOrder(5), 21);
  EXPECT_EQ(CountOrder(6), 112);
}

TEST(CorpusTest, AllGraphsIncludingDisconnected) {
  // 1, 2, 4, 11 isomorphism classes of graphs on 1..4 vertices.
  CorpusSpec spec = CorpusSpec::Builtin(4, /*connected_only=*/false);
  EXPECT_EQ(EnumerateCorpus(spec).size(), 1u + 2u + 4u + 11u);
}

TEST(CorpusTest, EachClassOnceAndSorted) {
  const auto graphs = EnumerateCorpus(CorpusSpec::Builtin(6));
  std::set<std::string> keys;
  for (const Graph& g : graphs) {
    EXPECT_TRUE(keys.insert(oracle::CanonicalKey(g)).second) << ToGraph6(g);
  }
  for (std::size_t i = 1; i < graphs.size(); ++i) {
    const auto key = [](const Graph& g) {
      return std::make_pair(g.order(), ToGraph6(g));
    };
    EXPECT_LT(key(graphs[i - 1]), key(graphs[i]));
  }
}

TEST(CorpusTest, NonCycleFilter) {
  CorpusSpec spec = CorpusSpec::Builtin(5);
  spec.min_order = 3;
  spec.non_cycle = true;
  const auto graphs = EnumerateCorpus(spec);
  EXPECT_EQ(graphs.size(), 2u + 6u + 21u - 3u);
  for (const Graph& g : graphs) EXPECT_FALSE(IsCycle(g));
}

TEST(CorpusTest, BuiltinAboveSixIsRejected) {
  EXPECT_THROW(EnumerateCorpus(CorpusSpec::Builtin(7)), MalformedInputError);
}

TEST(CorpusTest, FileSourceKeepsOrderAndFilters) {
  const std::string path = ::testing::TempDir() + "corpus_test.g6";
  {
    std::ofstream out(path);
    // C5, two disjoint edges, K3.
    out << "Dhc\nC`\nBw\n";
  }
  const auto graphs = EnumerateCorpus(CorpusSpec::File(path));
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(ToGraph6(graphs[0]), "Dhc");
  EXPECT_EQ(ToGraph6(graphs[1]), "Bw");
}

TEST(CorpusTest, SevenVertexFileHasAllConnectedClasses) {
  const auto graphs = EnumerateCorpus(
      CorpusSpec::File(std::string(SYMBREAK_TEST_DATA_DIR) + "/connected7.g6"));
  ASSERT_EQ(graphs.size(), 853u);
  std::set<std::vector<std::uint8_t>> keys;
  for (const Graph& g : graphs) {
    EXPECT_EQ(g.order(), 7);
    keys.insert(Canonicalize(g).key);
  }
  EXPECT_EQ(keys.size(), 853u);
}

TEST(CorpusTest, UnreadableFileIsIoError) {
  EXPECT_THROW(EnumerateCorpus(CorpusSpec::File("/nonexistent.g6")), IoError);
}

TEST(CorpusTest, Describe) {
  EXPECT_EQ(CorpusSpec::Builtin(6).Describe(), "builtin:6,connected");
  EXPECT_EQ(CorpusSpec::File("x.g6").Describe(), "file:x.g6,connected");
}

}  // namespace
}  // namespace symbreak
