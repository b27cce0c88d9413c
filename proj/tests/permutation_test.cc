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

#include "symbreak/permutation.h"

#include <vector>

#include "gtest/gtest.h"
#include "symbreak/error.h"

namespace symbreak {
namespace {

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_THROW(Permutation(std::vector<int>{0, 0}), ContractError);
  EXPECT_THROW(Permutation(std::vector<int>{0, 2}), ContractError);
}

TEST(PermutationTest, ComposeAppliesInnerFirst) {
  const Permutation rotate({1, 2, 0});
  const Permutation swap01({1, 0, 2});
  const Permutation both = rotate.Compose(swap01);
  EXPECT_EQ(both(0), rotate(swap01(0)));
  EXPECT_EQ(both(2), rotate(swap01(2)));
}

TEST(PermutationTest, InverseUndoes) {
  const Permutation p({2, 0, 3, 1});
  EXPECT_TRUE(p.Compose(p.Inverse()).IsIdentity());
  EXPECT_TRUE(p.Inverse().Compose(p).IsIdentity());
}

TEST(PermutationTest, ToStringIsOneLineNotation) {
  EXPECT_EQ(Permutation({1, 2, 0}).ToString(), "1 2 0");
  EXPECT_TRUE(Permutation::Identity(4).IsIdentity());
}

}  // namespace
}  // namespace symbreak
