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

#include <numeric>

#include "symbreak/error.h"

namespace symbreak {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (int x : image_) {
    if (x < 0 || x >= size() || hit[x]) {
      throw ContractError("image array is not a bijection");
    }
    hit[x] = 1;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

bool Permutation::IsIdentity() const {
  for (int x = 0; x < size(); ++x) {
    if (image_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::Inverse() const {
  Permutation p;
  p.image_.resize(image_.size());
  for (int x = 0; x < size(); ++x) p.image_[image_[x]] = x;
  return p;
}

Permutation Permutation::Compose(const Permutation& inner) const {
  if (inner.size() != size()) {
    throw ContractError("composing permutations of different degree");
  }
  Permutation p;
  p.image_.resize(image_.size());
  for (int x = 0; x < size(); ++x) p.image_[x] = image_[inner.image_[x]];
  return p;
}

std::string Permutation::ToString() const {
  std::string out;
  for (int x = 0; x < size(); ++x) {
    if (x > 0) out.push_back(' ');
    out += std::to_string(image_[x]);
  }
  return out;
}

}  // namespace symbreak
