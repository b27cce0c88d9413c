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

#ifndef SYMBREAK_PERMUTATION_H_
#define SYMBREAK_PERMUTATION_H_

#include <compare>
#include <string>
#include <vector>

namespace symbreak {

// Bijection on 0..n-1 stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  // Throws ContractError unless image is a bijection on 0..size-1.
  explicit Permutation(std::vector<int> image);

  static Permutation Identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[x]; }
  const std::vector<int>& image() const { return image_; }

  bool IsIdentity() const;
  Permutation Inverse() const;
  // (*this o inner)(x) = (*this)(inner(x)).
  Permutation Compose(const Permutation& inner) const;

  // One-line image notation, e.g. "1 2 0".
  std::string ToString() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

}  // namespace symbreak

#endif  // SYMBREAK_PERMUTATION_H_
