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

#ifndef SYMBREAK_LIMITS_H_
#define SYMBREAK_LIMITS_H_

#include <cstdint>

namespace symbreak {

// Safety caps for the exhaustive engines.
struct Limits {
  // Largest graph the automorphism / canonical-form search accepts.
  int max_vertices = 40;
  // Largest automorphism group that is enumerated element by element.
  std::uint64_t max_group_order = 10'000'000;
  // Largest colouring domain (vertices, edges or both) for which a lower
  // bound is certified by exhaustive search.
  int max_certify_elements = 30;

  // Defaults, with max_vertices taken from SYMBREAK_MAX_VERTICES when set.
  static const Limits& Default();
};

}  // namespace symbreak

#endif  // SYMBREAK_LIMITS_H_
