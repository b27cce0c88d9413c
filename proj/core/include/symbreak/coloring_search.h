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

#ifndef SYMBREAK_COLORING_SEARCH_H_
#define SYMBREAK_COLORING_SEARCH_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "symbreak/permutation.h"

namespace symbreak {

// An abstract colouring question over elements 0..size-1 (vertices, edges,
// or vertices followed by edges).
struct ColoringProblem {
  int size = 0;
  // Elements joined in `conflicts` must get different colours.
  bool proper = false;
  std::vector<std::vector<int>> conflicts;
  // Only the identity of `group` may preserve the colouring.
  bool distinguishing = false;
  // Symmetries of the problem: permutations of the elements that preserve
  // `conflicts`. Validity of a colouring is invariant under this group, and
  // the search only expands colourings that are lexicographic leaders of
  // their orbit. Must be a group (closed, contains the identity).
  std::vector<Permutation> group;
};

struct SearchOutcome {
  // Lexicographically least valid colouring with colours 1..palette, if one
  // was found.
  std::optional<std::vector<int>> coloring;
  // False when the node budget ran out before the search finished; then a
  // missing colouring proves nothing.
  bool exhausted = true;
  std::uint64_t nodes = 0;
};

// Depth-first search over elements in index order. Prunes by first-fit
// colour introduction, by lexicographic-leader tests against the group, and
// (when distinguishing) whenever a nontrivial group element that moves only
// coloured elements already preserves the partial colouring.
// node_budget == 0 means unlimited.
SearchOutcome FindColoring(const ColoringProblem& problem, int palette,
                           std::uint64_t node_budget = 0);

// Size of a maximum clique in the conflict graph (0 for size 0).
int ConflictCliqueNumber(const ColoringProblem& problem);

}  // namespace symbreak

#endif  // SYMBREAK_COLORING_SEARCH_H_
