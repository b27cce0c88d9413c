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

#ifndef SYMBREAK_INVARIANTS_H_
#define SYMBREAK_INVARIANTS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symbreak/coloring.h"
#include "symbreak/coloring_search.h"
#include "symbreak/graph.h"
#include "symbreak/limits.h"
#include "symbreak/symmetry.h"

namespace symbreak {

enum class InvariantKind {
  kChromatic,                      // chi
  kDistinguishing,                 // D
  kDistinguishingChromatic,        // chi_D
  kDistinguishingIndex,            // D'
  kDistinguishingChromaticIndex,   // chi'_D
  kTotalDistinguishing,            // D''
};

// Short names used on the command line and in reports: chi, D, chiD, Dp,
// chiDp, Dpp.
std::string_view KindName(InvariantKind kind);
// Throws ContractError for unknown names.
InvariantKind ParseKind(std::string_view name);
const std::vector<InvariantKind>& AllKinds();

using AnyColoring = std::variant<VertexColoring, EdgeColoring, TotalColoring>;

struct InvariantValue {
  InvariantKind kind = InvariantKind::kChromatic;
  int value = 0;
  // Every palette below value was shown infeasible, either by exhaustive
  // search or by a proven lower bound.
  bool certified = false;
  AnyColoring witness;
  std::uint64_t search_nodes = 0;
};

struct InvariantOptions {
  Limits limits = Limits::Default();
  // Skip the refusal above limits.max_certify_elements and give each palette
  // at most node_budget search nodes; results may then be uncertified.
  bool upper_bound_only = false;
  std::uint64_t node_budget = 2'000'000;
};

bool IsProper(const Graph& g, const VertexColoring& c);
bool IsProper(const Graph& g, const EdgeColoring& c);

// True iff the stabiliser of c in Aut(g) is trivial. The overloads taking a
// group avoid recomputing Aut(g).
bool IsDistinguishing(const Graph& g, const VertexColoring& c);
bool IsDistinguishing(const Graph& g, const EdgeColoring& c);
bool IsDistinguishing(const Graph& g, const TotalColoring& c);
bool IsDistinguishing(const AutGroup& group, const VertexColoring& c);
bool IsDistinguishing(const AutGroup& group, const EdgeColoring& c);
bool IsDistinguishing(const AutGroup& group, const TotalColoring& c);

// All six require a connected graph (MalformedInputError otherwise). The
// edge and total variants also require at least one edge; the edge variants
// throw UndefinedInvariantError when a nontrivial automorphism fixes every
// edge (K2).
InvariantValue ChromaticNumber(const Graph& g, const InvariantOptions& = {});
InvariantValue DistinguishingNumber(const Graph& g,
                                    const InvariantOptions& = {});
InvariantValue DistinguishingChromaticNumber(const Graph& g,
                                             const InvariantOptions& = {});
InvariantValue DistinguishingIndex(const Graph& g,
                                   const InvariantOptions& = {});
InvariantValue DistinguishingChromaticIndex(const Graph& g,
                                            const InvariantOptions& = {});
InvariantValue TotalDistinguishingNumber(const Graph& g,
                                         const InvariantOptions& = {});

InvariantValue ComputeInvariant(const Graph& g, InvariantKind kind,
                                const InvariantOptions& options = {});

// Same, reusing an already enumerated Aut(group.graph()).
InvariantValue ComputeInvariant(const AutGroup& group, InvariantKind kind,
                                const InvariantOptions& options = {});

}  // namespace symbreak

#endif  // SYMBREAK_INVARIANTS_H_
