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

#ifndef SYMBREAK_TRANSFORMS_H_
#define SYMBREAK_TRANSFORMS_H_

#include "symbreak/graph.h"

namespace symbreak {

// Output numbering, shared by all four transformations: source vertices
// keep indices 0..n-1 (when present) and the new vertices follow in
// lexicographic source-edge order (EdgeVertex) or source-vertex order
// (Pendant). Labels refer to source indices.

// L(G): one EdgeVertex per source edge, adjacent when the edges meet.
// Throws MalformedInputError for an edgeless graph.
Graph LineGraph(const Graph& g);

// G+: G with a pendant vertex n+i attached to every vertex i.
Graph EndlineGraph(const Graph& g);

// S(G): every edge {i,j} replaced by a path i - e_ij - j.
// Throws MalformedInputError for an edgeless graph.
Graph SubdivisionGraph(const Graph& g);

// M(G): S(G) plus L(G) edges among the edge-vertices.
// Throws MalformedInputError for an edgeless graph.
Graph MiddleGraph(const Graph& g);

}  // namespace symbreak

#endif  // SYMBREAK_TRANSFORMS_H_
