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

#ifndef SYMBREAK_SYMMETRY_H_
#define SYMBREAK_SYMMETRY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symbreak/coloring.h"
#include "symbreak/graph.h"
#include "symbreak/limits.h"
#include "symbreak/permutation.h"

namespace symbreak {

bool IsAutomorphism(const Permutation& p, const Graph& g);

// The full automorphism group of a graph, every element listed. Elements are
// sorted by image array, so the identity comes first.
class AutGroup {
 public:
  // Trusted constructor: elements must form the automorphism group of graph.
  AutGroup(Graph graph, std::vector<Permutation> elements);

  const Graph& graph() const { return graph_; }
  int degree() const { return graph_.order(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }
  bool IsTrivial() const { return elements_.size() == 1; }
  bool Contains(const Permutation& p) const;

 private:
  Graph graph_;
  std::vector<Permutation> elements_;
};

// Enumerates Aut(G) by individualisation-refinement with a paired target
// partition; every leaf is checked against the full adjacency. Labels are
// ignored. Throws ResourceError above limits.max_vertices vertices or
// limits.max_group_order elements.
AutGroup AutomorphismGroup(const Graph& g,
                           const Limits& limits = Limits::Default());

struct CanonicalForm {
  // g relabeled so that vertex v becomes labeling(v); default labels.
  Graph graph;
  Permutation labeling;
  // Upper-triangle adjacency bits of graph in graph6 column order.
  std::vector<std::uint8_t> key;
};

// Lexicographically least adjacency encoding over all leaves of the
// refinement search tree.
CanonicalForm Canonicalize(const Graph& g,
                           const Limits& limits = Limits::Default());

// A bijection mapping E(g) onto E(h), or nullopt.
std::optional<Permutation> IsIsomorphic(
    const Graph& g, const Graph& h, const Limits& limits = Limits::Default());

// Induced action {x,y} -> {p(x),p(y)} on edge indices of g.
// Throws ContractError if p is not an automorphism of g.
Permutation EdgeAction(const Permutation& p, const Graph& g);

// Extends alpha in Aut(G) to G+ (EndlineGraph numbering): vertex i maps to
// alpha(i), pendant n+i maps to n+alpha(i).
Permutation LiftToEndline(const Permutation& alpha, const Graph& g);

// Extends alpha in Aut(G) to S(G) (SubdivisionGraph numbering): vertex w
// maps to alpha(w), edge-vertex {x,y} maps to {alpha(x),alpha(y)}.
Permutation LiftToSubdivision(const Permutation& alpha, const Graph& g);

// Whether p maps every vertex / edge / both to one of the same colour.
bool Preserves(const Permutation& p, const VertexColoring& c);
bool Preserves(const Permutation& p, const Graph& g, const EdgeColoring& c);
bool Preserves(const Permutation& p, const Graph& g, const TotalColoring& c);

// Subgroup of the colouring-preserving automorphisms. Throws ContractError
// when the colouring does not live on group.graph().
AutGroup Stabilizer(const AutGroup& group, const VertexColoring& c);
AutGroup Stabilizer(const AutGroup& group, const EdgeColoring& c);
AutGroup Stabilizer(const AutGroup& group, const TotalColoring& c);

}  // namespace symbreak

#endif  // SYMBREAK_SYMMETRY_H_
