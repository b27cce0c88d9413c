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

#ifndef SYMBREAK_CONSTRUCTIONS_H_
#define SYMBREAK_CONSTRUCTIONS_H_

#include <optional>
#include <string>
#include <vector>

#include "symbreak/coloring.h"
#include "symbreak/graph.h"
#include "symbreak/invariants.h"

namespace symbreak {

// The four graphs whose endline graphs need Delta+2 colours.
enum class EndlineException { kC4, kC6, kK4, kK33 };

std::string ExceptionName(EndlineException which);
Graph ExceptionGraph(EndlineException which);

// Hamiltonian cycle used by the exceptional colouring, in the catalog's
// vertex order: C4, C6 and K4 use 0-1-...-(p-1); K3,3 uses 0-3-1-4-2-5.
std::vector<int> ExceptionCycle(EndlineException which);

// Which exception g is isomorphic to, if any.
std::optional<EndlineException> MatchEndlineException(const Graph& g);

// Outcome of running the checkers on a constructed colouring.
struct Certification {
  bool proper = false;
  bool distinguishing = false;
  // The construction failed its own certification and the colouring was
  // replaced by an exact-search witness.
  bool fallback_used = false;

  bool ok() const { return proper && distinguishing; }
};

struct EdgeConstruction {
  Graph graph;  // the endline graph the colouring lives on
  EdgeColoring coloring;
  Certification certification;
};

struct VertexConstruction {
  Graph graph;  // the subdivision graph the colouring lives on
  VertexColoring coloring;
  Certification certification;
};

// Colouring of G+ with Delta+2 colours for G in {C4, C6, K4, K3,3}: the
// Hamiltonian cycle alternates 3 and 4 starting at its first vertex z1, the
// pendant edge at z1 gets 1, every other pendant edge gets 2, and the
// remaining edges of G get 5. Throws ContractError for any other graph.
EdgeConstruction ExceptionalEndlineColoring(const Graph& g);

// Colouring of G+ with Delta+1 colours extending a minimum proper
// distinguishing edge colouring g of G. When chi'_D(G) = Delta every pendant
// edge gets Delta+1; when it is Delta+1 the pendant edge at v gets the least
// colour missing at v. Falls back to exact search if certification fails.
// Requires a connected G of order >= 3 outside the four exceptions.
EdgeConstruction EndlineExtensionColoring(const Graph& g,
                                          const InvariantOptions& options = {});

// Copies vertex colours onto original vertices and edge colours onto
// edge-vertices of S(G).
VertexColoring LiftTotalToSubdivision(const Graph& g, const TotalColoring& f);

// Inverse of LiftTotalToSubdivision, reading positions from the provenance
// labels of `subdivision`. Throws ContractError if the labels do not cover
// V(G) and E(G) exactly once.
TotalColoring RestrictSubdivisionToTotal(const Graph& g,
                                         const Graph& subdivision,
                                         const VertexColoring& f);

// Proper distinguishing colouring of S(G) for a connected non-cycle G of
// order >= 3, built from a minimum distinguishing colouring f of G:
//   D(G) >= 3: originals keep f, edge-vertex {x,y} gets the least colour in
//              1..D(G) other than f(x), f(y);
//   D(G) == 2: originals keep f, every edge-vertex gets 3;
//   D(G) == 1: originals get 1, edge-vertices get 2.
VertexConstruction SubdivisionProperDistinguishing(
    const Graph& g, const InvariantOptions& options = {});

}  // namespace symbreak

#endif  // SYMBREAK_CONSTRUCTIONS_H_
