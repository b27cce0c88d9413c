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

#ifndef SYMBREAK_COLORING_H_
#define SYMBREAK_COLORING_H_

#include <vector>

#include "symbreak/graph.h"

namespace symbreak {

// Colours are 1..palette.
struct VertexColoring {
  std::vector<int> colors;
  int palette = 0;

  friend bool operator==(const VertexColoring&,
                         const VertexColoring&) = default;
};

// colors[k] is the colour of edges[k]; edges mirrors Graph::edges() of the
// graph the colouring belongs to.
struct EdgeColoring {
  std::vector<Edge> edges;
  std::vector<int> colors;
  int palette = 0;

  static EdgeColoring ForGraph(const Graph& g, std::vector<int> colors,
                               int palette);

  // Throws ContractError if {u, v} is not in the domain.
  int ColorOf(int u, int v) const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

// Vertex and edge parts drawn from one palette 1..d.
struct TotalColoring {
  VertexColoring vertex;
  EdgeColoring edge;

  int palette() const { return vertex.palette; }

  friend bool operator==(const TotalColoring&,
                         const TotalColoring&) = default;
};

// Throw ContractError when the colouring's domain is not the graph's vertex
// set / edge set, or a colour is outside 1..palette.
void ValidateDomain(const Graph& g, const VertexColoring& c);
void ValidateDomain(const Graph& g, const EdgeColoring& c);
void ValidateDomain(const Graph& g, const TotalColoring& c);

}  // namespace symbreak

#endif  // SYMBREAK_COLORING_H_
