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

#include "symbreak/coloring.h"

#include <algorithm>
#include <string>

#include "symbreak/error.h"

namespace symbreak {
namespace {

void CheckRange(const std::vector<int>& colors, int palette) {
  for (int c : colors) {
    if (c < 1 || c > palette) {
      throw ContractError("colour " + std::to_string(c) +
                          " outside palette 1.." + std::to_string(palette));
    }
  }
}

}  // namespace

EdgeColoring EdgeColoring::ForGraph(const Graph& g, std::vector<int> colors,
                                    int palette) {
  EdgeColoring c{g.edges(), std::move(colors), palette};
  ValidateDomain(g, c);
  return c;
}

int EdgeColoring::ColorOf(int u, int v) const {
  Edge key(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) {
    throw ContractError("edge {" + std::to_string(u) + "," +
                        std::to_string(v) + "} not in colouring domain");
  }
  return colors[it - edges.begin()];
}

void ValidateDomain(const Graph& g, const VertexColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.order()) {
    throw ContractError("vertex colouring has " +
                        std::to_string(c.colors.size()) +
                        " entries for a graph of order " +
                        std::to_string(g.order()));
  }
  CheckRange(c.colors, c.palette);
}

void ValidateDomain(const Graph& g, const EdgeColoring& c) {
  if (c.edges != g.edges() || c.colors.size() != c.edges.size()) {
    throw ContractError("edge colouring domain differs from the edge set");
  }
  CheckRange(c.colors, c.palette);
}

void ValidateDomain(const Graph& g, const TotalColoring& c) {
  if (c.vertex.palette != c.edge.palette) {
    throw ContractError("total colouring parts use different palettes");
  }
  ValidateDomain(g, c.vertex);
  ValidateDomain(g, c.edge);
}

}  // namespace symbreak
