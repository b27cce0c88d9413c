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

#include "symbreak/transforms.h"

#include <vector>

#include "symbreak/error.h"

namespace symbreak {
namespace {

void RequireEdges(const Graph& g, const char* what) {
  if (g.size() == 0) {
    throw MalformedInputError(std::string(what) + " of an edgeless graph");
  }
}

// Pairs of edge indices sharing an endpoint, each pair once.
std::vector<Edge> MeetingEdgePairs(const Graph& g, int offset) {
  std::vector<Edge> pairs;
  for (int v = 0; v < g.order(); ++v) {
    const auto& nbrs = g.Neighbors(v);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        pairs.emplace_back(offset + g.EdgeIndex(v, nbrs[a]),
                           offset + g.EdgeIndex(v, nbrs[b]));
      }
    }
  }
  return pairs;
}

}  // namespace

Graph LineGraph(const Graph& g) {
  RequireEdges(g, "line graph");
  std::vector<VertexLabel> labels;
  for (const Edge& e : g.edges()) {
    labels.push_back(VertexLabel::EdgeVertex(e.first, e.second));
  }
  return Graph::FromEdgeList(g.size(), MeetingEdgePairs(g, 0),
                             std::move(labels));
}

Graph EndlineGraph(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  std::vector<VertexLabel> labels;
  for (int v = 0; v < n; ++v) labels.push_back(VertexLabel::Original(v));
  for (int v = 0; v < n; ++v) {
    labels.push_back(VertexLabel::Pendant(v));
    edges.emplace_back(v, n + v);
  }
  return Graph::FromEdgeList(2 * n, edges, std::move(labels));
}

Graph SubdivisionGraph(const Graph& g) {
  RequireEdges(g, "subdivision graph");
  const int n = g.order();
  std::vector<Edge> edges;
  std::vector<VertexLabel> labels;
  for (int v = 0; v < n; ++v) labels.push_back(VertexLabel::Original(v));
  for (int k = 0; k < g.size(); ++k) {
    const Edge& e = g.edges()[k];
    labels.push_back(VertexLabel::EdgeVertex(e.first, e.second));
    edges.emplace_back(e.first, n + k);
    edges.emplace_back(e.second, n + k);
  }
  return Graph::FromEdgeList(n + g.size(), edges, std::move(labels));
}

Graph MiddleGraph(const Graph& g) {
  RequireEdges(g, "middle graph");
  const int n = g.order();
  std::vector<Edge> edges = MeetingEdgePairs(g, n);
  std::vector<VertexLabel> labels;
  for (int v = 0; v < n; ++v) labels.push_back(VertexLabel::Original(v));
  for (int k = 0; k < g.size(); ++k) {
    const Edge& e = g.edges()[k];
    labels.push_back(VertexLabel::EdgeVertex(e.first, e.second));
    edges.emplace_back(e.first, n + k);
    edges.emplace_back(e.second, n + k);
  }
  return Graph::FromEdgeList(n + g.size(), edges, std::move(labels));
}

}  // namespace symbreak
