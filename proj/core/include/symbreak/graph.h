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

#ifndef SYMBREAK_GRAPH_H_
#define SYMBREAK_GRAPH_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symbreak {

// Unordered vertex pair stored with first < second.
struct Edge {
  int first = 0;
  int second = 0;

  Edge() = default;
  Edge(int a, int b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Where a vertex of a derived graph came from. Indices refer to vertices of
// the source graph the transformation was applied to.
struct VertexLabel {
  enum class Kind { kOriginal, kEdgeVertex, kPendant };

  Kind kind = Kind::kOriginal;
  int i = 0;
  int j = -1;  // only meaningful for kEdgeVertex, with i < j

  static VertexLabel Original(int v) { return {Kind::kOriginal, v, -1}; }
  static VertexLabel EdgeVertex(int a, int b) {
    return {Kind::kEdgeVertex, a < b ? a : b, a < b ? b : a};
  }
  static VertexLabel Pendant(int v) { return {Kind::kPendant, v, -1}; }

  std::string ToString() const;

  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

// Immutable simple undirected graph. Adjacency lists are sorted, the edge
// list is sorted lexicographically and every edge appears once.
class Graph {
 public:
  // Single isolated vertex.
  Graph();

  // Builds a graph, collapsing duplicate pairs. Throws MalformedInputError on
  // loops or indices outside [0, n). Labels default to Original(i).
  static Graph FromEdgeList(int n, std::span<const std::pair<int, int>> pairs);
  static Graph FromEdgeList(int n, std::span<const Edge> edges);
  static Graph FromEdgeList(int n, std::span<const Edge> edges,
                            std::vector<VertexLabel> labels);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<int>& Neighbors(int v) const;
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  const VertexLabel& label(int v) const { return labels_[v]; }

  bool HasEdge(int u, int v) const {
    return matrix_[static_cast<std::size_t>(u) * order() + v] != 0;
  }
  int Degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  // Index of {u, v} in edges(), or -1.
  int EdgeIndex(int u, int v) const;

  // Same vertex count and edge set; labels ignored.
  bool SameStructure(const Graph& other) const {
    return order() == other.order() && edges_ == other.edges_;
  }

  // Copy with labels reset to Original(i).
  Graph WithDefaultLabels() const;

  // Copy with vertex v renamed to perm[v].
  Graph Relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.SameStructure(b) && a.labels_ == b.labels_;
  }

 private:
  Graph(int n, std::vector<Edge> edges, std::vector<VertexLabel> labels);

  std::vector<std::vector<int>> adjacency_;
  std::vector<char> matrix_;
  std::vector<Edge> edges_;
  std::vector<VertexLabel> labels_;
};

int MaxDegree(const Graph& g);

// Degrees sorted in non-increasing order.
std::vector<int> DegreeSequence(const Graph& g);

bool IsConnected(const Graph& g);

// Two colour classes of a 2-colouring, or nullopt when an odd cycle exists.
// For a connected graph vertex 0 is always in the first class.
std::optional<std::pair<std::vector<int>, std::vector<int>>> Bipartition(
    const Graph& g);

const std::vector<int>& Neighborhood(const Graph& g, int v);

// True iff no two distinct vertices have the same open neighbourhood.
bool IsIrreducible(const Graph& g);

// True iff g is connected and 2-regular with at least 3 vertices.
bool IsCycle(const Graph& g);

}  // namespace symbreak

#endif  // SYMBREAK_GRAPH_H_
