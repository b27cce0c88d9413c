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

#include "symbreak/graph.h"

#include <algorithm>
#include <set>

#include "symbreak/error.h"

namespace symbreak {

std::string VertexLabel::ToString() const {
  switch (kind) {
    case Kind::kOriginal:
      return "v" + std::to_string(i);
    case Kind::kEdgeVertex:
      return "e" + std::to_string(i) + "-" + std::to_string(j);
    case Kind::kPendant:
      return "p" + std::to_string(i);
  }
  return "?";
}

Graph::Graph() : Graph(1, {}, {VertexLabel::Original(0)}) {}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<VertexLabel> labels)
    : adjacency_(n),
      matrix_(static_cast<std::size_t>(n) * n, 0),
      edges_(std::move(edges)),
      labels_(std::move(labels)) {
  for (const Edge& e : edges_) {
    adjacency_[e.first].push_back(e.second);
    adjacency_[e.second].push_back(e.first);
    matrix_[static_cast<std::size_t>(e.first) * n + e.second] = 1;
    matrix_[static_cast<std::size_t>(e.second) * n + e.first] = 1;
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

Graph Graph::FromEdgeList(int n, std::span<const std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a == b) {
      throw MalformedInputError("loop at vertex " + std::to_string(a));
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw MalformedInputError("edge {" + std::to_string(a) + "," +
                                std::to_string(b) + "} out of range for n=" +
                                std::to_string(n));
    }
    edges.emplace_back(a, b);
  }
  return FromEdgeList(n, edges);
}

Graph Graph::FromEdgeList(int n, std::span<const Edge> edges) {
  if (n < 1) throw MalformedInputError("graph order must be at least 1");
  std::vector<VertexLabel> labels;
  labels.reserve(n);
  for (int v = 0; v < n; ++v) labels.push_back(VertexLabel::Original(v));
  return FromEdgeList(n, edges, std::move(labels));
}

Graph Graph::FromEdgeList(int n, std::span<const Edge> edges,
                          std::vector<VertexLabel> labels) {
  if (n < 1) throw MalformedInputError("graph order must be at least 1");
  if (static_cast<int>(labels.size()) != n) {
    throw MalformedInputError("label count does not match order");
  }
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (Edge e : edges) {
    Edge norm(e.first, e.second);
    if (norm.first == norm.second) {
      throw MalformedInputError("loop at vertex " + std::to_string(e.first));
    }
    if (norm.first < 0 || norm.second >= n) {
      throw MalformedInputError("edge {" + std::to_string(e.first) + "," +
                                std::to_string(e.second) +
                                "} out of range for n=" + std::to_string(n));
    }
    sorted.push_back(norm);
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::set<VertexLabel> distinct(labels.begin(), labels.end());
  if (static_cast<int>(distinct.size()) != n) {
    throw MalformedInputError("vertex labels must be pairwise distinct");
  }
  return Graph(n, std::move(sorted), std::move(labels));
}

const std::vector<int>& Graph::Neighbors(int v) const {
  if (v < 0 || v >= order()) {
    throw MalformedInputError("vertex " + std::to_string(v) +
                              " out of range");
  }
  return adjacency_[v];
}

int Graph::EdgeIndex(int u, int v) const {
  Edge key(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph Graph::WithDefaultLabels() const {
  std::vector<VertexLabel> labels;
  labels.reserve(order());
  for (int v = 0; v < order(); ++v) labels.push_back(VertexLabel::Original(v));
  return Graph(order(), edges_, std::move(labels));
}

Graph Graph::Relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order()) {
    throw ContractError("relabeling has wrong length");
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.emplace_back(perm[e.first], perm[e.second]);
  std::sort(edges.begin(), edges.end());
  std::vector<VertexLabel> labels(order());
  for (int v = 0; v < order(); ++v) labels[perm[v]] = labels_[v];
  return Graph(order(), std::move(edges), std::move(labels));
}

int MaxDegree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.Degree(v));
  return best;
}

std::vector<int> DegreeSequence(const Graph& g) {
  std::vector<int> degrees;
  degrees.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) degrees.push_back(g.Degree(v));
  std::sort(degrees.rbegin(), degrees.rend());
  return degrees;
}

bool IsConnected(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.Neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> Bipartition(
    const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int start = 0; start < g.order(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.Neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> classes;
  for (int v = 0; v < g.order(); ++v) {
    (side[v] == 0 ? classes.first : classes.second).push_back(v);
  }
  return classes;
}

const std::vector<int>& Neighborhood(const Graph& g, int v) {
  return g.Neighbors(v);
}

bool IsIrreducible(const Graph& g) {
  std::vector<std::vector<int>> hoods;
  hoods.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) hoods.push_back(g.Neighbors(v));
  std::sort(hoods.begin(), hoods.end());
  return std::adjacent_find(hoods.begin(), hoods.end()) == hoods.end();
}

bool IsCycle(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.Degree(v) != 2) return false;
  }
  return IsConnected(g);
}

}  // namespace symbreak
