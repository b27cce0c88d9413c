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

#include "symbreak/symmetry.h"

#include <algorithm>
#include <functional>
#include <numeric>

#include "symbreak/error.h"

namespace symbreak {
namespace {

// Ordered partition of the vertex set: cell[v] is the index of v's cell and
// cell indices are dense, 0..cells-1. The order of cells is determined by
// isomorphism-invariant data only.
struct Partition {
  std::vector<int> cell;
  int cells = 0;
};

std::uint64_t Mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h;
}

// Refines p to the coarsest equitable partition below it. The returned trace
// summarises every splitting step; isomorphic inputs give equal traces.
std::uint64_t Refine(const Graph& g, Partition& p) {
  const int n = g.order();
  std::uint64_t trace = 0x51ed270b27a1f00dULL;
  std::vector<std::vector<int>> signature(n);
  std::vector<int> order(n);
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.clear();
      sig.push_back(p.cell[v]);
      for (int w : g.Neighbors(v)) sig.push_back(p.cell[w]);
      std::sort(sig.begin() + 1, sig.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return signature[a] < signature[b];
    });
    std::vector<int> next(n);
    int cells = 0;
    int run = 0;
    for (int k = 0; k < n; ++k) {
      if (k > 0 && signature[order[k]] != signature[order[k - 1]]) {
        trace = Mix(trace, static_cast<std::uint64_t>(run));
        for (int x : signature[order[k - 1]]) trace = Mix(trace, x);
        ++cells;
        run = 0;
      }
      next[order[k]] = cells;
      ++run;
    }
    trace = Mix(trace, static_cast<std::uint64_t>(run));
    for (int x : signature[order[n - 1]]) trace = Mix(trace, x);
    ++cells;
    const bool stable = cells == p.cells;
    p.cell = std::move(next);
    p.cells = cells;
    if (stable) break;
  }
  return Mix(trace, static_cast<std::uint64_t>(p.cells));
}

// Splits v off the front of its cell.
Partition Individualize(const Partition& p, int v) {
  Partition out;
  out.cell.resize(p.cell.size());
  const int own = p.cell[v];
  for (std::size_t x = 0; x < p.cell.size(); ++x) {
    const int c = p.cell[x];
    out.cell[x] = c + ((c > own || (c == own && static_cast<int>(x) != v))
                           ? 1
                           : 0);
  }
  out.cells = p.cells + 1;
  return out;
}

Partition UnitPartition(int n) {
  return Partition{std::vector<int>(n, 0), 1};
}

// First (lowest-index) non-singleton cell.
int TargetCell(const Partition& p) {
  std::vector<int> sizes(p.cells, 0);
  for (int c : p.cell) ++sizes[c];
  for (int c = 0; c < p.cells; ++c) {
    if (sizes[c] > 1) return c;
  }
  return -1;
}

void CheckOrder(const Graph& g, const Limits& limits) {
  if (g.order() > limits.max_vertices) {
    throw ResourceError("graph of order " + std::to_string(g.order()) +
                        " exceeds the vertex cap of " +
                        std::to_string(limits.max_vertices) +
                        " (SYMBREAK_MAX_VERTICES)");
  }
}

bool MapsOnto(const Graph& g, const Graph& h, const std::vector<int>& map) {
  for (const Edge& e : g.edges()) {
    if (!h.HasEdge(map[e.first], map[e.second])) return false;
  }
  return true;
}

// Enumerates isomorphisms g -> h (automorphisms when &g == &h) until visit
// returns false.
class PairSearch {
 public:
  PairSearch(const Graph& g, const Graph& h,
             std::function<bool(const std::vector<int>&)> visit)
      : g_(g), h_(h), visit_(std::move(visit)) {}

  void Run() {
    if (g_.order() != h_.order() || g_.size() != h_.size()) return;
    Partition src = UnitPartition(g_.order());
    Partition dst = UnitPartition(h_.order());
    if (Refine(g_, src) != Refine(h_, dst)) return;
    Recurse(src, dst);
  }

 private:
  bool Recurse(const Partition& src, const Partition& dst) {
    const int target = TargetCell(src);
    if (target < 0) {
      const int n = g_.order();
      std::vector<int> vertex_of_cell(n);
      for (int w = 0; w < n; ++w) vertex_of_cell[dst.cell[w]] = w;
      std::vector<int> map(n);
      for (int v = 0; v < n; ++v) map[v] = vertex_of_cell[src.cell[v]];
      if (MapsOnto(g_, h_, map)) return visit_(map);
      return true;
    }
    int v = 0;
    while (src.cell[v] != target) ++v;
    Partition next_src = Individualize(src, v);
    const std::uint64_t src_trace = Refine(g_, next_src);
    for (int w = 0; w < h_.order(); ++w) {
      if (dst.cell[w] != target) continue;
      Partition next_dst = Individualize(dst, w);
      if (Refine(h_, next_dst) != src_trace ||
          next_dst.cells != next_src.cells) {
        continue;
      }
      if (!Recurse(next_src, next_dst)) return false;
    }
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  std::function<bool(const std::vector<int>&)> visit_;
};

std::vector<std::uint8_t> AdjacencyKey(const Graph& g,
                                       const std::vector<int>& vertex_at) {
  const int n = g.order();
  std::vector<std::uint8_t> key;
  key.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      key.push_back(g.HasEdge(vertex_at[i], vertex_at[j]) ? 1 : 0);
    }
  }
  return key;
}

}  // namespace

bool IsAutomorphism(const Permutation& p, const Graph& g) {
  if (p.size() != g.order()) return false;
  return MapsOnto(g, g, p.image());
}

AutGroup::AutGroup(Graph graph, std::vector<Permutation> elements)
    : graph_(std::move(graph)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
}

bool AutGroup::Contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

AutGroup AutomorphismGroup(const Graph& g, const Limits& limits) {
  CheckOrder(g, limits);
  std::vector<Permutation> elements;
  PairSearch search(g, g, [&](const std::vector<int>& map) {
    if (elements.size() >= limits.max_group_order) {
      throw ResourceError("automorphism group exceeds the order cap of " +
                          std::to_string(limits.max_group_order));
    }
    elements.emplace_back(map);
    return true;
  });
  search.Run();
  return AutGroup(g, std::move(elements));
}

CanonicalForm Canonicalize(const Graph& g, const Limits& limits) {
  CheckOrder(g, limits);
  const int n = g.order();
  std::vector<std::uint8_t> best_key;
  std::vector<int> best_labeling;
  std::function<void(const Partition&)> recurse = [&](const Partition& p) {
    const int target = TargetCell(p);
    if (target < 0) {
      std::vector<int> vertex_at(n);
      for (int v = 0; v < n; ++v) vertex_at[p.cell[v]] = v;
      auto key = AdjacencyKey(g, vertex_at);
      if (best_labeling.empty() || key < best_key) {
        best_key = std::move(key);
        best_labeling = p.cell;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (p.cell[v] != target) continue;
      Partition next = Individualize(p, v);
      Refine(g, next);
      recurse(next);
    }
  };
  Partition start = UnitPartition(n);
  Refine(g, start);
  recurse(start);
  Permutation labeling(best_labeling);
  Graph canonical = g.WithDefaultLabels().Relabeled(labeling.image());
  return CanonicalForm{canonical.WithDefaultLabels(), std::move(labeling),
                       std::move(best_key)};
}

std::optional<Permutation> IsIsomorphic(const Graph& g, const Graph& h,
                                        const Limits& limits) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (DegreeSequence(g) != DegreeSequence(h)) return std::nullopt;
  CanonicalForm cg = Canonicalize(g, limits);
  CanonicalForm ch = Canonicalize(h, limits);
  if (cg.key != ch.key) return std::nullopt;
  return ch.labeling.Inverse().Compose(cg.labeling);
}

Permutation EdgeAction(const Permutation& p, const Graph& g) {
  if (!IsAutomorphism(p, g)) {
    throw ContractError("edge action of a non-automorphism");
  }
  std::vector<int> image(g.size());
  for (int k = 0; k < g.size(); ++k) {
    const Edge& e = g.edges()[k];
    image[k] = g.EdgeIndex(p(e.first), p(e.second));
  }
  return Permutation(std::move(image));
}

Permutation LiftToEndline(const Permutation& alpha, const Graph& g) {
  if (!IsAutomorphism(alpha, g)) {
    throw ContractError("lift of a non-automorphism");
  }
  const int n = g.order();
  std::vector<int> image(2 * n);
  for (int v = 0; v < n; ++v) {
    image[v] = alpha(v);
    image[n + v] = n + alpha(v);
  }
  return Permutation(std::move(image));
}

Permutation LiftToSubdivision(const Permutation& alpha, const Graph& g) {
  if (!IsAutomorphism(alpha, g)) {
    throw ContractError("lift of a non-automorphism");
  }
  const int n = g.order();
  std::vector<int> image(n + g.size());
  for (int v = 0; v < n; ++v) image[v] = alpha(v);
  for (int k = 0; k < g.size(); ++k) {
    const Edge& e = g.edges()[k];
    image[n + k] = n + g.EdgeIndex(alpha(e.first), alpha(e.second));
  }
  return Permutation(std::move(image));
}

bool Preserves(const Permutation& p, const VertexColoring& c) {
  if (p.size() != static_cast<int>(c.colors.size())) {
    throw ContractError("colouring and permutation differ in size");
  }
  for (int x = 0; x < p.size(); ++x) {
    if (c.colors[p(x)] != c.colors[x]) return false;
  }
  return true;
}

bool Preserves(const Permutation& p, const Graph& g, const EdgeColoring& c) {
  ValidateDomain(g, c);
  const Permutation action = EdgeAction(p, g);
  for (int k = 0; k < action.size(); ++k) {
    if (c.colors[action(k)] != c.colors[k]) return false;
  }
  return true;
}

bool Preserves(const Permutation& p, const Graph& g, const TotalColoring& c) {
  ValidateDomain(g, c);
  return Preserves(p, c.vertex) && Preserves(p, g, c.edge);
}

AutGroup Stabilizer(const AutGroup& group, const VertexColoring& c) {
  ValidateDomain(group.graph(), c);
  std::vector<Permutation> kept;
  for (const auto& p : group.elements()) {
    if (Preserves(p, c)) kept.push_back(p);
  }
  return AutGroup(group.graph(), std::move(kept));
}

AutGroup Stabilizer(const AutGroup& group, const EdgeColoring& c) {
  ValidateDomain(group.graph(), c);
  std::vector<Permutation> kept;
  for (const auto& p : group.elements()) {
    if (Preserves(p, group.graph(), c)) kept.push_back(p);
  }
  return AutGroup(group.graph(), std::move(kept));
}

AutGroup Stabilizer(const AutGroup& group, const TotalColoring& c) {
  ValidateDomain(group.graph(), c);
  std::vector<Permutation> kept;
  for (const auto& p : group.elements()) {
    if (Preserves(p, group.graph(), c)) kept.push_back(p);
  }
  return AutGroup(group.graph(), std::move(kept));
}

}  // namespace symbreak
