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

#include "symbreak/corpus.h"

#include <algorithm>
#include <map>

#include "symbreak/error.h"
#include "symbreak/graph6.h"
#include "symbreak/symmetry.h"

namespace symbreak {
namespace {

bool KeepGraph(const CorpusSpec& spec, const Graph& g) {
  if (g.order() < spec.min_order || g.order() > spec.max_order) return false;
  if (spec.connected_only && !IsConnected(g)) return false;
  if (spec.non_cycle && IsCycle(g)) return false;
  return true;
}

std::vector<Graph> EnumerateOrder(int n, const CorpusSpec& spec) {
  std::vector<Edge> slots;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  }
  std::map<std::string, Graph> classes;
  const std::uint32_t total = 1u << slots.size();
  std::vector<Edge> edges;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (mask & (1u << b)) edges.push_back(slots[b]);
    }
    // A connected graph on n vertices needs n-1 edges.
    if (spec.connected_only && static_cast<int>(edges.size()) < n - 1) {
      continue;
    }
    Graph g = Graph::FromEdgeList(n, edges);
    if (!KeepGraph(spec, g)) continue;
    CanonicalForm canon = Canonicalize(g);
    std::string key = ToGraph6(canon.graph);
    classes.try_emplace(std::move(key), std::move(canon.graph));
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::string CorpusSpec::Describe() const {
  std::string out = source == Source::kBuiltin
                        ? "builtin:" + std::to_string(max_order)
                        : "file:" + path;
  if (connected_only) out += ",connected";
  if (non_cycle) out += ",non-cycle";
  if (min_order > 1) out += ",min-order=" + std::to_string(min_order);
  if (source == Source::kFile && max_order < 62) {
    out += ",max-order=" + std::to_string(max_order);
  }
  return out;
}

std::vector<Graph> EnumerateCorpus(const CorpusSpec& spec) {
  if (spec.source == CorpusSpec::Source::kFile) {
    std::vector<Graph> out;
    for (Graph& g : ReadGraph6File(spec.path)) {
      if (KeepGraph(spec, g)) out.push_back(std::move(g));
    }
    return out;
  }
  if (spec.max_order > kMaxBuiltinOrder || spec.max_order < 1) {
    throw MalformedInputError("builtin enumeration supports orders 1.." +
                              std::to_string(kMaxBuiltinOrder) +
                              "; supply larger corpora as graph6 files");
  }
  std::vector<Graph> out;
  for (int n = std::max(1, spec.min_order); n <= spec.max_order; ++n) {
    for (Graph& g : EnumerateOrder(n, spec)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace symbreak
