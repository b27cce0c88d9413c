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

#include "symbreak/constructions.h"

#include <algorithm>
#include <stdexcept>

#include "symbreak/error.h"
#include "symbreak/named_graphs.h"
#include "symbreak/symmetry.h"
#include "symbreak/transforms.h"

namespace symbreak {
namespace {

constexpr EndlineException kAllExceptions[] = {
    EndlineException::kC4, EndlineException::kC6, EndlineException::kK4,
    EndlineException::kK33};

void RequireTheoremScope(const Graph& g) {
  if (g.order() < 3 || !IsConnected(g)) {
    throw ContractError("construction needs a connected graph of order >= 3");
  }
}

Certification Certify(const Graph& g, const EdgeColoring& c) {
  return Certification{IsProper(g, c), IsDistinguishing(g, c), false};
}

Certification Certify(const Graph& g, const VertexColoring& c) {
  return Certification{IsProper(g, c), IsDistinguishing(g, c), false};
}

}  // namespace

std::string ExceptionName(EndlineException which) {
  switch (which) {
    case EndlineException::kC4:
      return "C4";
    case EndlineException::kC6:
      return "C6";
    case EndlineException::kK4:
      return "K4";
    case EndlineException::kK33:
      return "K3,3";
  }
  return "?";
}

Graph ExceptionGraph(EndlineException which) {
  switch (which) {
    case EndlineException::kC4:
      return NamedGraph(NamedGraphSpec::Cycle(4));
    case EndlineException::kC6:
      return NamedGraph(NamedGraphSpec::Cycle(6));
    case EndlineException::kK4:
      return NamedGraph(NamedGraphSpec::Complete(4));
    case EndlineException::kK33:
      return NamedGraph(NamedGraphSpec::CompleteBipartite(3, 3));
  }
  throw ContractError("unknown exception graph");
}

std::vector<int> ExceptionCycle(EndlineException which) {
  switch (which) {
    case EndlineException::kC4:
    case EndlineException::kK4:
      return {0, 1, 2, 3};
    case EndlineException::kC6:
      return {0, 1, 2, 3, 4, 5};
    case EndlineException::kK33:
      return {0, 3, 1, 4, 2, 5};
  }
  throw ContractError("unknown exception graph");
}

std::optional<EndlineException> MatchEndlineException(const Graph& g) {
  for (EndlineException which : kAllExceptions) {
    const Graph candidate = ExceptionGraph(which);
    if (candidate.order() == g.order() && candidate.size() == g.size() &&
        IsIsomorphic(candidate, g)) {
      return which;
    }
  }
  return std::nullopt;
}

EdgeConstruction ExceptionalEndlineColoring(const Graph& g) {
  const auto which = MatchEndlineException(g);
  if (!which) {
    throw ContractError("exceptional colouring needs C4, C6, K4 or K3,3");
  }
  const Graph catalog = ExceptionGraph(*which);
  std::vector<int> cycle = ExceptionCycle(*which);
  if (!catalog.SameStructure(g)) {
    // Transport the catalog cycle along an isomorphism onto g.
    const Permutation map = *IsIsomorphic(catalog, g);
    for (int& z : cycle) z = map(z);
  }
  const int n = g.order();
  const int p = static_cast<int>(cycle.size());
  const Graph plus = EndlineGraph(g);
  std::vector<int> colors(plus.size(), 5);
  for (int i = 0; i < p; ++i) {
    // Edge {z_{i+1}, z_{i+2}} in 1-based terms: odd positions get 3.
    colors[plus.EdgeIndex(cycle[i], cycle[(i + 1) % p])] = i % 2 == 0 ? 3 : 4;
  }
  for (int v = 0; v < n; ++v) {
    colors[plus.EdgeIndex(v, n + v)] = v == cycle[0] ? 1 : 2;
  }
  const int palette = MaxDegree(g) + 2;
  for (int c : colors) {
    if (c > palette) {
      throw std::logic_error("exceptional colouring exceeds Delta+2 colours");
    }
  }
  EdgeColoring coloring = EdgeColoring::ForGraph(plus, colors, palette);
  Certification cert = Certify(plus, coloring);
  return EdgeConstruction{plus, std::move(coloring), cert};
}

EdgeConstruction EndlineExtensionColoring(const Graph& g,
                                          const InvariantOptions& options) {
  RequireTheoremScope(g);
  if (MatchEndlineException(g)) {
    throw ContractError("graph is one of C4, C6, K4, K3,3");
  }
  const int n = g.order();
  const int delta = MaxDegree(g);
  const InvariantValue index = DistinguishingChromaticIndex(g, options);
  const auto& base = std::get<EdgeColoring>(index.witness);
  const Graph plus = EndlineGraph(g);
  std::vector<int> colors(plus.size());
  for (int k = 0; k < g.size(); ++k) {
    const Edge& e = g.edges()[k];
    colors[plus.EdgeIndex(e.first, e.second)] = base.colors[k];
  }
  if (index.value == delta) {
    for (int v = 0; v < n; ++v) colors[plus.EdgeIndex(v, n + v)] = delta + 1;
  } else if (index.value == delta + 1) {
    for (int v = 0; v < n; ++v) {
      std::vector<char> used(delta + 2, 0);
      for (int w : g.Neighbors(v)) used[base.ColorOf(v, w)] = 1;
      int missing = 1;
      while (missing <= delta + 1 && used[missing]) ++missing;
      if (missing > delta + 1) {
        throw std::logic_error("no colour missing at vertex " +
                               std::to_string(v));
      }
      colors[plus.EdgeIndex(v, n + v)] = missing;
    }
  } else {
    throw std::logic_error("chi'_D(G) = " + std::to_string(index.value) +
                           " is neither Delta nor Delta+1");
  }
  EdgeColoring coloring = EdgeColoring::ForGraph(plus, colors, delta + 1);
  Certification cert = Certify(plus, coloring);
  if (!cert.ok()) {
    const InvariantValue exact = DistinguishingChromaticIndex(plus, options);
    coloring = std::get<EdgeColoring>(exact.witness);
    cert = Certify(plus, coloring);
    cert.fallback_used = true;
  }
  return EdgeConstruction{plus, std::move(coloring), cert};
}

VertexColoring LiftTotalToSubdivision(const Graph& g, const TotalColoring& f) {
  ValidateDomain(g, f);
  VertexColoring out;
  out.palette = f.palette();
  out.colors = f.vertex.colors;
  out.colors.insert(out.colors.end(), f.edge.colors.begin(),
                    f.edge.colors.end());
  return out;
}

TotalColoring RestrictSubdivisionToTotal(const Graph& g,
                                         const Graph& subdivision,
                                         const VertexColoring& f) {
  ValidateDomain(subdivision, f);
  const int n = g.order();
  if (subdivision.order() != n + g.size()) {
    throw ContractError("subdivision has the wrong number of vertices");
  }
  TotalColoring out;
  out.vertex.palette = f.palette;
  out.vertex.colors.assign(n, 0);
  std::vector<int> edge_colors(g.size(), 0);
  for (int x = 0; x < subdivision.order(); ++x) {
    const VertexLabel& label = subdivision.label(x);
    if (label.kind == VertexLabel::Kind::kOriginal && label.i >= 0 &&
        label.i < n && out.vertex.colors[label.i] == 0) {
      out.vertex.colors[label.i] = f.colors[x];
      continue;
    }
    if (label.kind == VertexLabel::Kind::kEdgeVertex) {
      const int k = g.EdgeIndex(label.i, label.j);
      if (k >= 0 && label.i < n && label.j < n && edge_colors[k] == 0) {
        edge_colors[k] = f.colors[x];
        continue;
      }
    }
    throw ContractError("vertex " + std::to_string(x) + " label " +
                        label.ToString() +
                        " does not name a unique vertex or edge of G");
  }
  out.edge = EdgeColoring::ForGraph(g, std::move(edge_colors), f.palette);
  return out;
}

VertexConstruction SubdivisionProperDistinguishing(
    const Graph& g, const InvariantOptions& options) {
  RequireTheoremScope(g);
  if (IsCycle(g)) {
    throw ContractError("construction excludes cycles");
  }
  const int n = g.order();
  const InvariantValue d = DistinguishingNumber(g, options);
  const auto& f = std::get<VertexColoring>(d.witness);
  const Graph s = SubdivisionGraph(g);
  VertexColoring coloring;
  coloring.colors.assign(s.order(), 0);
  if (d.value >= 3) {
    coloring.palette = d.value;
    for (int v = 0; v < n; ++v) coloring.colors[v] = f.colors[v];
    for (int k = 0; k < g.size(); ++k) {
      const Edge& e = g.edges()[k];
      int color = 1;
      while (color == f.colors[e.first] || color == f.colors[e.second]) {
        ++color;
      }
      coloring.colors[n + k] = color;
    }
  } else if (d.value == 2) {
    coloring.palette = 3;
    for (int v = 0; v < n; ++v) coloring.colors[v] = f.colors[v];
    for (int k = 0; k < g.size(); ++k) coloring.colors[n + k] = 3;
  } else {
    coloring.palette = 2;
    for (int v = 0; v < n; ++v) coloring.colors[v] = 1;
    for (int k = 0; k < g.size(); ++k) coloring.colors[n + k] = 2;
  }
  Certification cert = Certify(s, coloring);
  return VertexConstruction{s, std::move(coloring), cert};
}

}  // namespace symbreak
