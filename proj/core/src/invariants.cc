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

#include "symbreak/invariants.h"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "symbreak/error.h"

namespace symbreak {
namespace {

constexpr std::array<std::pair<InvariantKind, std::string_view>, 6> kNames = {{
    {InvariantKind::kChromatic, "chi"},
    {InvariantKind::kDistinguishing, "D"},
    {InvariantKind::kDistinguishingChromatic, "chiD"},
    {InvariantKind::kDistinguishingIndex, "Dp"},
    {InvariantKind::kDistinguishingChromaticIndex, "chiDp"},
    {InvariantKind::kTotalDistinguishing, "Dpp"},
}};

void RequireConnected(const Graph& g) {
  if (!IsConnected(g)) {
    throw MalformedInputError("invariants are defined for connected graphs");
  }
}

void RequireEdges(const Graph& g) {
  if (g.size() == 0) {
    throw MalformedInputError("edge and total invariants need an edge");
  }
}

std::vector<Permutation> EdgeGroup(const AutGroup& group) {
  std::vector<Permutation> actions;
  actions.reserve(group.elements().size());
  for (const auto& p : group.elements()) {
    Permutation action = EdgeAction(p, group.graph());
    if (action.IsIdentity() && !p.IsIdentity()) {
      throw UndefinedInvariantError(
          "a nontrivial automorphism fixes every edge, so no edge colouring "
          "is distinguishing");
    }
    actions.push_back(std::move(action));
  }
  return actions;
}

ColoringProblem VertexProblem(const AutGroup& group, bool proper,
                              bool distinguishing) {
  const Graph& g = group.graph();
  ColoringProblem problem;
  problem.size = g.order();
  problem.proper = proper;
  problem.distinguishing = distinguishing;
  problem.group = group.elements();
  if (proper) {
    for (int v = 0; v < g.order(); ++v) {
      problem.conflicts.push_back(g.Neighbors(v));
    }
  }
  return problem;
}

ColoringProblem EdgeProblem(const AutGroup& group, bool proper) {
  const Graph& g = group.graph();
  ColoringProblem problem;
  problem.size = g.size();
  problem.proper = proper;
  problem.distinguishing = true;
  problem.group = EdgeGroup(group);
  if (proper) {
    problem.conflicts.resize(g.size());
    for (int k = 0; k < g.size(); ++k) {
      const Edge& e = g.edges()[k];
      for (int end : {e.first, e.second}) {
        for (int w : g.Neighbors(end)) {
          const int other = g.EdgeIndex(end, w);
          if (other != k) problem.conflicts[k].push_back(other);
        }
      }
    }
  }
  return problem;
}

// Vertices 0..n-1 followed by edges n..n+m-1.
ColoringProblem TotalProblem(const AutGroup& group) {
  const Graph& g = group.graph();
  const int n = g.order();
  ColoringProblem problem;
  problem.size = n + g.size();
  problem.distinguishing = true;
  for (const auto& p : group.elements()) {
    const Permutation action = EdgeAction(p, g);
    std::vector<int> image(problem.size);
    for (int v = 0; v < n; ++v) image[v] = p(v);
    for (int k = 0; k < g.size(); ++k) image[n + k] = n + action(k);
    problem.group.emplace_back(std::move(image));
  }
  return problem;
}

struct Minimum {
  int value = 0;
  bool certified = false;
  std::vector<int> colors;
  std::uint64_t nodes = 0;
};

Minimum Minimize(const ColoringProblem& problem, int lower_bound,
                 bool lower_bound_proven, const InvariantOptions& options) {
  if (!options.upper_bound_only &&
      problem.size > options.limits.max_certify_elements) {
    throw ResourceError("colouring domain of " +
                        std::to_string(problem.size) +
                        " elements exceeds the certification cap of " +
                        std::to_string(options.limits.max_certify_elements));
  }
  Minimum result;
  result.certified = lower_bound_proven;
  const std::uint64_t budget = options.upper_bound_only ? options.node_budget
                                                        : 0;
  for (int r = std::max(1, lower_bound); r <= problem.size; ++r) {
    SearchOutcome outcome = FindColoring(problem, r, budget);
    result.nodes += outcome.nodes;
    if (outcome.coloring) {
      result.value = r;
      result.colors = std::move(*outcome.coloring);
      return result;
    }
    if (!outcome.exhausted) result.certified = false;
  }
  throw std::logic_error("colouring search found no solution at any palette");
}

[[noreturn]] void WitnessRejected(InvariantKind kind) {
  throw std::logic_error("internal: " + std::string(KindName(kind)) +
                         " witness failed re-validation");
}

InvariantValue VertexInvariant(const AutGroup& group, InvariantKind kind,
                               bool proper, bool distinguishing,
                               int lower_bound, bool lower_bound_proven,
                               const InvariantOptions& options) {
  ColoringProblem problem = VertexProblem(group, proper, distinguishing);
  if (proper) {
    const int clique = ConflictCliqueNumber(problem);
    if (clique >= lower_bound) {
      lower_bound = clique;
      lower_bound_proven = true;
    }
  }
  Minimum best = Minimize(problem, lower_bound, lower_bound_proven, options);
  VertexColoring witness{std::move(best.colors), best.value};
  if ((proper && !IsProper(group.graph(), witness)) ||
      (distinguishing && !IsDistinguishing(group, witness))) {
    WitnessRejected(kind);
  }
  return InvariantValue{kind, best.value, best.certified, std::move(witness),
                        best.nodes};
}

InvariantValue EdgeInvariant(const AutGroup& group, InvariantKind kind,
                             bool proper, const InvariantOptions& options) {
  ColoringProblem problem = EdgeProblem(group, proper);
  const int clique = ConflictCliqueNumber(problem);
  Minimum best = Minimize(problem, clique, true, options);
  EdgeColoring witness =
      EdgeColoring::ForGraph(group.graph(), std::move(best.colors), best.value);
  if ((proper && !IsProper(group.graph(), witness)) ||
      !IsDistinguishing(group, witness)) {
    WitnessRejected(kind);
  }
  return InvariantValue{kind, best.value, best.certified, std::move(witness),
                        best.nodes};
}

InvariantValue TotalInvariant(const AutGroup& group,
                              const InvariantOptions& options) {
  const Graph& g = group.graph();
  ColoringProblem problem = TotalProblem(group);
  Minimum best = Minimize(problem, 1, true, options);
  TotalColoring witness;
  witness.vertex.palette = best.value;
  witness.vertex.colors.assign(best.colors.begin(),
                               best.colors.begin() + g.order());
  witness.edge = EdgeColoring::ForGraph(
      g, std::vector<int>(best.colors.begin() + g.order(), best.colors.end()),
      best.value);
  if (!IsDistinguishing(group, witness)) {
    WitnessRejected(InvariantKind::kTotalDistinguishing);
  }
  return InvariantValue{InvariantKind::kTotalDistinguishing, best.value,
                        best.certified, std::move(witness), best.nodes};
}

}  // namespace

std::string_view KindName(InvariantKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

InvariantKind ParseKind(std::string_view name) {
  for (const auto& [k, known] : kNames) {
    if (known == name) return k;
  }
  throw ContractError("unknown invariant '" + std::string(name) +
                      "' (expected chi, D, chiD, Dp, chiDp or Dpp)");
}

const std::vector<InvariantKind>& AllKinds() {
  static const std::vector<InvariantKind> kinds = [] {
    std::vector<InvariantKind> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return kinds;
}

bool IsProper(const Graph& g, const VertexColoring& c) {
  ValidateDomain(g, c);
  for (const Edge& e : g.edges()) {
    if (c.colors[e.first] == c.colors[e.second]) return false;
  }
  return true;
}

bool IsProper(const Graph& g, const EdgeColoring& c) {
  ValidateDomain(g, c);
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> seen;
    for (int w : g.Neighbors(v)) {
      const int color = c.colors[g.EdgeIndex(v, w)];
      if (std::find(seen.begin(), seen.end(), color) != seen.end()) {
        return false;
      }
      seen.push_back(color);
    }
  }
  return true;
}

bool IsDistinguishing(const AutGroup& group, const VertexColoring& c) {
  return Stabilizer(group, c).IsTrivial();
}
bool IsDistinguishing(const AutGroup& group, const EdgeColoring& c) {
  return Stabilizer(group, c).IsTrivial();
}
bool IsDistinguishing(const AutGroup& group, const TotalColoring& c) {
  return Stabilizer(group, c).IsTrivial();
}
bool IsDistinguishing(const Graph& g, const VertexColoring& c) {
  ValidateDomain(g, c);
  return IsDistinguishing(AutomorphismGroup(g), c);
}
bool IsDistinguishing(const Graph& g, const EdgeColoring& c) {
  ValidateDomain(g, c);
  return IsDistinguishing(AutomorphismGroup(g), c);
}
bool IsDistinguishing(const Graph& g, const TotalColoring& c) {
  ValidateDomain(g, c);
  return IsDistinguishing(AutomorphismGroup(g), c);
}

InvariantValue ComputeInvariant(const AutGroup& group, InvariantKind kind,
                                const InvariantOptions& options) {
  const Graph& g = group.graph();
  RequireConnected(g);
  switch (kind) {
    case InvariantKind::kChromatic:
      return VertexInvariant(group, kind, true, false, 1, true, options);
    case InvariantKind::kDistinguishing:
      return VertexInvariant(group, kind, false, true, 1, true, options);
    case InvariantKind::kDistinguishingChromatic: {
      const InvariantValue chi =
          ComputeInvariant(group, InvariantKind::kChromatic, options);
      return VertexInvariant(group, kind, true, true, chi.value, chi.certified,
                             options);
    }
    case InvariantKind::kDistinguishingIndex:
      RequireEdges(g);
      return EdgeInvariant(group, kind, false, options);
    case InvariantKind::kDistinguishingChromaticIndex:
      RequireEdges(g);
      return EdgeInvariant(group, kind, true, options);
    case InvariantKind::kTotalDistinguishing:
      RequireEdges(g);
      return TotalInvariant(group, options);
  }
  throw ContractError("unknown invariant kind");
}

InvariantValue ComputeInvariant(const Graph& g, InvariantKind kind,
                                const InvariantOptions& options) {
  RequireConnected(g);
  if (kind != InvariantKind::kChromatic &&
      kind != InvariantKind::kDistinguishing &&
      kind != InvariantKind::kDistinguishingChromatic) {
    RequireEdges(g);
  }
  return ComputeInvariant(AutomorphismGroup(g, options.limits), kind, options);
}

InvariantValue ChromaticNumber(const Graph& g, const InvariantOptions& o) {
  return ComputeInvariant(g, InvariantKind::kChromatic, o);
}
InvariantValue DistinguishingNumber(const Graph& g,
                                    const InvariantOptions& o) {
  return ComputeInvariant(g, InvariantKind::kDistinguishing, o);
}
InvariantValue DistinguishingChromaticNumber(const Graph& g,
                                             const InvariantOptions& o) {
  return ComputeInvariant(g, InvariantKind::kDistinguishingChromatic, o);
}
InvariantValue DistinguishingIndex(const Graph& g, const InvariantOptions& o) {
  return ComputeInvariant(g, InvariantKind::kDistinguishingIndex, o);
}
InvariantValue DistinguishingChromaticIndex(const Graph& g,
                                            const InvariantOptions& o) {
  return ComputeInvariant(g, InvariantKind::kDistinguishingChromaticIndex, o);
}
InvariantValue TotalDistinguishingNumber(const Graph& g,
                                         const InvariantOptions& o) {
  return ComputeInvariant(g, InvariantKind::kTotalDistinguishing, o);
}

}  // namespace symbreak
