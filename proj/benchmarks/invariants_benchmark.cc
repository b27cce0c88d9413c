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

#include <benchmark/benchmark.h>

#include "symbreak/graph6.h"
#include "symbreak/invariants.h"
#include "symbreak/named_graphs.h"
#include "symbreak/symmetry.h"
#include "symbreak/transforms.h"

namespace symbreak {
namespace {

void BM_InvariantOnPetersen(benchmark::State& state) {
  const InvariantKind kind = AllKinds()[state.range(0)];
  const AutGroup group =
      AutomorphismGroup(ParseGraph6("IheA@GUAo"));
  state.SetLabel(std::string(KindName(kind)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeInvariant(group, kind, {}).value);
  }
}
BENCHMARK(BM_InvariantOnPetersen)->DenseRange(0, 5);

void BM_DistinguishingNumberOfSubdividedComplete(benchmark::State& state) {
  const AutGroup group = AutomorphismGroup(
      SubdivisionGraph(NamedGraph(NamedGraphSpec::Complete(state.range(0)))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ComputeInvariant(group, InvariantKind::kDistinguishing, {}).value);
  }
}
BENCHMARK(BM_DistinguishingNumberOfSubdividedComplete)->DenseRange(4, 6);

void BM_ChromaticIndexOfEndlineCompleteBipartite(benchmark::State& state) {
  const Graph g = EndlineGraph(NamedGraph(
      NamedGraphSpec::CompleteBipartite(state.range(0), state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(DistinguishingChromaticIndex(g).value);
  }
}
BENCHMARK(BM_ChromaticIndexOfEndlineCompleteBipartite)->DenseRange(2, 4);

}  // namespace
}  // namespace symbreak
