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
#include "symbreak/named_graphs.h"
#include "symbreak/symmetry.h"
#include "symbreak/transforms.h"

namespace symbreak {
namespace {

void BM_AutomorphismGroupComplete(benchmark::State& state) {
  const Graph g = NamedGraph(NamedGraphSpec::Complete(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(AutomorphismGroup(g).order());
  }
}
BENCHMARK(BM_AutomorphismGroupComplete)->DenseRange(4, 7);

void BM_AutomorphismGroupCycle(benchmark::State& state) {
  const Graph g = NamedGraph(NamedGraphSpec::Cycle(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(AutomorphismGroup(g).order());
  }
}
BENCHMARK(BM_AutomorphismGroupCycle)->RangeMultiplier(2)->Range(8, 32);

void BM_AutomorphismGroupPetersen(benchmark::State& state) {
  const Graph g = ParseGraph6("IheA@GUAo");
  for (auto _ : state) {
    benchmark::DoNotOptimize(AutomorphismGroup(g).order());
  }
}
BENCHMARK(BM_AutomorphismGroupPetersen);

void BM_CanonicalizeSubdivisionOfComplete(benchmark::State& state) {
  const Graph g =
      SubdivisionGraph(NamedGraph(NamedGraphSpec::Complete(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Canonicalize(g));
  }
}
BENCHMARK(BM_CanonicalizeSubdivisionOfComplete)->DenseRange(4, 6);

}  // namespace
}  // namespace symbreak
