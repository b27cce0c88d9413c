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

#include "symbreak/checks.h"
#include "symbreak/corpus.h"

namespace symbreak {
namespace {

void BM_EnumerateConnected(benchmark::State& state) {
  const CorpusSpec spec = CorpusSpec::Builtin(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateCorpus(spec).size());
  }
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_RunCheck(benchmark::State& state) {
  const TheoremId id = static_cast<TheoremId>(state.range(0));
  const std::vector<Graph> corpus = EnumerateCorpus(CorpusSpec::Builtin(5));
  state.SetLabel(std::string(TheoremName(id)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunCheck(id, corpus, "builtin:5").summary.passed);
  }
}
BENCHMARK(BM_RunCheck)
    ->Arg(static_cast<int>(TheoremId::kThm28))
    ->Arg(static_cast<int>(TheoremId::kThm33))
    ->Arg(static_cast<int>(TheoremId::kThm47))
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace symbreak
