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

#ifndef SYMBREAK_NAMED_GRAPHS_H_
#define SYMBREAK_NAMED_GRAPHS_H_

#include <string>
#include <string_view>

#include "symbreak/graph.h"

namespace symbreak {

struct NamedGraphSpec {
  enum class Family {
    kCycle,              // C_n, n >= 3, cycle 0-1-...-(n-1)-0
    kComplete,           // K_n, n >= 1
    kCompleteBipartite,  // K_{m,n}, parts {0..m-1} and {m..m+n-1}
    kQ,                  // K4 minus the edge {1,2}
    kLQ,                 // triangle {0,1,3} with pendant 2 attached at 1
    kPath,               // P_n on n >= 1 vertices, path 0-1-...-(n-1)
  };

  Family family = Family::kCycle;
  int first = 0;
  int second = 0;

  static NamedGraphSpec Cycle(int n) { return {Family::kCycle, n, 0}; }
  static NamedGraphSpec Complete(int n) { return {Family::kComplete, n, 0}; }
  static NamedGraphSpec CompleteBipartite(int m, int n) {
    return {Family::kCompleteBipartite, m, n};
  }
  static NamedGraphSpec Star(int m) { return CompleteBipartite(1, m); }
  static NamedGraphSpec Q() { return {Family::kQ, 0, 0}; }
  static NamedGraphSpec LQ() { return {Family::kLQ, 0, 0}; }
  static NamedGraphSpec Path(int n) { return {Family::kPath, n, 0}; }

  std::string Name() const;
};

// Throws ContractError for parameters outside the supported range.
Graph NamedGraph(const NamedGraphSpec& spec);

// Parses names like "C6", "K4", "K3,3", "K_{1,4}", "P3", "Q", "LQ".
// Throws ContractError for anything else.
NamedGraphSpec ParseNamedGraphSpec(std::string_view name);

}  // namespace symbreak

#endif  // SYMBREAK_NAMED_GRAPHS_H_
