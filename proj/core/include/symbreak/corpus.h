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

#ifndef SYMBREAK_CORPUS_H_
#define SYMBREAK_CORPUS_H_

#include <string>
#include <vector>

#include "symbreak/graph.h"

namespace symbreak {

// Largest order the builtin enumeration handles (2^15 labelled graphs).
inline constexpr int kMaxBuiltinOrder = 6;

struct CorpusSpec {
  enum class Source { kBuiltin, kFile };

  Source source = Source::kBuiltin;
  // Builtin: enumerate orders min_order..max_order (max_order <= 6).
  // File: keep graphs whose order lies in [min_order, max_order].
  int min_order = 1;
  int max_order = kMaxBuiltinOrder;
  std::string path;
  bool connected_only = true;
  bool non_cycle = false;

  static CorpusSpec Builtin(int max_order, bool connected_only = true) {
    CorpusSpec spec;
    spec.max_order = max_order;
    spec.connected_only = connected_only;
    return spec;
  }
  static CorpusSpec File(std::string path) {
    CorpusSpec spec;
    spec.source = Source::kFile;
    spec.path = std::move(path);
    spec.max_order = 62;
    return spec;
  }

  // "builtin:6" or "file:<path>", plus active filters.
  std::string Describe() const;
};

// Builtin source: one canonical representative per isomorphism class,
// ordered by (order, graph6 of the canonical form). File source: file order.
// Throws MalformedInputError for a builtin max_order above 6 and IoError /
// FormatError for unreadable files.
std::vector<Graph> EnumerateCorpus(const CorpusSpec& spec);

}  // namespace symbreak

#endif  // SYMBREAK_CORPUS_H_
