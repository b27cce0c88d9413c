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

#ifndef SYMBREAK_GRAPH6_H_
#define SYMBREAK_GRAPH6_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/graph.h"

namespace symbreak {

// Largest order representable by the one-byte graph6 size prefix.
inline constexpr int kMaxGraph6Order = 62;

// Decodes one graph6 line (short form, 1 <= n <= 62). A trailing '\r' or
// '\n' is tolerated. Throws FormatError with the offending byte offset.
Graph ParseGraph6(std::string_view line);

// Encodes the upper triangle column by column: (0,1), (0,2), (1,2), (0,3)...
// Throws FormatError if the order exceeds kMaxGraph6Order.
std::string ToGraph6(const Graph& g);

// Reads one graph per line. Blank lines and lines starting with ">>" are
// skipped, except that a leading ">>graph6<<" header is stripped from the
// line it prefixes.
std::vector<Graph> ReadGraph6Stream(std::istream& in);
std::vector<Graph> ReadGraph6File(const std::string& path);

}  // namespace symbreak

#endif  // SYMBREAK_GRAPH6_H_
