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

#include "symbreak/graph6.h"

#include <fstream>

#include "symbreak/error.h"

namespace symbreak {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph ParseGraph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw FormatError("empty graph6 line", 0);
  const int first = static_cast<unsigned char>(line[0]);
  if (first == 126) {
    throw FormatError("long-form graph6 (n > 62) is not supported", 0);
  }
  if (first < kBias || first > kBias + kMaxGraph6Order) {
    throw FormatError("invalid order byte", 0);
  }
  const int n = first - kBias;
  if (n == 0) throw FormatError("graph6 order 0 is not supported", 0);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (line.size() != expected) {
    throw FormatError("expected " + std::to_string(expected) +
                          " bytes for n=" + std::to_string(n) + ", got " +
                          std::to_string(line.size()),
                      std::min(line.size(), expected));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const std::size_t offset = 1 + bit / 6;
      const int byte = static_cast<unsigned char>(line[offset]);
      if (byte < kBias || byte > kBias + 63) {
        throw FormatError("byte out of range", offset);
      }
      if ((byte - kBias) & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero; also validates trailing bytes' range.
  for (std::size_t offset = 1; offset < line.size(); ++offset) {
    const int byte = static_cast<unsigned char>(line[offset]);
    if (byte < kBias || byte > kBias + 63) {
      throw FormatError("byte out of range", offset);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(line.back()) - kBias;
    const int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) {
      throw FormatError("nonzero padding bits", line.size() - 1);
    }
  }
  return Graph::FromEdgeList(n, edges);
}

std::string ToGraph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw FormatError("order " + std::to_string(n) +
                          " exceeds the graph6 short form",
                      0);
  }
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.HasEdge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

std::vector<Graph> ReadGraph6Stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    if (view.starts_with(kHeader)) {
      view.remove_prefix(kHeader.size());
    } else if (view.starts_with(">>")) {
      continue;
    }
    if (view.empty()) continue;
    graphs.push_back(ParseGraph6(view));
  }
  return graphs;
}

std::vector<Graph> ReadGraph6File(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return ReadGraph6Stream(in);
}

}  // namespace symbreak
