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

#include "symbreak/named_graphs.h"

#include <charconv>
#include <vector>

#include "symbreak/error.h"

namespace symbreak {
namespace {

int ParsePositive(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw ContractError("cannot parse graph name '" + std::string(whole) +
                        "'");
  }
  return value;
}

}  // namespace

std::string NamedGraphSpec::Name() const {
  switch (family) {
    case Family::kCycle:
      return "C" + std::to_string(first);
    case Family::kComplete:
      return "K" + std::to_string(first);
    case Family::kCompleteBipartite:
      return "K" + std::to_string(first) + "," + std::to_string(second);
    case Family::kQ:
      return "Q";
    case Family::kLQ:
      return "LQ";
    case Family::kPath:
      return "P" + std::to_string(first);
  }
  return "?";
}

Graph NamedGraph(const NamedGraphSpec& spec) {
  std::vector<Edge> edges;
  switch (spec.family) {
    case NamedGraphSpec::Family::kCycle: {
      const int n = spec.first;
      if (n < 3) throw ContractError("C_n needs n >= 3");
      for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      return Graph::FromEdgeList(n, edges);
    }
    case NamedGraphSpec::Family::kComplete: {
      const int n = spec.first;
      if (n < 1) throw ContractError("K_n needs n >= 1");
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
      }
      return Graph::FromEdgeList(n, edges);
    }
    case NamedGraphSpec::Family::kCompleteBipartite: {
      const int m = spec.first;
      const int n = spec.second;
      if (m < 1 || n < 1) throw ContractError("K_{m,n} needs m, n >= 1");
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
      }
      return Graph::FromEdgeList(m + n, edges);
    }
    case NamedGraphSpec::Family::kQ:
      edges = {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
      return Graph::FromEdgeList(4, edges);
    case NamedGraphSpec::Family::kLQ:
      edges = {{0, 1}, {0, 3}, {1, 3}, {1, 2}};
      return Graph::FromEdgeList(4, edges);
    case NamedGraphSpec::Family::kPath: {
      const int n = spec.first;
      if (n < 1) throw ContractError("P_n needs n >= 1");
      for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      return Graph::FromEdgeList(n, edges);
    }
  }
  throw ContractError("unknown graph family");
}

NamedGraphSpec ParseNamedGraphSpec(std::string_view name) {
  if (name == "Q") return NamedGraphSpec::Q();
  if (name == "LQ" || name == "L(Q)") return NamedGraphSpec::LQ();
  if (name.size() < 2) {
    throw ContractError("cannot parse graph name '" + std::string(name) + "'");
  }
  const char head = name[0];
  std::string_view rest = name.substr(1);
  if (rest.starts_with("_")) rest.remove_prefix(1);
  if (rest.starts_with("{") && rest.ends_with("}")) {
    rest = rest.substr(1, rest.size() - 2);
  }
  switch (head) {
    case 'C':
      return NamedGraphSpec::Cycle(ParsePositive(rest, name));
    case 'P':
      return NamedGraphSpec::Path(ParsePositive(rest, name));
    case 'K': {
      const auto comma = rest.find(',');
      if (comma == std::string_view::npos) {
        return NamedGraphSpec::Complete(ParsePositive(rest, name));
      }
      return NamedGraphSpec::CompleteBipartite(
          ParsePositive(rest.substr(0, comma), name),
          ParsePositive(rest.substr(comma + 1), name));
    }
    default:
      throw ContractError("cannot parse graph name '" + std::string(name) +
                          "'");
  }
}

}  // namespace symbreak
