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

#include "symbreak/coloring_search.h"

#include <algorithm>

#include "symbreak/error.h"

namespace symbreak {
namespace {

struct Tie {
  int element;   // group element index
  int position;  // all positions before this compare equal
};

class Search {
 public:
  Search(const ColoringProblem& problem, int palette, std::uint64_t budget)
      : problem_(problem),
        n_(problem.size),
        palette_(palette),
        budget_(budget),
        colors_(problem.size, 0),
        ties_(problem.size + 1),
        alive_(problem.size + 1) {
    for (const auto& g : problem.group) {
      if (g.size() != n_) {
        throw ContractError("group element acts on the wrong domain");
      }
      if (g.IsIdentity()) continue;
      const int id = static_cast<int>(last_moved_.size());
      int last = 0;
      for (int x = 0; x < n_; ++x) {
        image_.push_back(g(x));
        if (g(x) != x) last = x;
      }
      const Permutation inverse = g.Inverse();
      for (int x = 0; x < n_; ++x) preimage_.push_back(inverse(x));
      last_moved_.push_back(last);
      ties_[0].push_back({id, 0});
      if (problem.distinguishing) alive_[0].push_back(id);
    }
  }

  SearchOutcome Run() {
    SearchOutcome outcome;
    if (n_ == 0) {
      outcome.coloring = std::vector<int>();
      return outcome;
    }
    if (palette_ >= 1 && Dfs(0, 0)) outcome.coloring = colors_;
    outcome.exhausted = !out_of_budget_;
    outcome.nodes = nodes_;
    return outcome;
  }

 private:
  int Image(int g, int x) const {
    return image_[static_cast<std::size_t>(g) * n_ + x];
  }
  int Preimage(int g, int x) const {
    return preimage_[static_cast<std::size_t>(g) * n_ + x];
  }

  // Colours elements k.. given that 0..k-1 are coloured and the largest
  // colour used so far is max_used.
  bool Dfs(int k, int max_used) {
    const int top = std::min(palette_, max_used + 1);
    for (int x = 1; x <= top; ++x) {
      if (budget_ != 0 && nodes_ >= budget_) {
        out_of_budget_ = true;
        return false;
      }
      ++nodes_;
      if (problem_.proper && Clashes(k, x)) continue;
      colors_[k] = x;
      if (AdvanceTies(k) && FilterAlive(k)) {
        if (k + 1 == n_) return true;
        if (Dfs(k + 1, std::max(max_used, x))) return true;
        if (out_of_budget_) return false;
      }
      colors_[k] = 0;
    }
    return false;
  }

  bool Clashes(int k, int x) const {
    for (int j : problem_.conflicts[k]) {
      if (colors_[j] == x) return true;
    }
    return false;
  }

  // Lexicographic-leader test. Returns false when some group element maps
  // the colouring to a strictly smaller one.
  bool AdvanceTies(int k) {
    auto& next = ties_[k + 1];
    next.clear();
    for (Tie tie : ties_[k]) {
      bool keep = true;
      while (tie.position <= k) {
        const int moved = Image(tie.element, tie.position);
        if (moved > k) break;
        const int a = colors_[moved];
        const int b = colors_[tie.position];
        if (a < b) return false;
        if (a > b) {
          keep = false;
          break;
        }
        ++tie.position;
      }
      if (keep) next.push_back(tie);
    }
    return true;
  }

  // Keeps the nontrivial group elements that still preserve the partial
  // colouring. Returns false when one of them moves only coloured elements,
  // since it then preserves every completion.
  bool FilterAlive(int k) {
    if (!problem_.distinguishing) return true;
    auto& next = alive_[k + 1];
    next.clear();
    const int x = colors_[k];
    for (int g : alive_[k]) {
      const int forward = Image(g, k);
      if (forward <= k && colors_[forward] != x) continue;
      const int backward = Preimage(g, k);
      if (backward <= k && colors_[backward] != x) continue;
      if (last_moved_[g] <= k) return false;
      next.push_back(g);
    }
    return true;
  }

  const ColoringProblem& problem_;
  const int n_;
  const int palette_;
  const std::uint64_t budget_;
  std::vector<int> colors_;
  std::vector<int> image_;
  std::vector<int> preimage_;
  std::vector<int> last_moved_;
  std::vector<std::vector<Tie>> ties_;
  std::vector<std::vector<int>> alive_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
};

void GrowClique(const std::vector<std::vector<char>>& adj,
                std::vector<int>& candidates, int current, int& best) {
  if (candidates.empty()) {
    best = std::max(best, current);
    return;
  }
  while (!candidates.empty()) {
    if (current + static_cast<int>(candidates.size()) <= best) return;
    const int v = candidates.back();
    candidates.pop_back();
    std::vector<int> next;
    for (int w : candidates) {
      if (adj[v][w]) next.push_back(w);
    }
    GrowClique(adj, next, current + 1, best);
  }
}

}  // namespace

SearchOutcome FindColoring(const ColoringProblem& problem, int palette,
                           std::uint64_t node_budget) {
  if (problem.proper &&
      static_cast<int>(problem.conflicts.size()) != problem.size) {
    throw ContractError("conflict lists do not match the problem size");
  }
  return Search(problem, palette, node_budget).Run();
}

int ConflictCliqueNumber(const ColoringProblem& problem) {
  const int n = problem.size;
  if (n == 0) return 0;
  if (!problem.proper) return 1;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) {
    for (int w : problem.conflicts[v]) adj[v][w] = adj[w][v] = 1;
  }
  std::vector<int> candidates(n);
  for (int v = 0; v < n; ++v) candidates[v] = v;
  int best = 1;
  GrowClique(adj, candidates, 0, best);
  return best;
}

}  // namespace symbreak
