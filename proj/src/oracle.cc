// Copyright 2026 The pcst Authors
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

#include "pcst/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace pcst {
namespace {

using Mask = std::uint64_t;

constexpr Mask Bit(int v) { return Mask{1} << v; }

class SubsetEnumerator {
 public:
  SubsetEnumerator(const Instance& instance, const std::function<void(Mask)>& visit)
      : visit_(visit), adjacent_(static_cast<std::size_t>(instance.vertex_count())) {
    for (const Edge& edge : instance.edges()) {
      adjacent_[static_cast<std::size_t>(edge.u)] |= Bit(edge.v);
      adjacent_[static_cast<std::size_t>(edge.v)] |= Bit(edge.u);
    }
  }

  void Run() {
    const int n = static_cast<int>(adjacent_.size());
    for (int root = 0; root < n; ++root) {
      // Subsets whose smallest vertex is `root`.
      const Mask below = Bit(root) - 1;
      Extend(Bit(root), adjacent_[static_cast<std::size_t>(root)] & ~below, below);
    }
  }

 private:
  // Reports `current`, then every connected superset reachable by adding
  // candidates, never touching `forbidden`. After a candidate's branch is
  // explored it joins `forbidden`, so each subset is produced once.
  void Extend(Mask current, Mask candidates, Mask forbidden) {
    visit_(current);
    while (candidates != 0) {
      const int w = std::countr_zero(candidates);
      candidates &= candidates - 1;
      const Mask fresh = adjacent_[static_cast<std::size_t>(w)] & ~(current | candidates | forbidden | Bit(w));
      Extend(current | Bit(w), candidates | fresh, forbidden);
      forbidden |= Bit(w);
    }
  }

  const std::function<void(Mask)>& visit_;
  std::vector<Mask> adjacent_;
};

struct Candidate {
  Rational value;
  Mask vertices = 0;
  std::vector<EdgeId> edges;
};

// Lexicographic order on ascending vertex lists.
bool LexicographicallySmaller(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace

void ForEachConnectedSubset(const Instance& instance, const std::function<void(std::uint64_t)>& visit) {
  if (instance.vertex_count() > 63) throw OracleLimitError("subset enumeration supports n <= 63");
  SubsetEnumerator(instance, visit).Run();
}

ExactResult ExactSolve(const Instance& instance, int limit_n) {
  const int n = instance.vertex_count();
  if (n > limit_n || n > 63) {
    throw OracleLimitError("exact solver limited to n <= " + std::to_string(std::min(limit_n, 63)) +
                           ", instance has n = " + std::to_string(n));
  }
  // Kruskal order: cost, then edge id.
  std::vector<EdgeId> order(static_cast<std::size_t>(instance.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return instance.edge(a).cost < instance.edge(b).cost; });

  std::optional<Candidate> best;
  std::uint64_t explored = 0;
  std::vector<int> root(static_cast<std::size_t>(n));
  std::vector<EdgeId> edges;
  Rational value;

  ForEachConnectedSubset(instance, [&](Mask subset) {
    ++explored;
    value = 0;
    for (int v = 0; v < n; ++v) {
      if ((subset & Bit(v)) == 0) value += instance.prize(v);
    }
    std::iota(root.begin(), root.end(), 0);
    auto find = [&root](int x) {
      while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
      return x;
    };
    edges.clear();
    const int wanted = std::popcount(subset) - 1;
    for (EdgeId e : order) {
      if (static_cast<int>(edges.size()) == wanted) break;
      const Edge& edge = instance.edge(e);
      if ((subset & Bit(edge.u)) == 0 || (subset & Bit(edge.v)) == 0) continue;
      const int a = find(edge.u);
      const int b = find(edge.v);
      if (a == b) continue;
      root[static_cast<std::size_t>(a)] = b;
      edges.push_back(e);
      value += edge.cost;
    }
    if (!best || value < best->value ||
        (value == best->value && LexicographicallySmaller(subset, best->vertices))) {
      best = Candidate{value, subset, edges};
    }
  });

  ExactResult result;
  result.optimum = best->value;
  for (int v = 0; v < n; ++v) {
    if (best->vertices & Bit(v)) result.witness.vertices.push_back(v);
  }
  result.witness.edges = best->edges;
  std::sort(result.witness.edges.begin(), result.witness.edges.end());
  result.explored = explored;
  return result;
}

}  // namespace pcst
