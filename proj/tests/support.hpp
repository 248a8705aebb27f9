#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the Graph type.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "fewbranch/graph.hpp"
#include "fewbranch/rng.hpp"
#include "fewbranch/spanning_tree.hpp"

namespace testing_support {

using fewbranch::Edge;
using fewbranch::Graph;
using fewbranch::Vertex;

/// Minimum degree sum over all independent k-subsets, by bitmask scan.
inline std::optional<long> naive_sigma(const Graph& g, int k) {
  const int n = g.order();
  std::optional<long> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    bool independent = true;
    long sum = 0;
    for (int u = 0; u < n && independent; ++u) {
      if (!(mask >> u & 1)) continue;
      sum += g.degree(u);
      for (int v = u + 1; v < n; ++v)
        if ((mask >> v & 1) && g.has_edge(u, v)) independent = false;
    }
    if (independent && (!best || sum < *best)) best = sum;
  }
  return best;
}

/// Some vertex with three pairwise nonadjacent neighbors.
inline bool naive_has_claw(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.has_edge(nb[i], nb[j]) && !g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) return true;
  }
  return false;
}

struct TreeStats {
  std::uint64_t count = 0;
  int min_branch = 1 << 30;
  int min_leaves = 1 << 30;
};

/// Scans every (n-1)-subset of edges and keeps the acyclic ones.
inline TreeStats naive_tree_stats(const Graph& g) {
  const int n = g.order();
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  TreeStats stats;
  if (n <= 1) return {1, 0, 0};
  std::vector<int> pick(static_cast<std::size_t>(n - 1));
  if (m < n - 1) return stats;
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    bool acyclic = true;
    for (int i : pick) {
      const Edge& e = edges[static_cast<std::size_t>(i)];
      const int a = find(e.u), b = find(e.v);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[static_cast<std::size_t>(a)] = b;
      ++degree[static_cast<std::size_t>(e.u)];
      ++degree[static_cast<std::size_t>(e.v)];
    }
    if (acyclic) {
      ++stats.count;
      int branch = 0, leaves = 0;
      for (int d : degree) {
        branch += d >= 3;
        leaves += d == 1;
      }
      stats.min_branch = std::min(stats.min_branch, branch);
      stats.min_leaves = std::min(stats.min_leaves, leaves);
    }
    int i = n - 2;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - (n - 1) + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n - 1; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return stats;
}

/// Kruskal over a shuffled edge list.
inline fewbranch::SpanningTree random_spanning_tree(const Graph& g, fewbranch::Rng& rng) {
  auto edges = g.edges();
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng.below(i)]);
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<Edge> chosen;
  for (const Edge& e : edges) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      chosen.push_back(e);
    }
  }
  return fewbranch::SpanningTree(g, chosen);
}

/// Checks a tree edge set independently: n-1 host edges, acyclic.
inline bool is_spanning_tree(const Graph& g, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) != std::max(0, g.order() - 1)) return false;
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const Edge& e : edges) {
    if (!g.has_edge(e)) return false;
    const int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

}  // namespace testing_support
