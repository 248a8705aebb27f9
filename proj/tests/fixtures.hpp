#pragma once

// Hand-built trees for each shape. Each graph is the tree itself, so its
// only spanning tree is the shape under test.

#include <vector>

#include "fewbranch/graph.hpp"

namespace fixtures {

using fewbranch::Edge;
using fewbranch::Graph;

/// Three degree-3 branch vertices on a line: s=0, w=1, t=2; five leaves.
inline std::vector<Edge> s1_edges() { return {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}, {1, 7}}; }

/// s=0 of degree 4, w=1, t=2; six leaves.
inline std::vector<Edge> s2_edges() { return {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {2, 8}}; }

/// Degree-4 vertex 1 between two degree-3 ends: the collapsed four-branch line.
inline std::vector<Edge> s3_collapsed_edges() {
  return {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}, {1, 7}, {1, 8}};
}

/// Four degree-3 branch vertices on the line 0-1-2-3.
inline std::vector<Edge> s3_edges() {
  return {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {3, 6}, {3, 7}, {1, 8}, {2, 9}};
}

/// Median 0 joined to branch vertices 1, 2, 3, each with two leaves.
inline std::vector<Edge> s4_edges() {
  return {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}};
}

/// Three degree-5/4/5 branch vertices; eight leaves.
inline std::vector<Edge> other_edges() {
  return {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}, {1, 7}, {2, 8}, {2, 9}, {2, 10}};
}

inline Graph with_extra(int n, std::vector<Edge> edges, std::initializer_list<Edge> extra) {
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(n, edges);
}

}  // namespace fixtures
