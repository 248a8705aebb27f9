#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fewbranch/graph.hpp"

namespace fewbranch {

/// Raised when an exchange would not produce a spanning tree.
class ExchangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Spanning tree of a host graph. The host must outlive the tree.
///
/// Stores per-vertex tree adjacency plus a parent/depth array rooted at
/// vertex 0 for path queries. The root is an internal detail; equality and all
/// derived quantities depend only on the edge set.
class SpanningTree {
 public:
  /// Throws std::invalid_argument unless `edges` are n-1 distinct host edges
  /// forming a connected subgraph.
  SpanningTree(const Graph& host, std::span<const Edge> edges);

  /// parent[v] = kNoVertex (-1) marks the root.
  static SpanningTree from_parents(const Graph& host, std::span<const Vertex> parent);

  const Graph& host() const { return *host_; }
  int order() const { return static_cast<int>(adj_.size()); }

  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  /// Sorted edge list.
  std::vector<Edge> edges() const;

  /// Parent toward the internal root (vertex 0), or kNoVertex at the root.
  Vertex parent(Vertex v) const { return parent_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> parents() const { return parent_; }
  int depth(Vertex v) const { return depth_[static_cast<std::size_t>(v)]; }

  /// Number of tree edges between u and v.
  int distance(Vertex u, Vertex v) const;

  friend bool operator==(const SpanningTree& a, const SpanningTree& b) { return a.adj_ == b.adj_; }

 private:
  SpanningTree(const Graph& host, std::vector<std::vector<Vertex>> adjacency);
  friend std::optional<SpanningTree> try_exchange(const SpanningTree&, std::span<const Edge>,
                                                  std::span<const Edge>);

  Vertex lowest_common_ancestor(Vertex u, Vertex v) const;
  /// Recomputes parent/depth; returns false if some vertex is unreachable.
  bool root_at_zero();

  const Graph* host_ = nullptr;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
};

/// P_T[u, v] oriented from u to v.
class OrientedPath {
 public:
  explicit OrientedPath(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  std::optional<std::size_t> index_of(Vertex x) const;
  bool contains(Vertex x) const { return index_of(x).has_value(); }

  /// x+ and x- relative to the orientation; nullopt at the ends or off-path.
  std::optional<Vertex> successor(Vertex x) const;
  std::optional<Vertex> predecessor(Vertex x) const;

  /// Vertices strictly between the endpoints.
  std::vector<Vertex> interior() const;
  std::vector<Edge> edges() const;
  OrientedPath reversed() const;

  friend bool operator==(const OrientedPath&, const OrientedPath&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// DFS tree exploring neighbors in increasing id. Throws
/// DisconnectedGraphError when g is disconnected.
SpanningTree spanning_tree_dfs(const Graph& g, Vertex root = 0);

/// {v : deg_T(v) = 1}
VertexSet leaves(const SpanningTree& t);
/// {v : deg_T(v) >= 3}
VertexSet branch_vertices(const SpanningTree& t);
int leaf_count(const SpanningTree& t);
int branch_count(const SpanningTree& t);

/// |L(T)| - 2 - sum over branch vertices of (deg_T(v) - 2). Zero for every
/// tree with at least two vertices. Throws std::invalid_argument when n < 2.
int leaf_identity_residual(const SpanningTree& t);

/// Throws std::invalid_argument when u == v.
OrientedPath tree_path(const SpanningTree& t, Vertex u, Vertex v);

/// T + add - remove. Throws ExchangeError unless add is a non-tree host edge
/// and remove lies on the cycle that add closes.
SpanningTree exchange(const SpanningTree& t, const Edge& add, const Edge& remove);

/// T + adds - removes, validated only on the final edge set. Throws
/// ExchangeError when the result is not a spanning tree.
SpanningTree exchange(const SpanningTree& t, std::span<const Edge> adds, std::span<const Edge> removes);

/// Non-throwing form of the multi-edge exchange.
std::optional<SpanningTree> try_exchange(const SpanningTree& t, std::span<const Edge> adds,
                                         std::span<const Edge> removes);

}  // namespace fewbranch
