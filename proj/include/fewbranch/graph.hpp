#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fewbranch {

/// Dense vertex id in [0, n).
using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Undirected edge, stored with u <= v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Raised when an input graph is not connected but the operation requires it.
class DisconnectedGraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges are merged. Throws std::invalid_argument on a self-loop
  /// or an endpoint outside [0, n).
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

/// One traversal from vertex 0 reaches every vertex. The empty graph counts as
/// connected.
bool is_connected(const Graph& g);

/// Sorts and deduplicates in place, returning the canonical set.
VertexSet make_vertex_set(std::vector<Vertex> vertices);

}  // namespace fewbranch
