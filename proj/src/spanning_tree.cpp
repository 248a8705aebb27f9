#include "fewbranch/spanning_tree.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace fewbranch {

namespace {

void insert_sorted(std::vector<Vertex>& list, Vertex x) {
  list.insert(std::upper_bound(list.begin(), list.end(), x), x);
}

bool erase_sorted(std::vector<Vertex>& list, Vertex x) {
  auto it = std::lower_bound(list.begin(), list.end(), x);
  if (it == list.end() || *it != x) return false;
  list.erase(it);
  return true;
}

}  // namespace

SpanningTree::SpanningTree(const Graph& host, std::span<const Edge> edges)
    : host_(&host), adj_(static_cast<std::size_t>(host.order())) {
  const int n = host.order();
  if (n > 0 && edges.size() != static_cast<std::size_t>(n - 1))
    throw std::invalid_argument("spanning tree needs exactly n-1 = " + std::to_string(n - 1) +
                                " edges, got " + std::to_string(edges.size()));
  if (n == 0 && !edges.empty()) throw std::invalid_argument("empty graph has no tree edges");
  for (const Edge& e : edges) {
    if (!host.has_edge(e)) throw std::invalid_argument("tree edge " + to_string(e) + " is not a host edge");
    auto& list = adj_[static_cast<std::size_t>(e.u)];
    if (std::binary_search(list.begin(), list.end(), e.v))
      throw std::invalid_argument("duplicate tree edge " + to_string(e));
    insert_sorted(list, e.v);
    insert_sorted(adj_[static_cast<std::size_t>(e.v)], e.u);
  }
  if (!root_at_zero()) throw std::invalid_argument("tree edges do not connect every vertex");
}

SpanningTree::SpanningTree(const Graph& host, std::vector<std::vector<Vertex>> adjacency)
    : host_(&host), adj_(std::move(adjacency)) {}

SpanningTree SpanningTree::from_parents(const Graph& host, std::span<const Vertex> parent) {
  if (parent.size() != static_cast<std::size_t>(host.order()))
    throw std::invalid_argument("parent array length differs from graph order");
  std::vector<Edge> edges;
  int roots = 0;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (parent[v] == kNoVertex) {
      ++roots;
      continue;
    }
    if (!host.contains(parent[v])) throw std::invalid_argument("parent id out of range");
    edges.emplace_back(static_cast<Vertex>(v), parent[v]);
  }
  if (host.order() > 0 && roots != 1) throw std::invalid_argument("parent array must have exactly one root");
  return SpanningTree(host, edges);
}

bool SpanningTree::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= order() || b >= order()) return false;
  const auto& list = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> SpanningTree::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool SpanningTree::root_at_zero() {
  const auto n = adj_.size();
  parent_.assign(n, kNoVertex);
  depth_.assign(n, -1);
  if (n == 0) return true;
  std::queue<Vertex> frontier;
  frontier.push(0);
  depth_[0] = 0;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
      if (depth_[static_cast<std::size_t>(w)] >= 0) continue;
      depth_[static_cast<std::size_t>(w)] = depth_[static_cast<std::size_t>(v)] + 1;
      parent_[static_cast<std::size_t>(w)] = v;
      ++reached;
      frontier.push(w);
    }
  }
  return reached == n;
}

Vertex SpanningTree::lowest_common_ancestor(Vertex u, Vertex v) const {
  while (depth(u) > depth(v)) u = parent(u);
  while (depth(v) > depth(u)) v = parent(v);
  while (u != v) {
    u = parent(u);
    v = parent(v);
  }
  return u;
}

int SpanningTree::distance(Vertex u, Vertex v) const {
  return depth(u) + depth(v) - 2 * depth(lowest_common_ancestor(u, v));
}

std::optional<std::size_t> OrientedPath::index_of(Vertex x) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), x);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<Vertex> OrientedPath::successor(Vertex x) const {
  auto i = index_of(x);
  if (!i || *i + 1 >= vertices_.size()) return std::nullopt;
  return vertices_[*i + 1];
}

std::optional<Vertex> OrientedPath::predecessor(Vertex x) const {
  auto i = index_of(x);
  if (!i || *i == 0) return std::nullopt;
  return vertices_[*i - 1];
}

std::vector<Vertex> OrientedPath::interior() const {
  if (vertices_.size() <= 2) return {};
  return {vertices_.begin() + 1, vertices_.end() - 1};
}

std::vector<Edge> OrientedPath::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) out.emplace_back(vertices_[i], vertices_[i + 1]);
  return out;
}

OrientedPath OrientedPath::reversed() const {
  return OrientedPath(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend()));
}

SpanningTree spanning_tree_dfs(const Graph& g, Vertex root) {
  const int n = g.order();
  if (n == 0) return SpanningTree(g, std::span<const Edge>{});
  if (!g.contains(root)) throw std::invalid_argument("DFS root out of range");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges;
  // (vertex, index of next neighbor to try)
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  seen[static_cast<std::size_t>(root)] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto nb = g.neighbors(v);
    while (next < nb.size() && seen[static_cast<std::size_t>(nb[next])]) ++next;
    if (next == nb.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex w = nb[next++];
    seen[static_cast<std::size_t>(w)] = 1;
    edges.emplace_back(v, w);
    stack.emplace_back(w, 0);
  }
  if (edges.size() != static_cast<std::size_t>(n - 1))
    throw DisconnectedGraphError("graph is disconnected; no spanning tree exists");
  return SpanningTree(g, edges);
}

VertexSet leaves(const SpanningTree& t) {
  VertexSet out;
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) == 1) out.push_back(v);
  return out;
}

VertexSet branch_vertices(const SpanningTree& t) {
  VertexSet out;
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) >= 3) out.push_back(v);
  return out;
}

int leaf_count(const SpanningTree& t) {
  int count = 0;
  for (Vertex v = 0; v < t.order(); ++v) count += t.degree(v) == 1;
  return count;
}

int branch_count(const SpanningTree& t) {
  int count = 0;
  for (Vertex v = 0; v < t.order(); ++v) count += t.degree(v) >= 3;
  return count;
}

int leaf_identity_residual(const SpanningTree& t) {
  if (t.order() < 2) throw std::invalid_argument("leaf identity needs at least two vertices");
  int excess = 0;
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) >= 3) excess += t.degree(v) - 2;
  return leaf_count(t) - 2 - excess;
}

OrientedPath tree_path(const SpanningTree& t, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("tree_path: endpoints must differ");
  if (u < 0 || v < 0 || u >= t.order() || v >= t.order())
    throw std::invalid_argument("tree_path: endpoint out of range");
  std::vector<Vertex> up_from_u;
  std::vector<Vertex> up_from_v;
  Vertex a = u;
  Vertex b = v;
  while (t.depth(a) > t.depth(b)) {
    up_from_u.push_back(a);
    a = t.parent(a);
  }
  while (t.depth(b) > t.depth(a)) {
    up_from_v.push_back(b);
    b = t.parent(b);
  }
  while (a != b) {
    up_from_u.push_back(a);
    up_from_v.push_back(b);
    a = t.parent(a);
    b = t.parent(b);
  }
  up_from_u.push_back(a);
  up_from_u.insert(up_from_u.end(), up_from_v.rbegin(), up_from_v.rend());
  return OrientedPath(std::move(up_from_u));
}

SpanningTree exchange(const SpanningTree& t, const Edge& add, const Edge& remove) {
  if (!t.host().has_edge(add)) throw ExchangeError("added edge " + to_string(add) + " is not a host edge");
  if (t.has_edge(add)) throw ExchangeError("added edge " + to_string(add) + " is already in the tree");
  if (!t.has_edge(remove)) throw ExchangeError("removed edge " + to_string(remove) + " is not a tree edge");
  const auto cycle = tree_path(t, add.u, add.v).edges();
  if (std::find(cycle.begin(), cycle.end(), remove) == cycle.end())
    throw ExchangeError("removed edge " + to_string(remove) + " is not on the cycle closed by " + to_string(add));
  const Edge adds[] = {add};
  const Edge removes[] = {remove};
  return *try_exchange(t, adds, removes);
}

SpanningTree exchange(const SpanningTree& t, std::span<const Edge> adds, std::span<const Edge> removes) {
  auto result = try_exchange(t, adds, removes);
  if (!result) throw ExchangeError("exchange does not yield a spanning tree");
  return *std::move(result);
}

std::optional<SpanningTree> try_exchange(const SpanningTree& t, std::span<const Edge> adds,
                                         std::span<const Edge> removes) {
  if (adds.size() != removes.size()) return std::nullopt;
  auto adjacency = t.adj_;
  for (const Edge& e : removes) {
    if (!erase_sorted(adjacency[static_cast<std::size_t>(e.u)], e.v)) return std::nullopt;
    erase_sorted(adjacency[static_cast<std::size_t>(e.v)], e.u);
  }
  for (const Edge& e : adds) {
    if (e.u == e.v || !t.host().has_edge(e) || t.has_edge(e)) return std::nullopt;
    auto& list = adjacency[static_cast<std::size_t>(e.u)];
    if (std::binary_search(list.begin(), list.end(), e.v)) return std::nullopt;
    insert_sorted(list, e.v);
    insert_sorted(adjacency[static_cast<std::size_t>(e.v)], e.u);
  }
  SpanningTree result(t.host(), std::move(adjacency));
  if (!result.root_at_zero()) return std::nullopt;
  return result;
}

}  // namespace fewbranch
