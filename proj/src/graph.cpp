#include "fewbranch/graph.hpp"

#include <queue>

namespace fewbranch {

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
  adj_.resize(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    if (!contains(e.u) || !contains(e.v))
      throw std::invalid_argument("edge " + to_string(e) + " has an endpoint outside [0, " +
                                  std::to_string(n) + ")");
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::size_t degree_sum = 0;
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    degree_sum += list.size();
  }
  m_ = degree_sum / 2;
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, [&] {
        std::vector<Edge> list;
        list.reserve(edges.size());
        for (auto [a, b] : edges) list.emplace_back(a, b);
        return list;
      }()) {}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

}  // namespace fewbranch
