#include "fewbranch/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace fewbranch {

using boost::multiprecision::cpp_int;

namespace {

// Union-find with undo; union by size, no path compression.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
    components_ = n;
  }

  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    history_.push_back(b);
    --components_;
    return true;
  }

  std::size_t checkpoint() const { return history_.size(); }

  void rollback(std::size_t to) {
    while (history_.size() > to) {
      const int b = history_.back();
      history_.pop_back();
      const int a = parent_[static_cast<std::size_t>(b)];
      size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
      parent_[static_cast<std::size_t>(b)] = b;
      ++components_;
    }
  }

  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
  int components_ = 0;
};

// Shared include/exclude walk over the sorted edge list. Excluding an edge is
// allowed only while the chosen edges plus the undecided ones still connect
// the graph, so every leaf of the walk is a spanning tree.
class TreeWalk {
 public:
  explicit TreeWalk(const Graph& g) : g_(g), edges_(g.edges()), dsu_(g.order()) {}

 protected:
  bool completable(std::size_t from) {
    const auto mark = dsu_.checkpoint();
    for (std::size_t j = from; j < edges_.size() && dsu_.components() > 1; ++j) dsu_.unite(edges_[j].u, edges_[j].v);
    const bool ok = dsu_.components() == 1;
    dsu_.rollback(mark);
    return ok;
  }

  bool complete() const { return static_cast<int>(chosen_.size()) == g_.order() - 1; }

  const Graph& g_;
  std::vector<Edge> edges_;
  RollbackDsu dsu_;
  std::vector<Edge> chosen_;
};

class Enumerator : TreeWalk {
 public:
  Enumerator(const Graph& g, std::int64_t limit, const std::function<void(std::span<const Edge>)>& visitor)
      : TreeWalk(g), limit_(static_cast<std::uint64_t>(limit)), visitor_(visitor) {}

  EnumerationResult run() {
    if (completable(0)) walk(0);
    return result_;
  }

 private:
  void walk(std::size_t i) {
    if (stop_) return;
    if (complete()) {
      if (result_.visited == limit_) {
        result_.truncated = true;
        stop_ = true;
        return;
      }
      ++result_.visited;
      visitor_(chosen_);
      return;
    }
    const Edge e = edges_[i];
    const auto mark = dsu_.checkpoint();
    if (dsu_.unite(e.u, e.v)) {
      chosen_.push_back(e);
      walk(i + 1);
      chosen_.pop_back();
      dsu_.rollback(mark);
    }
    if (!stop_ && completable(i + 1)) walk(i + 1);
  }

  std::uint64_t limit_;
  const std::function<void(std::span<const Edge>)>& visitor_;
  EnumerationResult result_;
  bool stop_ = false;
};

enum class Objective { Branches, Leaves };

int evaluate(Objective objective, std::span<const int> degree) {
  int value = 0;
  for (int d : degree)
    if (objective == Objective::Branches ? d >= 3 : d == 1) ++value;
  return value;
}

int evaluate(Objective objective, const SpanningTree& t) {
  return objective == Objective::Branches ? branch_count(t) : leaf_count(t);
}

class BranchAndBound : TreeWalk {
 public:
  BranchAndBound(const Graph& g, Objective objective, const SpanningTree& incumbent)
      : TreeWalk(g),
        objective_(objective),
        degree_(static_cast<std::size_t>(g.order()), 0),
        avail_(static_cast<std::size_t>(g.order())),
        best_(evaluate(objective, incumbent)),
        best_edges_(incumbent.edges()) {
    for (Vertex v = 0; v < g.order(); ++v) avail_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  void run() { walk(0); }
  int best() const { return best_; }
  const std::vector<Edge>& best_edges() const { return best_edges_; }
  std::uint64_t explored() const { return explored_; }

 private:
  int lower_bound() const {
    int forced = 0;
    int excess = 0;
    int current_branches = 0;
    std::vector<int> caps;
    for (std::size_t v = 0; v < avail_.size(); ++v) {
      if (avail_[v] == 1) ++forced;
      if (degree_[v] >= 3) {
        excess += degree_[v] - 2;
        ++current_branches;
      }
      if (avail_[v] >= 3) caps.push_back(avail_[v] - 2);
    }
    const int leaves_needed = std::max({2, forced, 2 + excess});
    if (objective_ == Objective::Leaves) return leaves_needed;
    // Each branch vertex of final degree d adds d - 2 leaves beyond two.
    std::sort(caps.rbegin(), caps.rend());
    int need = leaves_needed - 2;
    int branches = 0;
    for (int c : caps) {
      if (need <= 0) break;
      need -= c;
      ++branches;
    }
    if (need > 0) return std::numeric_limits<int>::max();
    return std::max(branches, current_branches);
  }

  void walk(std::size_t i) {
    ++explored_;
    if (complete()) {
      const int value = evaluate(objective_, degree_);
      if (value < best_) {
        best_ = value;
        best_edges_ = chosen_;
      }
      return;
    }
    if (lower_bound() >= best_) return;
    const Edge e = edges_[i];
    const auto mark = dsu_.checkpoint();
    if (dsu_.unite(e.u, e.v)) {
      chosen_.push_back(e);
      ++degree_[static_cast<std::size_t>(e.u)];
      ++degree_[static_cast<std::size_t>(e.v)];
      walk(i + 1);
      --degree_[static_cast<std::size_t>(e.u)];
      --degree_[static_cast<std::size_t>(e.v)];
      chosen_.pop_back();
      dsu_.rollback(mark);
    }
    if (completable(i + 1)) {
      --avail_[static_cast<std::size_t>(e.u)];
      --avail_[static_cast<std::size_t>(e.v)];
      walk(i + 1);
      ++avail_[static_cast<std::size_t>(e.u)];
      ++avail_[static_cast<std::size_t>(e.v)];
    }
  }

  Objective objective_;
  std::vector<int> degree_;
  std::vector<int> avail_;
  int best_;
  std::vector<Edge> best_edges_;
  std::uint64_t explored_ = 0;
};

SpanningTree path_tree(const Graph& g, const std::vector<Vertex>& path) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < path.size(); ++i) edges.emplace_back(path[i - 1], path[i]);
  return SpanningTree(g, edges);
}

OracleResult solve_exact(const Graph& g, const OracleOptions& options, Objective objective) {
  if (!is_connected(g)) throw DisconnectedGraphError("oracle requires a connected graph");
  const bool within = g.order() <= options.cap;
  if (!within && !options.force)
    throw OracleCapExceeded("graph order " + std::to_string(g.order()) + " exceeds oracle cap " +
                            std::to_string(options.cap));

  SpanningTree incumbent = spanning_tree_dfs(g);
  auto finish = [&](const SpanningTree& witness, std::uint64_t explored) {
    return OracleResult{evaluate(objective, witness), witness, explored, within};
  };

  OracleMethod method = options.method;
  if (method == OracleMethod::Auto) {
    if (g.order() <= 20)
      if (auto path = hamiltonian_path(g)) return finish(path_tree(g, *path), 1);
    method = count_spanning_trees(g) <= options.enumeration_budget ? OracleMethod::Enumerate
                                                                    : OracleMethod::BranchAndBound;
  }

  if (method == OracleMethod::Enumerate) {
    int best = evaluate(objective, incumbent);
    std::vector<Edge> best_edges = incumbent.edges();
    std::vector<int> degree(static_cast<std::size_t>(g.order()));
    const auto result =
        enumerate_spanning_trees(g, std::numeric_limits<std::int64_t>::max(), [&](std::span<const Edge> edges) {
          std::fill(degree.begin(), degree.end(), 0);
          for (const Edge& e : edges) {
            ++degree[static_cast<std::size_t>(e.u)];
            ++degree[static_cast<std::size_t>(e.v)];
          }
          const int value = evaluate(objective, degree);
          if (value < best) {
            best = value;
            best_edges.assign(edges.begin(), edges.end());
          }
        });
    return finish(SpanningTree(g, best_edges), result.visited);
  }

  BranchAndBound search(g, objective, incumbent);
  search.run();
  return finish(SpanningTree(g, search.best_edges()), search.explored());
}

}  // namespace

cpp_int count_spanning_trees(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 1;
  if (!is_connected(g)) return 0;
  const auto m = static_cast<std::size_t>(n - 1);
  std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    const auto v = static_cast<Vertex>(i + 1);
    a[i][i] = g.degree(v);
    for (Vertex u : g.neighbors(v))
      if (u != 0) a[i][static_cast<std::size_t>(u - 1)] = -1;
  }
  // Bareiss elimination: every intermediate entry stays an exact integer.
  cpp_int previous = 1;
  bool negate = false;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < m && a[r][k] == 0) ++r;
      if (r == m) return 0;
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < m; ++i)
      for (std::size_t j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
    previous = a[k][k];
  }
  cpp_int det = a[m - 1][m - 1];
  return negate ? cpp_int(-det) : det;
}

EnumerationResult enumerate_spanning_trees(const Graph& g, std::int64_t limit,
                                           const std::function<void(std::span<const Edge>)>& visitor) {
  if (limit <= 0) throw std::invalid_argument("enumeration limit must be positive");
  if (g.order() <= 1) {
    visitor({});
    return {1, false};
  }
  return Enumerator(g, limit, visitor).run();
}

std::optional<std::vector<Vertex>> hamiltonian_path(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw std::invalid_argument("hamiltonian_path supports at most 20 vertices");
  if (n == 0) return std::vector<Vertex>{};
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= 1u << u;

  // ends[mask] has bit v when some path covers exactly `mask` and ends at v.
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> ends(static_cast<std::size_t>(full) + 1, 0);
  for (Vertex v = 0; v < n; ++v) ends[1u << v] = 1u << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t e = ends[mask];
    while (e != 0) {
      const int v = __builtin_ctz(e);
      e &= e - 1;
      std::uint32_t next = adj[static_cast<std::size_t>(v)] & ~mask;
      while (next != 0) {
        const int u = __builtin_ctz(next);
        next &= next - 1;
        ends[mask | (1u << u)] |= 1u << u;
      }
    }
  }
  if (ends[full] == 0) return std::nullopt;

  std::vector<Vertex> path;
  std::uint32_t mask = full;
  int v = __builtin_ctz(ends[full]);
  for (;;) {
    path.push_back(v);
    const std::uint32_t rest = mask & ~(1u << v);
    if (rest == 0) break;
    const std::uint32_t candidates = ends[rest] & adj[static_cast<std::size_t>(v)];
    mask = rest;
    v = __builtin_ctz(candidates);
  }
  return path;
}

OracleResult min_branch_vertices_exact(const Graph& g, const OracleOptions& options) {
  return solve_exact(g, options, Objective::Branches);
}

OracleResult min_leaves_exact(const Graph& g, const OracleOptions& options) {
  return solve_exact(g, options, Objective::Leaves);
}

}  // namespace fewbranch
