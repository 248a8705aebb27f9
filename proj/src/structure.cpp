#include "fewbranch/structure.hpp"

#include <limits>

namespace fewbranch {

long DegreeSumBound::value() const {
  if (!value_) throw std::logic_error("degree-sum bound is unbounded");
  return *value_;
}

std::string DegreeSumBound::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("unbounded");
}

std::optional<ClawWitness> find_claw(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    auto nb = g.neighbors(c);
    const std::size_t d = nb.size();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (std::size_t l = j + 1; l < d; ++l)
          if (!g.has_edge(nb[i], nb[l]) && !g.has_edge(nb[j], nb[l]))
            return ClawWitness{c, {nb[i], nb[j], nb[l]}};
      }
  }
  return std::nullopt;
}

VertexSet neighborhood(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);
  for (Vertex y : set)
    for (Vertex x : g.neighbors(y)) mark[static_cast<std::size_t>(x)] = 1;
  VertexSet out;
  for (Vertex x = 0; x < g.order(); ++x)
    if (mark[static_cast<std::size_t>(x)]) out.push_back(x);
  return out;
}

VertexSet open_neighborhood(const Graph& g, std::span<const Vertex> set) {
  VertexSet inside = make_vertex_set({set.begin(), set.end()});
  VertexSet out;
  for (Vertex x : neighborhood(g, set))
    if (!std::binary_search(inside.begin(), inside.end(), x)) out.push_back(x);
  return out;
}

VertexSet neighborhood_exact_count(const Graph& g, std::span<const Vertex> set, int k) {
  if (k < 0) throw std::invalid_argument("neighborhood_exact_count: k must be nonnegative");
  VertexSet inside = make_vertex_set({set.begin(), set.end()});
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (Vertex y : inside)
    for (Vertex x : g.neighbors(y)) ++hits[static_cast<std::size_t>(x)];
  VertexSet out;
  for (Vertex x = 0; x < g.order(); ++x)
    if (hits[static_cast<std::size_t>(x)] == k) out.push_back(x);
  return out;
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (g.has_edge(set[i], set[j])) return false;
  return true;
}

long degree_sum(const Graph& g, std::span<const Vertex> set) {
  long total = 0;
  for (Vertex v : set) total += g.degree(v);
  return total;
}

namespace {

// Extends independent sets in increasing vertex id. `candidates` holds the
// vertices above the last pick that are nonadjacent to every pick so far.
class SigmaSearch {
 public:
  SigmaSearch(const Graph& g, int k) : g_(g), k_(k) {}

  DegreeSumBound run() {
    std::vector<Vertex> all(static_cast<std::size_t>(g_.order()));
    for (Vertex v = 0; v < g_.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    extend(all, 0, 0);
    if (best_ == kNone) return DegreeSumBound::unbounded();
    return DegreeSumBound::finite(best_);
  }

 private:
  static constexpr long kNone = std::numeric_limits<long>::max();

  void extend(const std::vector<Vertex>& candidates, int chosen, long sum) {
    if (chosen == k_) {
      best_ = std::min(best_, sum);
      return;
    }
    const auto need = static_cast<std::size_t>(k_ - chosen);
    if (candidates.size() < need) return;
    int min_degree = std::numeric_limits<int>::max();
    for (Vertex c : candidates) min_degree = std::min(min_degree, g_.degree(c));
    if (best_ != kNone && sum + static_cast<long>(need) * min_degree >= best_) return;

    std::vector<Vertex> next;
    for (std::size_t i = 0; i + need <= candidates.size(); ++i) {
      const Vertex v = candidates[i];
      next.clear();
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (!g_.has_edge(v, candidates[j])) next.push_back(candidates[j]);
      extend(next, chosen + 1, sum + g_.degree(v));
    }
  }

  const Graph& g_;
  int k_;
  long best_ = kNone;
};

}  // namespace

DegreeSumBound sigma_k(const Graph& g, int k) {
  if (k <= 0) throw std::invalid_argument("sigma_k: k must be positive");
  if (k > g.order()) return DegreeSumBound::unbounded();
  return SigmaSearch(g, k).run();
}

}  // namespace fewbranch
