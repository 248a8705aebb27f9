#include "fewbranch/moves.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace fewbranch {

std::string_view rule_id(Rule rule) {
  switch (rule) {
    case Rule::LeafMerge: return "R-LEAF-MERGE";
    case Rule::AttachSlide: return "R-ATTACH-SLIDE";
    case Rule::EndpointHop: return "R-ENDPOINT-HOP";
    case Rule::ClawForced: return "R-CLAW-FORCED";
    case Rule::TripleSplice: return "R-TRIPLE-SPLICE";
    case Rule::GenericSwap: return "R-GENERIC-SWAP";
  }
  return "R-UNKNOWN";
}

namespace {

constexpr std::string_view kLeafMerge = "T+u_iu_j-v_iv_i^-";
constexpr std::string_view kAttachSlide = "T+xu_j-v_jv_j^-";
constexpr std::string_view kHopSingle = "T+v_is^- - sv_i";
constexpr std::string_view kHopDouble = "T+yv_i+yv_j-sv_i-sv_j";
constexpr std::string_view kClawForced = "T+xu+v_1v_2-sv_1-sv_2";
constexpr std::string_view kSpliceTwo = "T+u_jx+u_kx^- - xx^- - sv_i";
constexpr std::string_view kSpliceChord = "T+x^-y^-+u_iy-yy^- - e";
constexpr std::string_view kSpliceThree = "T+u_3y+u_7x^-+u_7x-xx^- - yy^- - ww^+";
constexpr std::string_view kSpliceForced = "T+u_jx+u_kx^-+v_1v_2-xx^- - sv_1-sv_2";
constexpr std::string_view kGeneric = "T+e-f";

struct Context {
  Context(const Graph& graph, const SpanningTree& tree, const ShapeConfig& config)
      : g(graph), t(tree), cfg(config) {
    const auto n = static_cast<std::size_t>(t.order());
    is_branch.assign(n, 0);
    is_leaf.assign(n, 0);
    is_special.assign(n, 0);
    for (Vertex b : cfg.branch_vertices) is_branch[static_cast<std::size_t>(b)] = 1;
    for (Vertex l : cfg.leaves) is_leaf[static_cast<std::size_t>(l)] = 1;
    special = cfg.shape == Shape::Other ? cfg.leaves : cfg.special_set;
    for (Vertex v : special) is_special[static_cast<std::size_t>(v)] = 1;
    for (const Edge& e : t.edges())
      if (is_branch[static_cast<std::size_t>(e.u)] || is_branch[static_cast<std::size_t>(e.v)])
        branch_edges.push_back(e);
  }

  bool branch(Vertex v) const { return is_branch[static_cast<std::size_t>(v)] != 0; }
  bool leaf(Vertex v) const { return is_leaf[static_cast<std::size_t>(v)] != 0; }
  bool in_special(Vertex v) const { return is_special[static_cast<std::size_t>(v)] != 0; }
  /// Host edge outside the tree.
  bool joinable(Vertex a, Vertex b) const { return a != b && g.has_edge(a, b) && !t.has_edge(a, b); }

  /// Edges of the cycle closed by ab that touch a branch vertex.
  std::vector<Edge> cycle_branch_edges(Vertex a, Vertex b) const {
    std::vector<Edge> out;
    for (const Edge& e : tree_path(t, a, b).edges())
      if (branch(e.u) || branch(e.v)) out.push_back(e);
    return out;
  }

  const Graph& g;
  const SpanningTree& t;
  const ShapeConfig& cfg;
  std::vector<char> is_branch, is_leaf, is_special;
  std::vector<Vertex> special;
  std::vector<Edge> branch_edges;
};

class Collector {
 public:
  explicit Collector(Rule rule) : rule_(rule) {}

  void add(std::string_view pattern, std::vector<Edge> adds, std::vector<Edge> removes) {
    std::sort(adds.begin(), adds.end());
    std::sort(removes.begin(), removes.end());
    if (std::adjacent_find(adds.begin(), adds.end()) != adds.end()) return;
    if (std::adjacent_find(removes.begin(), removes.end()) != removes.end()) return;
    std::vector<Vertex> involved;
    for (const auto* list : {&adds, &removes})
      for (const Edge& e : *list) {
        involved.push_back(e.u);
        involved.push_back(e.v);
      }
    entries_.push_back({make_vertex_set(std::move(involved)),
                        ExchangeMove{rule_, std::move(adds), std::move(removes), pattern}});
  }

  std::vector<ExchangeMove> take_sorted() {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
      return std::tie(a.key, a.move.adds, a.move.removes) < std::tie(b.key, b.move.adds, b.move.removes);
    });
    std::vector<ExchangeMove> out;
    for (auto& e : entries_)
      if (out.empty() || !(out.back() == e.move)) out.push_back(std::move(e.move));
    entries_.clear();
    return out;
  }

 private:
  struct Entry {
    std::vector<Vertex> key;
    ExchangeMove move;
  };
  Rule rule_;
  std::vector<Entry> entries_;
};

void leaf_merge(const Context& c, Collector& out) {
  for (Vertex a : c.cfg.leaves)
    for (Vertex b : c.g.neighbors(a)) {
      if (!c.in_special(b) || !c.joinable(a, b)) continue;
      if (c.leaf(b) && b < a) continue;
      for (const Edge& e : c.cycle_branch_edges(a, b)) out.add(kLeafMerge, {Edge(a, b)}, {e});
    }
}

void attach_slide(const Context& c, Collector& out) {
  for (Vertex a : c.cfg.leaves)
    for (Vertex x : c.g.neighbors(a)) {
      if (c.in_special(x) || !c.joinable(a, x)) continue;
      for (const Edge& e : c.cycle_branch_edges(a, x)) out.add(kAttachSlide, {Edge(a, x)}, {e});
    }
}

void endpoint_hop(const Context& c, Collector& out) {
  for (Vertex b : c.cfg.branch_vertices) {
    auto hubs = c.t.neighbors(b);
    for (Vertex v : hubs)
      for (Vertex y : c.g.neighbors(v))
        if (y != b && c.joinable(v, y)) out.add(kHopSingle, {Edge(v, y)}, {Edge(b, v)});
    for (std::size_t i = 0; i < hubs.size(); ++i)
      for (std::size_t j = i + 1; j < hubs.size(); ++j)
        for (Vertex y : c.g.neighbors(hubs[i]))
          if (y != b && c.joinable(hubs[i], y) && c.joinable(hubs[j], y))
            out.add(kHopDouble, {Edge(hubs[i], y), Edge(hubs[j], y)}, {Edge(b, hubs[i]), Edge(b, hubs[j])});
  }
}

// Calls fn(h, v1, v2) for each branch vertex h with tree-neighbors v1 < v2
// that are adjacent in G (the edge a non-claw at h forces).
template <typename Fn>
void for_each_forced_pair(const Context& c, Fn&& fn) {
  for (Vertex h : c.cfg.branch_vertices) {
    auto nb = c.t.neighbors(h);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (c.g.has_edge(nb[i], nb[j])) fn(h, nb[i], nb[j]);
  }
}

void claw_forced(const Context& c, Collector& out) {
  for_each_forced_pair(c, [&](Vertex h, Vertex v1, Vertex v2) {
    for (Vertex a : c.special)
      for (Vertex x : c.g.neighbors(a)) {
        if (!c.joinable(a, x) || Edge(a, x) == Edge(v1, v2)) continue;
        out.add(kClawForced, {Edge(v1, v2), Edge(a, x)}, {Edge(h, v1), Edge(h, v2)});
      }
  });
}

void triple_splice(const Context& c, Collector& out) {
  // Two special vertices grab both ends of a tree edge x x', which is cut.
  for (Vertex a : c.special)
    for (Vertex x : c.g.neighbors(a)) {
      if (!c.joinable(a, x)) continue;
      for (Vertex xp : c.t.neighbors(x))
        for (Vertex b : c.special) {
          if (b == a || !c.joinable(b, xp)) continue;
          for (const Edge& e : c.branch_edges)
            out.add(kSpliceTwo, {Edge(a, x), Edge(b, xp)}, {Edge(x, xp), e});
          for_each_forced_pair(c, [&](Vertex h, Vertex v1, Vertex v2) {
            out.add(kSpliceForced, {Edge(a, x), Edge(b, xp), Edge(v1, v2)}, {Edge(x, xp), Edge(h, v1), Edge(h, v2)});
          });
        }
    }

  // A special vertex grabs y; the detached neighbor y' re-hangs on q.
  for (Vertex a : c.special)
    for (Vertex y : c.g.neighbors(a)) {
      if (!c.joinable(a, y)) continue;
      for (Vertex yp : c.t.neighbors(y))
        for (Vertex q : c.g.neighbors(yp)) {
          if (q == y || !c.joinable(yp, q) || Edge(yp, q) == Edge(a, y)) continue;
          std::vector<Edge> cuts = c.branch_edges;
          for (Vertex r : c.t.neighbors(q)) cuts.emplace_back(q, r);
          for (const Edge& e : cuts)
            if (e != Edge(y, yp)) out.add(kSpliceChord, {Edge(a, y), Edge(yp, q)}, {Edge(y, yp), e});
        }
    }

  // b is adjacent to both ends of x x'; a grabs y, cutting y y'.
  for (Vertex b : c.special)
    for (Vertex x : c.g.neighbors(b)) {
      if (!c.joinable(b, x)) continue;
      for (Vertex xp : c.t.neighbors(x)) {
        if (!c.joinable(b, xp)) continue;
        for (Vertex a : c.special) {
          if (a == b) continue;
          for (Vertex y : c.g.neighbors(a)) {
            if (!c.joinable(a, y)) continue;
            for (Vertex yp : c.t.neighbors(y)) {
              if (Edge(y, yp) == Edge(x, xp)) continue;
              for (const Edge& e : c.branch_edges)
                out.add(kSpliceThree, {Edge(a, y), Edge(b, xp), Edge(b, x)}, {Edge(x, xp), Edge(y, yp), e});
            }
          }
        }
      }
    }
}

void generic_swap(const Context& c, Collector& out) {
  for (const Edge& add : c.g.edges()) {
    if (c.t.has_edge(add)) continue;
    for (const Edge& e : tree_path(c.t, add.u, add.v).edges()) out.add(kGeneric, {add}, {e});
  }
}

using Generator = void (*)(const Context&, Collector&);

std::vector<std::pair<Rule, Generator>> families_for(Shape shape) {
  switch (shape) {
    case Shape::AtMostTwoBranch:
      return {};
    case Shape::Other:
      return {{Rule::LeafMerge, leaf_merge},
              {Rule::AttachSlide, attach_slide},
              {Rule::EndpointHop, endpoint_hop},
              {Rule::ClawForced, claw_forced},
              {Rule::GenericSwap, generic_swap}};
    default:
      return {{Rule::LeafMerge, leaf_merge},
              {Rule::AttachSlide, attach_slide},
              {Rule::EndpointHop, endpoint_hop},
              {Rule::ClawForced, claw_forced},
              {Rule::TripleSplice, triple_splice}};
  }
}

// Visits improving moves in catalog order until `fn` returns false.
template <typename Fn>
void scan_improving(const Graph& g, const ShapeConfig& cfg, const SpanningTree& t, Fn&& fn) {
  const Context ctx(g, t, cfg);
  const Potential before = potential_of(cfg, t);
  std::set<std::pair<std::vector<Edge>, std::vector<Edge>>> seen;
  for (auto [rule, generate] : families_for(cfg.shape)) {
    Collector collector(rule);
    generate(ctx, collector);
    for (ExchangeMove& move : collector.take_sorted()) {
      if (!seen.emplace(move.adds, move.removes).second) continue;
      auto result = try_exchange(t, move.adds, move.removes);
      if (!result) continue;
      const Potential after = potential(g, *result);
      if (!(after < before)) continue;
      if (!fn(ScoredMove{std::move(move), *std::move(result), before, after})) return;
    }
  }
}

}  // namespace

std::vector<ExchangeMove> catalog_moves(const Graph& g, const ShapeConfig& cfg, const SpanningTree& t) {
  std::vector<ExchangeMove> out;
  scan_improving(g, cfg, t, [&](ScoredMove&& m) {
    out.push_back(std::move(m.move));
    return true;
  });
  return out;
}

std::optional<ScoredMove> first_improving_move(const Graph& g, const ShapeConfig& cfg, const SpanningTree& t) {
  std::optional<ScoredMove> found;
  scan_improving(g, cfg, t, [&](ScoredMove&& m) {
    found.emplace(std::move(m));
    return false;
  });
  return found;
}

}  // namespace fewbranch
