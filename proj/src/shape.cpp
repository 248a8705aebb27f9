#include "fewbranch/shape.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <tuple>

namespace fewbranch {

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::AtMostTwoBranch: return "at-most-two-branch";
    case Shape::S1: return "S1";
    case Shape::S2: return "S2";
    case Shape::S3: return "S3";
    case Shape::S4: return "S4";
    case Shape::Other: return "other";
  }
  return "other";
}

VertexSet ShapeConfig::hubs() const {
  std::vector<Vertex> out;
  for (Vertex v : {s, t, w, z})
    if (v != kNoVertex) out.push_back(v);
  return make_vertex_set(std::move(out));
}

std::vector<Vertex> ShapeConfig::ordered_leaves() const {
  std::vector<Vertex> out;
  for (const auto& b : branch_sets) out.push_back(b.leaf);
  return out;
}

namespace {

struct Roles {
  Shape shape = Shape::Other;
  bool collapsed = false;
  Vertex s = kNoVertex, t = kNoVertex, w = kNoVertex, z = kNoVertex;
};

// Lexicographic key used to pick among symmetric labelings.
using RoleKey = std::tuple<int, int, int, Vertex, Vertex, Vertex, Vertex>;

RoleKey role_key(const SpanningTree& tree, const Roles& r) {
  const int r1 = tree.distance(r.s, r.t);
  const int r2 = r.w != kNoVertex ? tree.distance(r.s, r.w) : 0;
  const int r3 = r.z != kNoVertex ? tree.distance(r.s, r.z) : 0;
  return {r1, r2, r3, r.s, r.t, r.w, r.z};
}

bool between(const SpanningTree& tree, Vertex a, Vertex m, Vertex b) {
  return tree.distance(a, m) + tree.distance(m, b) == tree.distance(a, b);
}

std::optional<Roles> pick_best(const SpanningTree& tree, const std::vector<Roles>& options) {
  std::optional<Roles> best;
  RoleKey best_key{};
  for (const Roles& r : options) {
    RoleKey key = role_key(tree, r);
    if (!best || key < best_key) {
      best = r;
      best_key = key;
    }
  }
  return best;
}

std::optional<Roles> assign_three(const SpanningTree& tree, const VertexSet& branch, int leaf_total) {
  // With only three branch vertices one of them always lies between the others.
  Vertex mid = kNoVertex;
  std::array<Vertex, 2> ends{};
  for (int i = 0; i < 3; ++i) {
    const Vertex a = branch[static_cast<std::size_t>((i + 1) % 3)];
    const Vertex b = branch[static_cast<std::size_t>((i + 2) % 3)];
    if (between(tree, a, branch[static_cast<std::size_t>(i)], b)) {
      mid = branch[static_cast<std::size_t>(i)];
      ends = {std::min(a, b), std::max(a, b)};
      break;
    }
  }
  if (mid == kNoVertex) return std::nullopt;
  const int dm = tree.degree(mid);
  const int d0 = tree.degree(ends[0]);
  const int d1 = tree.degree(ends[1]);

  if (leaf_total == 5 && dm == 3 && d0 == 3 && d1 == 3) {
    return pick_best(tree, {{Shape::S1, false, ends[0], ends[1], mid, kNoVertex},
                            {Shape::S1, false, ends[1], ends[0], mid, kNoVertex}});
  }
  if (leaf_total != 6) return std::nullopt;
  if (dm == 4 && d0 == 3 && d1 == 3) {
    return pick_best(tree, {{Shape::S3, true, ends[0], ends[1], mid, mid},
                            {Shape::S3, true, ends[1], ends[0], mid, mid}});
  }
  if (dm == 3 && d0 + d1 == 7 && std::max(d0, d1) == 4) {
    const Vertex s = d0 == 4 ? ends[0] : ends[1];
    const Vertex t = d0 == 4 ? ends[1] : ends[0];
    return Roles{Shape::S2, false, s, t, mid, kNoVertex};
  }
  return std::nullopt;
}

std::optional<Roles> assign_four(const SpanningTree& tree, const VertexSet& branch) {
  // Collinear: two endpoints with the other two between them.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      std::vector<Vertex> inner;
      for (std::size_t k = 0; k < 4; ++k)
        if (k != i && k != j) inner.push_back(branch[k]);
      const Vertex a = branch[i];
      const Vertex b = branch[j];
      if (!between(tree, a, inner[0], b) || !between(tree, a, inner[1], b)) continue;
      std::vector<Roles> options;
      for (auto [s, t] : {std::pair{a, b}, std::pair{b, a}}) {
        // w is the interior vertex nearer s; z lies on P_T[t, w].
        const bool first_nearer = tree.distance(s, inner[0]) < tree.distance(s, inner[1]);
        const Vertex w = first_nearer ? inner[0] : inner[1];
        const Vertex z = first_nearer ? inner[1] : inner[0];
        options.push_back({Shape::S3, false, s, t, w, z});
      }
      return pick_best(tree, options);
    }
  // Otherwise one branch vertex is the median of the other three.
  for (std::size_t m = 0; m < 4; ++m) {
    std::vector<Vertex> outer;
    for (std::size_t k = 0; k < 4; ++k)
      if (k != m) outer.push_back(branch[k]);
    const Vertex z = branch[m];
    if (!between(tree, outer[0], z, outer[1]) || !between(tree, outer[0], z, outer[2]) ||
        !between(tree, outer[1], z, outer[2]))
      continue;
    std::vector<Roles> options;
    std::sort(outer.begin(), outer.end());
    do {
      options.push_back({Shape::S4, false, outer[0], outer[1], outer[2], z});
    } while (std::next_permutation(outer.begin(), outer.end()));
    return pick_best(tree, options);
  }
  return std::nullopt;
}

VertexSet interior_set(const SpanningTree& tree, Vertex a, Vertex b) {
  if (a == b) return {};
  return make_vertex_set(tree_path(tree, a, b).interior());
}

// Fills the decomposition for assigned roles; false if the tree does not
// split into the expected branch sets.
bool decompose(const SpanningTree& tree, ShapeConfig& cfg) {
  const auto n = static_cast<std::size_t>(tree.order());
  std::vector<char> on_skeleton(n, 0);
  const VertexSet hubs = cfg.hubs();
  auto mark_path = [&](Vertex a, Vertex b) {
    if (a == b) return;
    const auto path = tree_path(tree, a, b);
    for (Vertex x : path.vertices()) on_skeleton[static_cast<std::size_t>(x)] = 1;
  };

  std::vector<std::pair<Vertex, int>> groups;  // (hub, expected branch count)
  switch (cfg.shape) {
    case Shape::S1:
    case Shape::S2:
    case Shape::S3: {
      const auto spine = tree_path(tree, cfg.t, cfg.s);
      cfg.spine.assign(spine.vertices().begin(), spine.vertices().end());
      mark_path(cfg.t, cfg.s);
      if (cfg.shape == Shape::S3) {
        cfg.q1 = interior_set(tree, cfg.w, cfg.s);
        cfg.q2 = interior_set(tree, cfg.z, cfg.w);
        std::vector<Vertex> p1 = cfg.q1;
        p1.insert(p1.end(), cfg.q2.begin(), cfg.q2.end());
        cfg.p1 = make_vertex_set(std::move(p1));
        cfg.p2 = interior_set(tree, cfg.t, cfg.z);
        if (cfg.collapsed)
          groups = {{cfg.s, 2}, {cfg.t, 2}, {cfg.w, 2}};
        else
          groups = {{cfg.s, 2}, {cfg.t, 2}, {cfg.w, 1}, {cfg.z, 1}};
      } else {
        cfg.p1 = interior_set(tree, cfg.w, cfg.s);
        cfg.p2 = interior_set(tree, cfg.t, cfg.w);
        groups = cfg.shape == Shape::S1 ? std::vector<std::pair<Vertex, int>>{{cfg.s, 2}, {cfg.t, 2}, {cfg.w, 1}}
                                        : std::vector<std::pair<Vertex, int>>{{cfg.s, 3}, {cfg.t, 2}, {cfg.w, 1}};
      }
      break;
    }
    case Shape::S4:
      mark_path(cfg.z, cfg.s);
      mark_path(cfg.z, cfg.t);
      mark_path(cfg.z, cfg.w);
      cfg.p1 = interior_set(tree, cfg.z, cfg.s);
      cfg.p2 = interior_set(tree, cfg.z, cfg.t);
      cfg.p3 = interior_set(tree, cfg.z, cfg.w);
      groups = {{cfg.s, 2}, {cfg.t, 2}, {cfg.w, 2}};
      break;
    default:
      return false;
  }

  std::vector<char> is_hub(n, 0);
  for (Vertex h : hubs) is_hub[static_cast<std::size_t>(h)] = 1;

  for (auto [hub, expected] : groups) {
    std::vector<BranchSet> found;
    for (Vertex c : tree.neighbors(hub)) {
      if (on_skeleton[static_cast<std::size_t>(c)]) continue;
      BranchSet b;
      b.hub = hub;
      b.attachment = c;
      std::vector<Vertex> members{c};
      std::vector<char> seen(n, 0);
      seen[static_cast<std::size_t>(c)] = 1;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (Vertex x : tree.neighbors(members[i])) {
          if (is_hub[static_cast<std::size_t>(x)] || seen[static_cast<std::size_t>(x)]) continue;
          seen[static_cast<std::size_t>(x)] = 1;
          members.push_back(x);
        }
      }
      int leaf_hits = 0;
      for (Vertex x : members)
        if (tree.degree(x) == 1) {
          b.leaf = x;
          ++leaf_hits;
        }
      if (leaf_hits != 1) return false;
      b.vertices = make_vertex_set(std::move(members));
      found.push_back(std::move(b));
    }
    if (static_cast<int>(found.size()) != expected) return false;
    std::sort(found.begin(), found.end(),
              [](const BranchSet& a, const BranchSet& b) { return a.attachment < b.attachment; });
    for (auto& b : found) cfg.branch_sets.push_back(std::move(b));
  }

  cfg.r1 = tree.distance(cfg.s, cfg.t);
  cfg.r2 = tree.distance(cfg.s, cfg.w);
  cfg.r3 = cfg.z != kNoVertex ? tree.distance(cfg.s, cfg.z) : 0;

  std::vector<Vertex> special = cfg.ordered_leaves();
  switch (cfg.shape) {
    case Shape::S1:
      special.push_back(cfg.t);
      special.push_back(cfg.s);
      break;
    case Shape::S2:
    case Shape::S3:
      special.push_back(cfg.t);
      break;
    case Shape::S4:
      special.push_back(cfg.z);
      break;
    default:
      break;
  }
  cfg.special_set = make_vertex_set(std::move(special));
  return true;
}

}  // namespace

ShapeConfig classify_shape(const Graph& /*g*/, const SpanningTree& tree) {
  ShapeConfig cfg;
  cfg.leaves = leaves(tree);
  cfg.branch_vertices = branch_vertices(tree);
  const auto nb = cfg.branch_vertices.size();
  const auto nl = cfg.leaves.size();
  if (nb <= 2) {
    cfg.shape = Shape::AtMostTwoBranch;
    return cfg;
  }
  cfg.shape = Shape::Other;
  if (nl > 6) return cfg;

  std::optional<Roles> roles;
  if (nb == 3) {
    roles = assign_three(tree, cfg.branch_vertices, static_cast<int>(nl));
  } else if (nb == 4 && nl == 6 &&
             std::all_of(cfg.branch_vertices.begin(), cfg.branch_vertices.end(),
                         [&](Vertex v) { return tree.degree(v) == 3; })) {
    roles = assign_four(tree, cfg.branch_vertices);
  }
  if (!roles) return cfg;

  ShapeConfig shaped = cfg;
  shaped.shape = roles->shape;
  shaped.collapsed = roles->collapsed;
  shaped.s = roles->s;
  shaped.t = roles->t;
  shaped.w = roles->w;
  shaped.z = roles->z;
  if (!decompose(tree, shaped)) return cfg;
  return shaped;
}

}  // namespace fewbranch
