#pragma once

#include <string_view>
#include <vector>

#include "fewbranch/graph.hpp"
#include "fewbranch/spanning_tree.hpp"

namespace fewbranch {

/// Tree configurations the exchange engine distinguishes.
///
///   S1  5 leaves; branch vertices s, w, t of degree 3 with w inside P_T[t,s].
///   S2  6 leaves; s (degree 4), w, t (degree 3) with w inside P_T[t,s].
///   S3  6 leaves; s, t endpoints and w, z inside P_T[t,s], z on P_T[t,w].
///       With `collapsed` set, z = w is a single degree-4 spine vertex.
///   S4  6 leaves; s, t, w, z of degree 3 with z the median of s, t, w.
enum class Shape { AtMostTwoBranch, S1, S2, S3, S4, Other };

std::string_view to_string(Shape shape);

/// A component of T minus the hub vertices that carries one leaf.
struct BranchSet {
  Vertex hub = kNoVertex;         ///< hub vertex the component hangs from
  Vertex attachment = kNoVertex;  ///< v_i: the component's tree-neighbor of the hub
  Vertex leaf = kNoVertex;        ///< u_i
  VertexSet vertices;

  friend bool operator==(const BranchSet&, const BranchSet&) = default;
};

/// Named decomposition of a tree. Fields a shape does not use stay empty or
/// kNoVertex.
struct ShapeConfig {
  Shape shape = Shape::Other;
  bool collapsed = false;  ///< S3 with z = w

  VertexSet leaves;
  VertexSet branch_vertices;

  Vertex s = kNoVertex;
  Vertex t = kNoVertex;
  Vertex w = kNoVertex;
  Vertex z = kNoVertex;

  /// B_1..B_k in canonical order: S1 (s,s,t,t,w), S2 (s,s,s,t,t,w),
  /// S3 (s,s,t,t,w,z), S4 (s,s,t,t,w,w); ties by attachment id.
  std::vector<BranchSet> branch_sets;

  /// Spine P_T[t,s] oriented t -> s (S1..S3). Empty for S4.
  std::vector<Vertex> spine;

  /// Path interiors. S1/S2: p1 = P_T[w,s], p2 = P_T[t,w].
  /// S3: q1 = P_T[w,s], q2 = P_T[z,w], p1 = q1 ∪ q2, p2 = P_T[t,z].
  /// S4: p1 = P_T[z,s], p2 = P_T[z,t], p3 = P_T[z,w].
  VertexSet p1, p2, p3, q1, q2;

  /// r1 = d_T(s,t), r2 = d_T(s,w), r3 = d_T(s,z); zero where undefined.
  int r1 = 0, r2 = 0, r3 = 0;

  /// The independent-candidate set: leaves plus the designated hub(s).
  /// S1: {u1..u5, t, s}; S2, S3: {u1..u6, t}; S4: {u1..u6, z}.
  VertexSet special_set;

  /// Vertices removed to form the branch sets.
  VertexSet hubs() const;
  /// u_1..u_k in branch-set order.
  std::vector<Vertex> ordered_leaves() const;

  friend bool operator==(const ShapeConfig&, const ShapeConfig&) = default;
};

/// Total and deterministic. Among symmetric labelings, picks the one that
/// minimizes (r1, r2, r3), then (s, t, w, z) by vertex id.
ShapeConfig classify_shape(const Graph& g, const SpanningTree& t);

}  // namespace fewbranch
