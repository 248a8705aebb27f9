#pragma once

#include <array>
#include <compare>
#include <string>

#include "fewbranch/graph.hpp"
#include "fewbranch/shape.hpp"
#include "fewbranch/spanning_tree.hpp"

namespace fewbranch {

/// Lexicographic tuple the local search strictly decreases.
///
///   branch_flag  0 when |B(T)| <= 2, else 1
///   leaf_count   |L(T)|
///   shape_rank   0 when solved; 1..5 for S1, S2, S3, S4, Other
///   measure      S1/S2: (r1, r2, 0); S3: (r1, r2, r3);
///                S4: (|P1|+|P2|+|P3|, 0, 0);
///                Other: (sum of pairwise branch-vertex distances, 0, 0)
struct Potential {
  int branch_flag = 0;
  int leaf_count = 0;
  int shape_rank = 0;
  std::array<int, 3> measure{};

  friend auto operator<=>(const Potential&, const Potential&) = default;

  /// "(flag,leaves,rank,m1,m2,m3)"
  std::string to_string() const;
};

int shape_rank(Shape shape);

Potential potential(const Graph& g, const SpanningTree& t);
/// Same value, reusing a classification of `t`.
Potential potential_of(const ShapeConfig& cfg, const SpanningTree& t);

}  // namespace fewbranch
