#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>

#include "fewbranch/graph.hpp"

namespace fewbranch {

/// Minimum degree sum over independent k-sets: a finite value, or Unbounded
/// when the graph has no independent set of size k.
class DegreeSumBound {
 public:
  static DegreeSumBound finite(long value) { return DegreeSumBound(value); }
  static DegreeSumBound unbounded() { return DegreeSumBound(); }

  bool is_unbounded() const { return !value_.has_value(); }
  /// Throws std::logic_error when unbounded.
  long value() const;

  /// Unbounded satisfies every finite threshold.
  bool at_least(long threshold) const { return !value_ || *value_ >= threshold; }

  /// Decimal value, or "unbounded".
  std::string to_string() const;

  friend bool operator==(const DegreeSumBound&, const DegreeSumBound&) = default;

 private:
  DegreeSumBound() = default;
  explicit DegreeSumBound(long value) : value_(value) {}
  std::optional<long> value_;
};

/// An induced K_{1,3}: center adjacent to all talons, talons pairwise nonadjacent.
struct ClawWitness {
  Vertex center = kNoVertex;
  std::array<Vertex, 3> talons{};

  friend bool operator==(const ClawWitness&, const ClawWitness&) = default;
};

/// First induced claw by lowest center id, then lexicographically smallest
/// talon triple.
std::optional<ClawWitness> find_claw(const Graph& g);

/// {x : xy in E for some y in X}. May intersect X.
VertexSet neighborhood(const Graph& g, std::span<const Vertex> set);

/// neighborhood(g, X) minus X itself.
VertexSet open_neighborhood(const Graph& g, std::span<const Vertex> set);

/// {x : |N(x) ∩ X| = k}. Throws std::invalid_argument for k < 0.
VertexSet neighborhood_exact_count(const Graph& g, std::span<const Vertex> set, int k);

bool is_independent(const Graph& g, std::span<const Vertex> set);

/// Sum of graph degrees over a vertex set.
long degree_sum(const Graph& g, std::span<const Vertex> set);

/// Exact minimum degree sum over independent k-sets by branch and bound.
/// k = 1 gives the minimum degree. Throws std::invalid_argument for k <= 0.
DegreeSumBound sigma_k(const Graph& g, int k);

}  // namespace fewbranch
