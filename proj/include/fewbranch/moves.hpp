#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fewbranch/graph.hpp"
#include "fewbranch/potential.hpp"
#include "fewbranch/shape.hpp"
#include "fewbranch/spanning_tree.hpp"

namespace fewbranch {

/// Exchange rule families, in catalog order.
///
///   LeafMerge    leaf joined to another member of the special set, dropping a
///                cycle edge at a branch vertex:          T + u_i u_j - v_i v_i^-
///   AttachSlide  leaf joined to any other vertex:         T + x u_j - v_j v_j^-
///   EndpointHop  tree-neighbor(s) of a branch vertex re-hung elsewhere:
///                T + v_1 s^- - s v_1,  T + y v_i + y v_j - s v_i - s v_j
///   ClawForced   an edge between two tree-neighbors of a branch vertex plus
///                one more join:        T + x u + v_1 v_2 - s v_1 - s v_2
///   TripleSplice two or three joins around a detached tree edge x x^-:
///                T + u_j x + u_k x^- - x x^- - s v_i,
///                T + u_3 y + u_7 x^- + u_7 x - x x^- - y y^- - w w^+, ...
///   GenericSwap  any single exchange; only for trees outside S1..S4.
enum class Rule { LeafMerge, AttachSlide, EndpointHop, ClawForced, TripleSplice, GenericSwap };

/// "R-LEAF-MERGE", "R-ATTACH-SLIDE", ...
std::string_view rule_id(Rule rule);

struct ExchangeMove {
  Rule rule = Rule::GenericSwap;
  std::vector<Edge> adds;     ///< sorted
  std::vector<Edge> removes;  ///< sorted, same count as adds
  std::string_view pattern;   ///< move template, e.g. "T+u_iu_j-v_iv_i^-"

  friend bool operator==(const ExchangeMove& a, const ExchangeMove& b) {
    return a.rule == b.rule && a.adds == b.adds && a.removes == b.removes;
  }
};

/// A catalog move together with the tree it produces.
struct ScoredMove {
  ExchangeMove move;
  SpanningTree result;
  Potential before;
  Potential after;
};

/// Every catalog move that yields a valid spanning tree with strictly smaller
/// potential, ordered by (rule, sorted involved vertices, adds, removes).
/// Moves are checked against the graph, so the catalog is sound on any input.
std::vector<ExchangeMove> catalog_moves(const Graph& g, const ShapeConfig& cfg, const SpanningTree& t);

/// First entry of catalog_moves, with its result, without scoring the rest.
std::optional<ScoredMove> first_improving_move(const Graph& g, const ShapeConfig& cfg, const SpanningTree& t);

}  // namespace fewbranch
