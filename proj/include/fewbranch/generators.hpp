#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fewbranch/graph.hpp"
#include "fewbranch/rng.hpp"

namespace fewbranch {

enum class Strategy {
  LineGraph,    ///< line graph of a random connected base graph with n edges
  ClawRepair,   ///< random connected graph, claws closed one at a time
  Random,       ///< plain G(n, p); may be disconnected or contain claws
  NamedFamily,  ///< fixed families: K<n>, C<n>, P<n>, K1,<k>, net, line:<name>
};

/// Reproducible instance description. Text forms:
///
///   linegraph:<n>:<p>:<seed>
///   clawrepair:<n>:<p>:<seed>
///   random:<n>:<p>:<seed>
///   K5   C6   P4   K1,3   net   line:K4
struct GenSpec {
  Strategy strategy = Strategy::NamedFamily;
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string name;  ///< NamedFamily only

  std::string to_string() const;
  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

/// Throws std::invalid_argument on an unknown strategy or malformed field.
GenSpec parse_gen_spec(std::string_view text);

Graph generate(const GenSpec& spec);

/// Vertices are the edges of g (in sorted order); two are adjacent when the
/// edges share an endpoint.
Graph line_graph(const Graph& g);

/// Each pair (i < j), in lexicographic order, is an edge with probability p.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Random spanning tree (vertex i > 0 attaches to a uniform earlier vertex of
/// a shuffled order) plus each further pair with probability p.
Graph random_connected_graph(int n, double p, Rng& rng);

/// Adds an edge between the first two talons of find_claw until none is left.
Graph repair_claws(const Graph& g);

/// Connected and claw-free, both checked before returning. Strategy must be
/// LineGraph or ClawRepair. For LineGraph, p in [0, 1] moves the base graph
/// from sparse (many base vertices) to dense (few).
Graph random_claw_free_connected(int n, double p, std::uint64_t seed, Strategy strategy);

/// Named family by text name. Throws std::invalid_argument if unknown.
Graph named_graph(std::string_view name);

}  // namespace fewbranch
