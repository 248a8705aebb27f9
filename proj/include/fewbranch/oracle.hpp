#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fewbranch/graph.hpp"
#include "fewbranch/spanning_tree.hpp"

namespace fewbranch {

/// Raised when an exact query exceeds the configured order cap.
class OracleCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OracleMethod {
  Auto,            ///< Hamiltonian-path check, then enumeration or branch and bound
  Enumerate,       ///< full enumeration of spanning trees
  BranchAndBound,  ///< edge-inclusion search with a forced-leaf bound
};

struct OracleOptions {
  int cap = 12;
  bool force = false;  ///< allow n > cap; the result is then marked inexact
  OracleMethod method = OracleMethod::Auto;
  /// Auto enumerates when the tree count is at most this, else branches.
  std::uint64_t enumeration_budget = 100000;
};

struct OracleResult {
  int optimum = 0;
  SpanningTree witness;
  std::uint64_t explored = 0;  ///< trees visited or search nodes expanded
  bool exact = false;          ///< n <= cap
};

/// Matrix-tree count by fraction-free elimination. 0 when disconnected, 1 when
/// n <= 1.
boost::multiprecision::cpp_int count_spanning_trees(const Graph& g);

struct EnumerationResult {
  std::uint64_t visited = 0;
  bool truncated = false;  ///< more trees exist beyond `limit`
};

/// Visits distinct spanning trees in a fixed include-before-exclude order over
/// the sorted edge list, stopping after `limit`. Throws std::invalid_argument
/// when limit <= 0.
EnumerationResult enumerate_spanning_trees(const Graph& g, std::int64_t limit,
                                           const std::function<void(std::span<const Edge>)>& visitor);

/// Some Hamiltonian path, by subset dynamic programming. Throws
/// std::invalid_argument for n > 20.
std::optional<std::vector<Vertex>> hamiltonian_path(const Graph& g);

/// Minimum |B(T)| over all spanning trees. Throws DisconnectedGraphError or
/// OracleCapExceeded.
OracleResult min_branch_vertices_exact(const Graph& g, const OracleOptions& options = {});

/// Minimum |L(T)| over all spanning trees.
OracleResult min_leaves_exact(const Graph& g, const OracleOptions& options = {});

}  // namespace fewbranch
