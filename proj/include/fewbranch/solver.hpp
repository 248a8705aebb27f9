#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fewbranch/certificate.hpp"
#include "fewbranch/graph.hpp"
#include "fewbranch/moves.hpp"
#include "fewbranch/potential.hpp"
#include "fewbranch/spanning_tree.hpp"

namespace fewbranch {

/// One applied exchange.
struct TraceEntry {
  Rule rule = Rule::GenericSwap;
  std::vector<Edge> adds;
  std::vector<Edge> removes;
  std::string_view pattern;
  Potential before;
  Potential after;
};

/// `<rule_id> <adds> <removes> <potential_before> <potential_after>`, with
/// edge lists written as comma-separated "u-v".
std::string format_trace_line(const TraceEntry& entry);

enum class SolveStatus {
  Solved,          ///< |B| <= 2 reached by exchanges
  Stalled,         ///< no catalog move improves the potential
  MoveCapReached,  ///< stopped by the move cap
  OracleSolved,    ///< exchanges did not finish; the exact oracle supplied the tree
};

std::string_view to_string(SolveStatus status);

struct SolveOutcome {
  SolveStatus status = SolveStatus::Stalled;
  SpanningTree tree;
  std::vector<TraceEntry> trace;
  /// Present whenever the exchange phase ended without reaching |B| <= 2.
  std::optional<CountingCertificate> certificate;
  int leaves_after_reduction = 0;

  bool solved_by_exchange() const { return status == SolveStatus::Solved; }
  std::vector<std::string_view> moves_applied() const;
  int branch_count() const;
};

struct SolveOptions {
  bool oracle_fallback = false;
  int oracle_cap = 12;
  long move_cap = 0;  ///< 0 means n^3
  int leaf_target = 6;
};

/// Lowers the leaf count by single exchanges until it is at most `target` or
/// no single exchange removes a leaf. Never increases |L|.
SpanningTree reduce_leaves(const Graph& g, const SpanningTree& t, int target);

/// Applies the first improving catalog move until |B| <= 2, no move applies,
/// or `move_cap` moves were made (0 means n^3). Throws std::logic_error if an
/// applied move fails to lower the potential.
SolveOutcome minimize(const Graph& g, const SpanningTree& t0, long move_cap = 0);

/// DFS tree, leaf reduction, then minimize. With `oracle_fallback` and
/// n <= oracle_cap an unfinished run is completed by the exact oracle.
/// Throws DisconnectedGraphError for a disconnected graph.
SolveOutcome solve(const Graph& g, const SolveOptions& options = {});

}  // namespace fewbranch
