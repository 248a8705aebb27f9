#include "fewbranch/solver.hpp"

#include <stdexcept>

#include "fewbranch/oracle.hpp"

namespace fewbranch {

namespace {

std::string join_edges(const std::vector<Edge>& edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ',';
    out += to_string(e);
  }
  return out;
}

int leaf_delta(const SpanningTree& t, const Edge& add, const Edge& remove) {
  const Vertex touched[4] = {add.u, add.v, remove.u, remove.v};
  int delta = 0;
  for (int i = 0; i < 4; ++i) {
    const Vertex x = touched[i];
    bool repeat = false;
    for (int j = 0; j < i; ++j) repeat = repeat || touched[j] == x;
    if (repeat) continue;
    const int before = t.degree(x);
    const int after = before + (add.touches(x) ? 1 : 0) - (remove.touches(x) ? 1 : 0);
    delta += (after == 1 ? 1 : 0) - (before == 1 ? 1 : 0);
  }
  return delta;
}

void record(std::vector<TraceEntry>* trace, const Graph& g, Rule rule, std::string_view pattern, const Edge& add,
            const Edge& remove, const SpanningTree& from, const SpanningTree& to) {
  if (trace == nullptr) return;
  TraceEntry e{rule, {add}, {remove}, pattern, potential(g, from), potential(g, to)};
  if (!(e.after < e.before)) throw std::logic_error("leaf move did not lower the potential");
  trace->push_back(std::move(e));
}

// A single exchange can only lose leaves if the added edge touches a leaf,
// so scanning leaf-anchored additions covers every improving single swap.
std::optional<std::pair<Edge, Edge>> leaf_improvement(const Graph& g, const SpanningTree& t) {
  for (Vertex a : leaves(t))
    for (Vertex x : g.neighbors(a)) {
      if (t.has_edge(a, x)) continue;
      const Edge add(a, x);
      for (const Edge& e : tree_path(t, a, x).edges())
        if (leaf_delta(t, add, e) < 0) return std::pair{add, e};
    }
  return std::nullopt;
}

SpanningTree reduce_impl(const Graph& g, SpanningTree t, int target, bool stop_at_two_branch,
                         std::vector<TraceEntry>* trace) {
  while (leaf_count(t) > target && !(stop_at_two_branch && branch_count(t) <= 2)) {
    auto found = leaf_improvement(g, t);
    if (!found) break;
    auto [add, remove] = *found;
    const bool merge = t.degree(add.u) == 1 && t.degree(add.v) == 1;
    SpanningTree next = exchange(t, add, remove);
    record(trace, g, merge ? Rule::LeafMerge : Rule::AttachSlide,
           merge ? "T+u_iu_j-v_iv_i^-" : "T+xu_j-v_jv_j^-", add, remove, t, next);
    t = std::move(next);
  }
  return t;
}

SolveOutcome minimize_impl(const Graph& g, SpanningTree t, long move_cap, std::vector<TraceEntry> trace) {
  const long n = t.order();
  if (move_cap <= 0) move_cap = n * n * n;
  long applied = 0;
  for (;;) {
    const ShapeConfig cfg = classify_shape(g, t);
    if (cfg.shape == Shape::AtMostTwoBranch)
      return SolveOutcome{SolveStatus::Solved, std::move(t), std::move(trace), std::nullopt, 0};
    std::optional<ScoredMove> move;
    if (applied < move_cap) move = first_improving_move(g, cfg, t);
    if (!move) {
      const auto status = applied < move_cap ? SolveStatus::Stalled : SolveStatus::MoveCapReached;
      return SolveOutcome{status, std::move(t), std::move(trace), counting_certificate(g, cfg), 0};
    }
    if (!(move->after < move->before)) throw std::logic_error("catalog move did not lower the potential");
    trace.push_back(
        TraceEntry{move->move.rule, move->move.adds, move->move.removes, move->move.pattern, move->before, move->after});
    t = std::move(move->result);
    ++applied;
  }
}

}  // namespace

std::string format_trace_line(const TraceEntry& entry) {
  return std::string(rule_id(entry.rule)) + ' ' + join_edges(entry.adds) + ' ' + join_edges(entry.removes) + ' ' +
         entry.before.to_string() + ' ' + entry.after.to_string();
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Solved: return "solved";
    case SolveStatus::Stalled: return "stalled";
    case SolveStatus::MoveCapReached: return "move-cap-reached";
    case SolveStatus::OracleSolved: return "oracle-solved";
  }
  return "stalled";
}

std::vector<std::string_view> SolveOutcome::moves_applied() const {
  std::vector<std::string_view> out;
  for (const auto& e : trace) out.push_back(rule_id(e.rule));
  return out;
}

int SolveOutcome::branch_count() const { return fewbranch::branch_count(tree); }

SpanningTree reduce_leaves(const Graph& g, const SpanningTree& t, int target) {
  return reduce_impl(g, t, target, false, nullptr);
}

SolveOutcome minimize(const Graph& g, const SpanningTree& t0, long move_cap) {
  SolveOutcome out = minimize_impl(g, t0, move_cap, {});
  out.leaves_after_reduction = leaf_count(t0);
  return out;
}

SolveOutcome solve(const Graph& g, const SolveOptions& options) {
  SpanningTree t = spanning_tree_dfs(g);
  std::vector<TraceEntry> trace;
  if (branch_count(t) > 2) t = reduce_impl(g, std::move(t), options.leaf_target, true, &trace);
  const int leaves_after = leaf_count(t);
  SolveOutcome out = minimize_impl(g, std::move(t), options.move_cap, std::move(trace));
  out.leaves_after_reduction = leaves_after;
  if (out.status != SolveStatus::Solved && options.oracle_fallback && g.order() <= options.oracle_cap) {
    OracleOptions oracle;
    oracle.cap = options.oracle_cap;
    out.tree = min_branch_vertices_exact(g, oracle).witness;
    out.status = SolveStatus::OracleSolved;
  }
  return out;
}

}  // namespace fewbranch
