#include "doctest.h"
#include "fewbranch/generators.hpp"
#include "fewbranch/oracle.hpp"
#include "fewbranch/solver.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace fewbranch;

namespace {

void check_descent(const std::vector<TraceEntry>& trace) {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    CHECK(trace[i].after < trace[i].before);
    if (i + 1 < trace.size()) CHECK(trace[i].after == trace[i + 1].before);
  }
}

}  // namespace

TEST_CASE("reduce_leaves leaves small-leaf trees alone") {
  const Graph c6 = named_graph("C6");
  const SpanningTree t = spanning_tree_dfs(c6);
  CHECK(reduce_leaves(c6, t, 6) == t);
  const Graph k5 = named_graph("K5");
  const SpanningTree star(k5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(reduce_leaves(k5, star, 4) == star);
}

TEST_CASE("a star inside K5 reduces to a Hamiltonian path") {
  const Graph k5 = named_graph("K5");
  const SpanningTree star(k5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const SpanningTree reduced = reduce_leaves(k5, star, 2);
  CHECK(leaf_count(reduced) == 2);
  CHECK(leaf_count(reduced) == testing_support::naive_tree_stats(k5).min_leaves);
}

TEST_CASE("reduce_leaves never increases the leaf count") {
  Rng rng(3);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Graph g = random_graph(6 + static_cast<int>(seed % 15), 0.3, seed);
    if (!is_connected(g)) continue;
    const SpanningTree t = testing_support::random_spanning_tree(g, rng);
    const int target = 2 + static_cast<int>(seed % 6);
    const SpanningTree r = reduce_leaves(g, t, target);
    CHECK(leaf_count(r) <= leaf_count(t));
    CHECK(testing_support::is_spanning_tree(g, r.edges()));
  }
}

TEST_CASE("a leaf-optimal tree has independent leaves") {
  Rng rng(8);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Graph g = random_claw_free_connected(8 + static_cast<int>(seed % 12), 0.3, seed, Strategy::ClawRepair);
    const SpanningTree r = reduce_leaves(g, testing_support::random_spanning_tree(g, rng), 2);
    if (leaf_count(r) > 2) CHECK(is_independent(g, leaves(r)));
  }
}

TEST_CASE("minimize stops immediately on solved trees") {
  const Graph c6 = named_graph("C6");
  const auto out = minimize(c6, spanning_tree_dfs(c6));
  CHECK(out.status == SolveStatus::Solved);
  CHECK(out.trace.empty());
  CHECK(out.moves_applied().empty());
  CHECK_FALSE(out.certificate.has_value());
}

TEST_CASE("minimize finds the optimum on the net and the octahedron") {
  const Graph net = named_graph("net");
  Rng rng(1);
  for (int i = 0; i < 3; ++i) {
    const auto out = minimize(net, testing_support::random_spanning_tree(net, rng));
    CHECK(out.status == SolveStatus::Solved);
    CHECK(out.branch_count() == 1);
  }
  const Graph oct = named_graph("line:K4");
  const auto out = minimize(oct, spanning_tree_dfs(oct));
  CHECK(out.status == SolveStatus::Solved);
  CHECK(out.branch_count() == 0);
}

TEST_CASE("solve on the standard families") {
  const auto c6 = solve(named_graph("C6"));
  CHECK(c6.status == SolveStatus::Solved);
  CHECK(c6.branch_count() == 0);
  const auto net = solve(named_graph("net"));
  CHECK(net.status == SolveStatus::Solved);
  CHECK(net.branch_count() == 1);
  const auto claw = solve(named_graph("K1,3"));
  CHECK(claw.status == SolveStatus::Solved);
  CHECK(claw.branch_count() == 1);
  CHECK(solve(Graph(1, {})).status == SolveStatus::Solved);
  CHECK_THROWS_AS(solve(Graph(4, {{0, 1}, {2, 3}})), DisconnectedGraphError);
}

TEST_CASE("a multi-move instance records a descending trace") {
  const Graph g = generate(parse_gen_spec("random:11:0.3:18"));
  const auto out = solve(g);
  CHECK(out.status == SolveStatus::Solved);
  CHECK(out.trace.size() == 3);
  check_descent(out.trace);
  CHECK(out.moves_applied() ==
        std::vector<std::string_view>{"R-ATTACH-SLIDE", "R-LEAF-MERGE", "R-LEAF-MERGE"});
  CHECK(format_trace_line(out.trace[0]) == "R-ATTACH-SLIDE 0-5 3-4 (1,6,3,3,1,2) (1,6,2,2,1,0)");
}

TEST_CASE("the move cap is reported separately from a stall") {
  const Graph g = generate(parse_gen_spec("random:11:0.3:18"));
  SolveOptions opts;
  opts.move_cap = 1;
  const auto capped = solve(g, opts);
  CHECK(capped.status == SolveStatus::MoveCapReached);
  CHECK(capped.trace.size() == 1);
  REQUIRE(capped.certificate.has_value());

  opts.oracle_fallback = true;
  const auto rescued = solve(g, opts);
  CHECK(rescued.status == SolveStatus::OracleSolved);
  CHECK(rescued.branch_count() == min_branch_vertices_exact(g).optimum);
}

TEST_CASE("a stall carries a certificate and the oracle can finish it") {
  const Graph g = generate(parse_gen_spec("random:8:0.3:58"));
  const auto out = solve(g);
  CHECK(out.status == SolveStatus::Stalled);
  CHECK(out.branch_count() == 3);
  REQUIRE(out.certificate.has_value());
  CHECK(out.certificate->shape == Shape::S1);
  CHECK(out.certificate->applicable);
  check_descent(out.trace);

  SolveOptions opts;
  opts.oracle_fallback = true;
  const auto rescued = solve(g, opts);
  CHECK(rescued.status == SolveStatus::OracleSolved);
  CHECK(rescued.certificate.has_value());
  CHECK(rescued.branch_count() == testing_support::naive_tree_stats(g).min_branch);

  opts.oracle_cap = 7;
  CHECK(solve(g, opts).status == SolveStatus::Stalled);
}

TEST_CASE("every solve on random graphs descends strictly") {
  int moves = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Graph g = generate(GenSpec{seed % 2 ? Strategy::Random : Strategy::ClawRepair,
                                     10 + static_cast<int>(seed % 15), 0.15, seed, ""});
    if (!is_connected(g)) continue;
    const auto out = solve(g);
    check_descent(out.trace);
    if (out.status == SolveStatus::Solved) CHECK(out.branch_count() <= 2);
    if (out.status == SolveStatus::Stalled) CHECK(out.certificate.has_value());
    CHECK(testing_support::is_spanning_tree(g, out.tree.edges()));
    moves += static_cast<int>(out.trace.size());
  }
  CHECK(moves > 0);
}

TEST_CASE("status names") {
  CHECK(to_string(SolveStatus::Solved) == "solved");
  CHECK(to_string(SolveStatus::Stalled) == "stalled");
  CHECK(to_string(SolveStatus::MoveCapReached) == "move-cap-reached");
  CHECK(to_string(SolveStatus::OracleSolved) == "oracle-solved");
}
