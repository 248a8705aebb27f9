#include "doctest.h"
#include "fewbranch/generators.hpp"
#include "fewbranch/graph_io.hpp"

using namespace fewbranch;

TEST_CASE("parse_graph reads the edge-list format") {
  const Graph k3 = parse_graph("p 3 3\n0 1\n1 2\n0 2\n");
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
  const Graph star = parse_graph("p 4 3\n0 1\n0 2\n0 3\n");
  CHECK(star.degree(0) == 3);
  CHECK(star == named_graph("K1,3"));
}

TEST_CASE("comments, blank lines and extra whitespace are ignored") {
  const Graph g = parse_graph("# a triangle\n\np 3 3\n  0\t1 \n# mid\n1 2\r\n0 2");
  CHECK(g == named_graph("K3"));
}

TEST_CASE("without a header the order is one past the largest id") {
  const Graph g = parse_graph("0 1\n4 1\n");
  CHECK(g.order() == 5);
  CHECK(g.size() == 2);
  CHECK(parse_graph("").order() == 0);
  CHECK(parse_graph("p 3 0\n").order() == 3);
}

TEST_CASE("duplicate edge lines collapse") {
  const Graph g = parse_graph("p 2 3\n0 1\n1 0\n0 1\n");
  CHECK(g.size() == 1);
}

TEST_CASE("malformed input reports the offending line") {
  CHECK_THROWS_WITH_AS(parse_graph("p 2 1\n0 0\n"), "line 2: self-loop at vertex 0", ParseError);
  CHECK_THROWS_AS(parse_graph("p 2 1\n0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("0 -1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("0 1\np 3 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3 1\np 3 1\n"), ParseError);
  try {
    parse_graph("# c\n0 1\n1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("serialization round-trips to the canonical form") {
  const std::string messy = "3 1\n# x\n0 2\n1 3\n2 0\n";
  const Graph g = parse_graph(messy);
  const std::string canonical = to_edge_list(g);
  CHECK(canonical == "p 4 2\n0 2\n1 3\n");
  CHECK(parse_graph(canonical) == g);
  CHECK(to_edge_list(parse_graph(canonical)) == canonical);
}

TEST_CASE("trees serialize as parent arrays") {
  const Graph c6 = named_graph("C6");
  const SpanningTree t = spanning_tree_dfs(c6);
  const std::string text = to_parent_array(t);
  CHECK(text == "t 6\n0 -1\n1 0\n2 1\n3 2\n4 3\n5 4\n");
  CHECK(parse_tree(c6, text) == t);
  CHECK_THROWS_AS(parse_tree(c6, "t 5\n"), ParseError);
  CHECK_THROWS_AS(parse_tree(c6, "t 6\n0 -1\n1 0\n2 1\n3 2\n4 3\n5 3\n"), ParseError);
}
