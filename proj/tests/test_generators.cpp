#include "doctest.h"
#include "fewbranch/generators.hpp"
#include "fewbranch/structure.hpp"
#include "support.hpp"

using namespace fewbranch;

TEST_CASE("splitmix64 and Rng reference outputs") {
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  Rng zero(0);
  CHECK(zero.next() == 0x7bbcb40d550682d0ULL);
  CHECK(zero.next() == 0xde7fe413d00cc9fdULL);
  CHECK(zero.next() == 0xb3c638353c668c91ULL);
  Rng r(12345);
  CHECK(r.next() == 0x47edfd1cd809b6dcULL);
  CHECK(r.next() == 0x34d004209d31c6baULL);
  CHECK(r.next() == 0x38b855ac9296d1e9ULL);
}

TEST_CASE("Rng helpers stay in range") {
  Rng r(7);
  for (int i = 0; i < 2000; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(r.below(7) < 7);
  }
  CHECK_FALSE(Rng(1).bernoulli(0.0));
  CHECK(Rng(1).bernoulli(1.0));
}

TEST_CASE("line graphs of small families") {
  const Graph lk13 = line_graph(named_graph("K1,3"));
  CHECK(lk13.order() == 3);
  CHECK(lk13.size() == 3);
  const Graph lp4 = line_graph(named_graph("P4"));
  CHECK(lp4.order() == 3);
  CHECK(lp4.size() == 2);
  const Graph oct = line_graph(named_graph("K4"));
  CHECK(oct.order() == 6);
  CHECK(oct.size() == 12);
  for (Vertex v = 0; v < 6; ++v) CHECK(oct.degree(v) == 4);
  CHECK(named_graph("line:K4").edges() == oct.edges());
}

TEST_CASE("named families") {
  CHECK(named_graph("K5").size() == 10);
  CHECK(named_graph("C7").size() == 7);
  CHECK(named_graph("P7").size() == 6);
  CHECK(named_graph("K1,5").order() == 6);
  const Graph net = named_graph("net");
  CHECK(net.order() == 6);
  CHECK(net.size() == 6);
  CHECK_FALSE(find_claw(net).has_value());
  CHECK_THROWS_AS(named_graph("Q3"), std::invalid_argument);
}

TEST_CASE("random_graph extremes and determinism") {
  CHECK(random_graph(6, 1.0, 4).size() == 15);
  CHECK(random_graph(6, 0.0, 4).size() == 0);
  CHECK(random_graph(12, 0.4, 99).edges() == random_graph(12, 0.4, 99).edges());
  CHECK(random_graph(12, 0.4, 99).edges() != random_graph(12, 0.4, 100).edges());
}

TEST_CASE("claw-free generators return connected claw-free graphs") {
  for (Strategy s : {Strategy::LineGraph, Strategy::ClawRepair}) {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
      const int n = 3 + static_cast<int>(seed % 14);
      const double p = 0.05 * static_cast<double>(seed % 15);
      const Graph g = random_claw_free_connected(n, p, seed, s);
      CHECK(g.order() == n);
      CHECK(is_connected(g));
      CHECK_FALSE(testing_support::naive_has_claw(g));
      CHECK(g.edges() == random_claw_free_connected(n, p, seed, s).edges());
    }
  }
  CHECK_THROWS_AS(random_claw_free_connected(6, 0.2, 1, Strategy::Random), std::invalid_argument);
}

TEST_CASE("claw repair replay") {
  Rng rng(2);
  const Graph before = random_connected_graph(6, 0.2, rng);
  CHECK(before.size() == 6);
  const auto claw = find_claw(before);
  REQUIRE(claw.has_value());
  CHECK(claw->center == 3);
  CHECK(claw->talons == std::array<Vertex, 3>{1, 2, 5});

  const Graph after = generate(parse_gen_spec("clawrepair:6:0.2:2"));
  CHECK(after.size() == 7);
  CHECK(after.has_edge(1, 2));
  CHECK(after.has_edge(1, 3));
  CHECK(after.has_edge(2, 3));
  CHECK_FALSE(find_claw(after).has_value());
  CHECK(repair_claws(before).edges() == after.edges());
}

TEST_CASE("GenSpec text round trip") {
  for (const char* text : {"linegraph:10:0.25:7", "clawrepair:6:0.2:2", "random:11:0.3:18", "K5", "net", "line:K4", "K1,3"}) {
    const GenSpec spec = parse_gen_spec(text);
    CHECK(spec.to_string() == text);
    CHECK(parse_gen_spec(spec.to_string()) == spec);
  }
  const GenSpec s = parse_gen_spec("linegraph:10:0.25:7");
  CHECK(s.strategy == Strategy::LineGraph);
  CHECK(s.n == 10);
  CHECK(s.seed == 7);
  for (const char* bad : {"bogus:5:0.1:1", "random:x:0.1:1", "random:5:0.1", "random:5:1.5:1", ""})
    CHECK_THROWS_AS(parse_gen_spec(bad), std::invalid_argument);
}
