#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "xdspan/graph.hpp"
#include "xdspan/random_graph.hpp"
#include "xdspan/sssp.hpp"

using namespace xds;

TEST_CASE("graph builds CSR in both directions", "[graph]") {
  DirectedGraph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {0, 2, 1}}, false);
  REQUIRE(g.num_vertices() == 4);
  REQUIRE(g.num_edges() == 4);
  REQUIRE(g.out_edges(0).size() == 2);
  REQUIRE(g.out_edges(3).empty());
  REQUIRE(g.in_edges(2).size() == 2);
  // edges are sorted by (from, to)
  REQUIRE(g.edge(0).from == 0);
  REQUIRE(g.edge(0).to == 1);
  REQUIRE(g.edge(1).from == 0);
  REQUIRE(g.edge(1).to == 2);
  REQUIRE(g.find_edge(2, 0) == 3);
  REQUIRE(g.find_edge(0, 3) == kNoEdge);
}

TEST_CASE("parallel edges collapse to the minimum weight", "[graph]") {
  DirectedGraph g(2, {{0, 1, 7}, {0, 1, 3}, {0, 1, 9}}, true);
  REQUIRE(g.num_edges() == 1);
  REQUIRE(g.edge(0).weight == 3);
}

TEST_CASE("graph construction rejects bad input", "[graph]") {
  REQUIRE_THROWS_AS(DirectedGraph(2, {{0, 2, 1}}, false), std::out_of_range);
  REQUIRE_THROWS_AS(DirectedGraph(2, {{-1, 0, 1}}, false), std::out_of_range);
  REQUIRE_THROWS_AS(DirectedGraph(2, {{1, 1, 1}}, false), std::invalid_argument);
  REQUIRE_THROWS_AS(DirectedGraph(2, {{0, 1, -2}}, true), std::invalid_argument);
  REQUIRE_THROWS_AS(DirectedGraph(2, {{0, 1, 2}}, false), std::invalid_argument);
}

TEST_CASE("empty and single-vertex graphs are fine", "[graph]") {
  DirectedGraph empty;
  REQUIRE(empty.num_vertices() == 0);
  DirectedGraph one(1, {}, false);
  REQUIRE(one.num_vertices() == 1);
  REQUIRE(one.num_edges() == 0);
  REQUIRE(one.out_edges(0).empty());
}

TEST_CASE("edge_subgraph keeps ids consistent", "[graph]") {
  DirectedGraph g(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}, false);
  DirectedGraph h = g.edge_subgraph({0, 2});
  REQUIRE(h.num_edges() == 2);
  REQUIRE(h.find_edge(0, 1) != kNoEdge);
  REQUIRE(h.find_edge(1, 2) == kNoEdge);
  REQUIRE_THROWS_AS(g.edge_subgraph({99}), std::out_of_range);
}

TEST_CASE("random graphs are strongly connected with exact edge counts", "[graph]") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    RandomGraph rg = random_scc_graph(40, 200, seed);
    REQUIRE(rg.graph.num_vertices() == 40);
    REQUIRE(rg.graph.num_edges() == 200);
    REQUIRE(is_strongly_connected(rg.graph));
    REQUIRE(rg.backbone.size() == 40);
  }
  // deterministic for a fixed seed
  RandomGraph a = random_scc_graph(30, 120, 9);
  RandomGraph b = random_scc_graph(30, 120, 9);
  REQUIRE(a.graph.edges().size() == b.graph.edges().size());
  for (std::size_t i = 0; i < a.graph.edges().size(); ++i) {
    REQUIRE(a.graph.edges()[i].from == b.graph.edges()[i].from);
    REQUIRE(a.graph.edges()[i].to == b.graph.edges()[i].to);
  }
  REQUIRE_THROWS_AS(random_scc_graph(10, 5, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(random_scc_graph(10, 91, 1), std::invalid_argument);
}

TEST_CASE("weighted random graphs stay in range", "[graph]") {
  RandomGraph rg = random_scc_graph(25, 100, 4, 10);
  REQUIRE(rg.graph.weighted());
  for (const Edge& e : rg.graph.edges()) {
    REQUIRE(e.weight >= 1);
    REQUIRE(e.weight <= 10);
  }
  REQUIRE(is_strongly_connected(rg.graph));
}
