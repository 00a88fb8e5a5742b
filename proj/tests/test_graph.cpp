#include <doctest.h>

#include "kemeny/errors.hpp"
#include "kemeny/graph.hpp"
#include "support.hpp"

using namespace kemeny;

TEST_CASE("parse builds dense indices in first-appearance order") {
  Graph g = Graph::parse("a b\nb c");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.label(0) == "a");
  CHECK(g.label(1) == "b");
  CHECK(g.label(2) == "c");
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("parse collapses duplicate edges regardless of orientation") {
  Graph g = Graph::parse("a b\nb a");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("parse skips comments and blank lines") {
  Graph g = Graph::parse("# header\n\na b   # trailing\n  \nb c\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("parse reports the offending line") {
  CHECK_THROWS_WITH_AS(Graph::parse("a b\nx y z"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(Graph::parse("a b\nc c"),
                       doctest::Contains("self-loop"), ValidationError);
}

TEST_CASE("reference chain has 12 vertices and 15 edges") {
  auto f = testsupport::chain_fixture();
  CHECK(f.parent.vertex_count() == 12);
  CHECK(f.parent.edge_count() == 15);
  CHECK(f.parent.degree(f.v2) == 4);  // complete-graph vertex plus its bridge
  CHECK(f.parent.degree(f.v3) == 4);  // star center plus its bridge
}

TEST_CASE("constructor validates endpoints") {
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), ValidationError);
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), ValidationError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}}, {"only-one"}), ValidationError);
}

TEST_CASE("standard families") {
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(star_graph(4).edge_count() == 3);
  CHECK(star_graph(4).degree(0) == 3);
  CHECK(complete_graph(1).edge_count() == 0);
}

TEST_CASE("connectivity and traversal") {
  Graph two_parts(4, {{0, 1}, {2, 3}});
  CHECK(!two_parts.is_connected());
  auto comp = two_parts.component_ids();
  CHECK(comp[0] == comp[1]);
  CHECK(comp[2] == comp[3]);
  CHECK(comp[0] != comp[2]);

  try {
    two_parts.require_connected("op");
    FAIL("expected DisconnectedError");
  } catch (const DisconnectedError& e) {
    CHECK(e.vertex_a == "0");
    CHECK(e.vertex_b == "2");
  }

  Graph p4 = path_graph(4);
  auto dist = p4.bfs_distances(0);
  CHECK(dist == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("edge-list serialization round-trips") {
  auto f = testsupport::chain_fixture();
  Graph back = Graph::parse(f.parent.to_edge_list());
  CHECK(back.vertex_count() == f.parent.vertex_count());
  CHECK(back.edge_count() == f.parent.edge_count());
  CHECK(back.has_edge(back.vertex_by_label("w1"), back.vertex_by_label("v2")));
}
