#include <doctest.h>

#include <algorithm>
#include <random>

#include "kemeny/decomposition.hpp"
#include "kemeny/errors.hpp"
#include "support.hpp"

using namespace kemeny;
using namespace kemeny::testsupport;

namespace {

// Quadratic reference: an edge is a bridge iff removing it disconnects.
std::vector<Bridge> bridges_by_deletion(const Graph& g) {
  std::vector<Bridge> out;
  for (const auto& [a, b] : g.edges()) {
    std::vector<std::pair<int, int>> rest;
    for (const auto& e : g.edges())
      if (e != std::make_pair(a, b)) rest.push_back(e);
    if (!Graph(g.vertex_count(), rest).is_connected()) out.push_back({a, b});
  }
  return out;
}

}  // namespace

TEST_CASE("every tree edge is a bridge") {
  auto bridges = find_bridges(path_graph(3));
  REQUIRE(bridges.size() == 2);
  CHECK(bridges[0] == Bridge{0, 1});
  CHECK(bridges[1] == Bridge{1, 2});
}

TEST_CASE("cycles have no bridges") { CHECK(find_bridges(cycle_graph(4)).empty()); }

TEST_CASE("reference chain has exactly its two joining bridges") {
  auto f = chain_fixture();
  auto bridges = find_bridges(f.parent);
  REQUIRE(bridges.size() == 2);
  CHECK(bridges[0] == Bridge{std::min(f.w1, f.v2), std::max(f.w1, f.v2)});
  CHECK(bridges[1] == Bridge{std::min(f.w2, f.v3), std::max(f.w2, f.v3)});
}

TEST_CASE("find_bridges requires a connected graph") {
  CHECK_THROWS_AS(find_bridges(Graph(4, {{0, 1}, {2, 3}})), DisconnectedError);
}

TEST_CASE("low-link pass agrees with the deletion oracle") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 60; ++round) {
    std::uniform_int_distribution<int> n_pick(2, 28);
    int n = n_pick(rng);
    std::uniform_int_distribution<int> extra(0, std::min(200 - (n - 1), n * 2));
    Graph g = random_connected_graph(rng, n, extra(rng));
    CHECK(find_bridges(g) == bridges_by_deletion(g));
  }
}

TEST_CASE("decompose with no bridges keeps one component") {
  auto d = decompose(cycle_graph(4), {});
  CHECK(d.component_count() == 1);
  CHECK(d.quotient_tree().vertex_count() == 1);
  CHECK(d.quotient_tree().edge_count() == 0);
  CHECK(d.bridges().empty());
}

TEST_CASE("decompose splits the reference chain into its three parts") {
  auto f = chain_fixture();
  auto d = decompose(f.parent);
  REQUIRE(d.component_count() == 3);
  const auto& comps = d.components();
  CHECK(comps[0].graph.vertex_count() == 4);
  CHECK(comps[0].graph.edge_count() == 4);  // the 4-cycle
  CHECK(comps[1].graph.vertex_count() == 4);
  CHECK(comps[1].graph.edge_count() == 6);  // the complete graph
  CHECK(comps[2].graph.vertex_count() == 4);
  CHECK(comps[2].graph.edge_count() == 3);  // the star
  CHECK(d.quotient_tree().edge_count() == 2);
  // path quotient: degrees 1,2,1
  std::vector<int> degs;
  for (int c = 0; c < 3; ++c) degs.push_back(d.quotient_tree().degree(c));
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{1, 1, 2});
  // labels survive into components
  CHECK(comps[0].graph.vertex_by_label("v1") != -1);
  CHECK(comps[2].graph.vertex_by_label("w3") != -1);
}

TEST_CASE("decompose of a path yields singleton components") {
  auto d = decompose(path_graph(4));
  CHECK(d.component_count() == 4);
  for (const auto& c : d.components()) {
    CHECK(c.graph.vertex_count() == 1);
    CHECK(c.graph.edge_count() == 0);
  }
  CHECK(d.quotient_tree().edge_count() == 3);
}

TEST_CASE("decompose rejects non-bridges and names a cycle") {
  Graph c4 = cycle_graph(4);
  CHECK_THROWS_WITH_AS(decompose(c4, {{0, 1}}), doctest::Contains("cycle"),
                       ValidationError);
  CHECK_THROWS_AS(decompose(c4, {{0, 2}}), ValidationError);  // not even an edge
}

TEST_CASE("decompose accepts a subset of the bridges") {
  auto f = chain_fixture();
  Bridge first{std::min(f.w1, f.v2), std::max(f.w1, f.v2)};
  auto d = decompose(f.parent, {first});
  CHECK(d.component_count() == 2);
  CHECK(d.components()[0].graph.vertex_count() == 4);
  CHECK(d.components()[1].graph.vertex_count() == 8);
  CHECK(d.components()[1].graph.edge_count() == 10);  // keeps its interior bridge
}

TEST_CASE("quotient tree distances") {
  auto f = chain_fixture();
  auto d = decompose(f.parent);
  CHECK(quotient_tree_distance(d, 1, 1) == 0);
  CHECK(quotient_tree_distance(d, d.component_of(f.v1), d.component_of(f.w3)) == 2);
  CHECK_THROWS_AS(quotient_tree_distance(d, 0, 7), ValidationError);

  auto star = decompose(star_graph(4));  // center plus three leaves
  for (int leaf = 1; leaf < 4; ++leaf)
    CHECK(quotient_tree_distance(star, star.component_of(0), star.component_of(leaf)) == 1);
}

TEST_CASE("pair path within one component is the single pair") {
  auto f = chain_fixture();
  auto d = decompose(f.parent);
  auto pp = pair_path(d, f.v1, f.w1);
  REQUIRE(pp.entries.size() == 1);
  CHECK(pp.entries[0].first == f.v1);
  CHECK(pp.entries[0].second == f.w1);

  auto self = pair_path(d, f.v2, f.v2);
  REQUIRE(self.entries.size() == 1);
  CHECK(self.entries[0].first == f.v2);
  CHECK(self.entries[0].second == f.v2);
}

TEST_CASE("pair path across the reference chain") {
  auto f = chain_fixture();
  auto d = decompose(f.parent);
  auto pp = pair_path(d, f.v1, f.w3);
  REQUIRE(pp.entries.size() == 3);
  CHECK(pp.entries[0].first == f.v1);
  CHECK(pp.entries[0].second == f.w1);
  CHECK(pp.entries[1].first == f.v2);
  CHECK(pp.entries[1].second == f.w2);
  CHECK(pp.entries[2].first == f.v3);
  CHECK(pp.entries[2].second == f.w3);
}

TEST_CASE("pair path properties on random chains") {
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    Graph g = random_bridged_graph(rng, 4, 4);
    auto d = decompose(g);
    std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
    for (int t = 0; t < 10; ++t) {
      int v = pick(rng), w = pick(rng);
      auto forward = pair_path(d, v, w);
      auto backward = pair_path(d, w, v);
      REQUIRE(forward.entries.size() == backward.entries.size());
      const size_t len = forward.entries.size();
      CHECK(static_cast<int>(len) ==
            quotient_tree_distance(d, d.component_of(v), d.component_of(w)) + 1);
      for (size_t i = 0; i < len; ++i) {
        CHECK(forward.entries[i].first == backward.entries[len - 1 - i].second);
        CHECK(forward.entries[i].second == backward.entries[len - 1 - i].first);
        CHECK(d.component_of(forward.entries[i].first) == forward.entries[i].component);
        CHECK(d.component_of(forward.entries[i].second) == forward.entries[i].component);
      }
    }
  }
}

TEST_CASE("anchors of the reference chain") {
  auto f = chain_fixture();
  auto d = decompose(f.parent);
  auto anchors = anchor_vertices(d, f.w3);
  CHECK(anchors[d.component_of(f.v1)] == f.w1);
  CHECK(anchors[d.component_of(f.v2)] == f.w2);
  CHECK(anchors[d.component_of(f.w3)] == f.w3);
}

TEST_CASE("anchor of a lone component is the vertex itself") {
  auto d = decompose(cycle_graph(4), {});
  auto anchors = anchor_vertices(d, 2);
  REQUIRE(anchors.size() == 1);
  CHECK(anchors[0] == 2);
}

TEST_CASE("anchors of a singleton path point along the path") {
  auto d = decompose(path_graph(4));
  auto anchors = anchor_vertices(d, 0);
  // each component is one vertex, so every anchor is that vertex
  for (int c = 0; c < 4; ++c) CHECK(anchors[c] == d.components()[c].to_parent[0]);
}

TEST_CASE("anchors land in the contact sets") {
  std::mt19937 rng(11);
  for (int round = 0; round < 15; ++round) {
    Graph g = random_bridged_graph(rng, 5, 4);
    auto d = decompose(g);
    auto w = bridge_weights(d);
    std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
    int target = pick(rng);
    auto anchors = anchor_vertices(d, target);
    for (int c = 0; c < d.component_count(); ++c) {
      if (c == d.component_of(target)) continue;
      const auto& set = w.contact_vertices[c];
      CHECK(std::find(set.begin(), set.end(), anchors[c]) != set.end());
    }
  }
}

TEST_CASE("bridge weights of the reference chain") {
  auto f = chain_fixture();
  auto d = decompose(f.parent);
  auto w = bridge_weights(d);
  REQUIRE(w.per_bridge.size() == 2);
  const long long m = w.total_edges;
  CHECK(m == 15);

  auto side_of = [&](int vertex) -> long long {
    for (const auto& comp : w.contacts)
      for (const auto& occ : comp)
        if (occ.vertex == vertex) return occ.side_edges;
    FAIL("vertex not found among contacts");
    return -1;
  };
  CHECK(side_of(f.w1) == 4);            // W_{w1}
  CHECK(side_of(f.w2) == 11);           // W_{w2}
  CHECK(m - side_of(f.v2) == 5);        // opposite count at v2
  CHECK(m - side_of(f.v3) == 12);       // opposite count at v3
}

TEST_CASE("single component has empty weights") {
  auto d = decompose(cycle_graph(4), {});
  auto w = bridge_weights(d);
  CHECK(w.per_bridge.empty());
  CHECK(w.contacts[0].empty());
  CHECK(w.contact_vertices[0].empty());
}

TEST_CASE("bridge weight invariants on random chains") {
  std::mt19937 rng(13);
  for (int round = 0; round < 25; ++round) {
    Graph g = random_bridged_graph(rng, 6, 4);
    auto d = decompose(g);
    auto w = bridge_weights(d);
    const long long m = w.total_edges;
    for (size_t t = 0; t < w.per_bridge.size(); ++t) {
      auto [side_x, side_y] = w.per_bridge[t];
      CHECK(side_x + side_y == m - 1);
      // opposite(x) = side(y) + 1 and the symmetric statement
      CHECK(m - side_x == side_y + 1);
      CHECK((m - side_x) + (m - side_y) == m + 1);
    }
    for (int c = 0; c < d.component_count(); ++c) {
      CHECK(static_cast<int>(w.contacts[c].size()) == d.quotient_tree().degree(c));
      CHECK(w.contact_vertices[c].size() <= w.contacts[c].size());
    }
  }
}

TEST_CASE("compose_chain then decompose returns the same shape") {
  std::vector<Graph> comps{cycle_graph(4), complete_graph(4), star_graph(4)};
  Graph tree = path_graph(3);
  Graph parent = compose_chain(comps, tree, {{2, 0}, {3, 0}});
  auto d = decompose(parent);
  CHECK(d.component_count() == 3);
  CHECK(parent.edge_count() == 15);
  CHECK(d.quotient_tree().edge_count() == 2);
}

TEST_CASE("compose_chain validates its inputs") {
  std::vector<Graph> comps{cycle_graph(4), complete_graph(4)};
  CHECK_THROWS_AS(compose_chain(comps, path_graph(3), {{0, 0}, {0, 0}}), ValidationError);
  CHECK_THROWS_AS(compose_chain(comps, path_graph(2), {}), ValidationError);
  CHECK_THROWS_AS(compose_chain(comps, path_graph(2), {{0, 9}}), ValidationError);
}
