#pragma once

#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "kemeny/decomposition.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/reference_graphs.hpp"

namespace kemeny::testsupport {

// The three-component reference chain with its named vertices resolved to
// parent indices.
struct ChainFixture {
  Graph parent;
  int v1, w1, v2, w2, v3, w3;
};

inline ChainFixture chain_fixture() {
  ChainFixture f{reference_graph("c4-k4-s4-chain"), 0, 0, 0, 0, 0, 0};
  f.v1 = f.parent.vertex_by_label("v1");
  f.w1 = f.parent.vertex_by_label("w1");
  f.v2 = f.parent.vertex_by_label("v2");
  f.w2 = f.parent.vertex_by_label("w2");
  f.v3 = f.parent.vertex_by_label("v3");
  f.w3 = f.parent.vertex_by_label("w3");
  return f;
}

inline Graph two_squares() { return reference_graph("two-squares"); }
inline Graph c5_chord() { return reference_graph("c5-chord"); }

// Uniform-attachment random tree (not uniform over all trees; fine for
// property tests).
inline Graph random_tree(std::mt19937& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  return Graph(n, std::move(edges));
}

// Random tree plus extra distinct edges.
inline Graph random_connected_graph(std::mt19937& rng, int n, int extra_edges) {
  Graph tree = random_tree(rng, n);
  std::set<std::pair<int, int>> edges(tree.edges().begin(), tree.edges().end());
  std::uniform_int_distribution<int> pick(0, n - 1);
  int budget = extra_edges * 4;
  while (extra_edges > 0 && budget-- > 0) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (edges.insert({a, b}).second) --extra_edges;
  }
  return Graph(n, {edges.begin(), edges.end()});
}

// A chain of random connected components over a random tree; guaranteed to
// have at least k-1 bridges.
inline Graph random_bridged_graph(std::mt19937& rng, int components, int max_comp_size,
                                  int extra_edges_per_comp = 2) {
  std::vector<Graph> comps;
  std::uniform_int_distribution<int> size_pick(1, max_comp_size);
  for (int c = 0; c < components; ++c) {
    int n = size_pick(rng);
    std::uniform_int_distribution<int> extra(0, extra_edges_per_comp);
    comps.push_back(random_connected_graph(rng, n, n >= 3 ? extra(rng) : 0));
  }
  Graph tree = random_tree(rng, components);
  std::vector<std::pair<int, int>> endpoints;
  for (const auto& [ci, cj] : tree.edges()) {
    std::uniform_int_distribution<int> pa(0, comps[ci].vertex_count() - 1);
    std::uniform_int_distribution<int> pb(0, comps[cj].vertex_count() - 1);
    endpoints.emplace_back(pa(rng), pb(rng));
  }
  return compose_chain(comps, tree, endpoints);
}

// Labeled tree from a Pruefer sequence over n = seq.size() + 2 nodes.
inline Graph prufer_decode(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> remaining_degree(n, 1);
  for (int s : seq) ++remaining_degree[s];
  std::vector<std::pair<int, int>> edges;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (remaining_degree[v] == 1) leaves.insert(v);
  for (int s : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, s);
    if (--remaining_degree[s] == 1) leaves.insert(s);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

// Calls fn with every connected labeled graph on exactly n vertices.
template <typename Fn>
void for_each_connected_graph(int n, Fn&& fn) {
  std::vector<std::pair<int, int>> all_edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all_edges.emplace_back(i, j);
  const int m = static_cast<int>(all_edges.size());
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    // quick connectivity over adjacency bitsets
    std::vector<unsigned> adj(n, 0);
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) {
        adj[all_edges[e].first] |= 1u << all_edges[e].second;
        adj[all_edges[e].second] |= 1u << all_edges[e].first;
      }
    unsigned seen = 1u;
    unsigned frontier = 1u;
    while (frontier) {
      unsigned next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier >> v & 1) next |= adj[v];
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != (1u << n) - 1) continue;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) edges.push_back(all_edges[e]);
    fn(Graph(n, std::move(edges)));
  }
}

}  // namespace kemeny::testsupport
