#include "kemeny/forest_oracle.hpp"

#include <cstdint>
#include <string>

#include "kemeny/errors.hpp"

namespace kemeny {

namespace {

void check_limit(const Graph& g, int edge_limit, const char* op) {
  if (g.edge_count() > edge_limit)
    throw SizeLimitError(std::string(op) + ": " + std::to_string(g.edge_count()) +
                             " edges exceed the enumeration limit " +
                             std::to_string(edge_limit) +
                             "; use the matrix-tree computation instead",
                         edge_limit);
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // false if already joined
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Visits every edge subset of the given size as a bitmask (Gosper's hack).
template <typename Fn>
void for_each_subset(int edge_count, int subset_size, Fn&& fn) {
  if (subset_size < 0 || subset_size > edge_count) return;
  if (subset_size == 0) {
    fn(uint32_t{0});
    return;
  }
  const uint32_t end = uint32_t{1} << edge_count;
  uint32_t mask = (uint32_t{1} << subset_size) - 1;
  while (mask < end) {
    fn(mask);
    uint32_t low = mask & -mask;
    uint32_t ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
}

}  // namespace

BigInt enumerate_spanning_trees(const Graph& g, int edge_limit) {
  g.require_connected("enumerate_spanning_trees");
  check_limit(g, edge_limit, "enumerate_spanning_trees");
  const int n = g.vertex_count();
  if (n <= 1) return BigInt(1);
  const auto& edges = g.edges();
  BigInt count(0);
  for_each_subset(static_cast<int>(edges.size()), n - 1, [&](uint32_t mask) {
    UnionFind uf(n);
    for (uint32_t bits = mask; bits; bits &= bits - 1) {
      int e = __builtin_ctz(bits);
      if (!uf.unite(edges[e].first, edges[e].second)) return;  // cycle
    }
    count += 1;  // n-1 acyclic edges span a single tree
  });
  return count;
}

ForestCount forest_count_matrix(const Graph& g, int edge_limit) {
  g.require_connected("forest_count_matrix");
  check_limit(g, edge_limit, "forest_count_matrix");
  const int n = g.vertex_count();
  ForestCount out;
  out.pair_counts = Matrix<BigInt>(n, n, BigInt(0));
  out.tree_count = enumerate_spanning_trees(g, edge_limit);
  if (n < 2) return out;

  const auto& edges = g.edges();
  std::vector<int> side_a, side_b;
  for_each_subset(static_cast<int>(edges.size()), n - 2, [&](uint32_t mask) {
    UnionFind uf(n);
    for (uint32_t bits = mask; bits; bits &= bits - 1) {
      int e = __builtin_ctz(bits);
      if (!uf.unite(edges[e].first, edges[e].second)) return;
    }
    // n-2 acyclic edges: exactly two trees. Attribute the forest to every
    // separated pair.
    int root_a = uf.find(0);
    side_a.clear();
    side_b.clear();
    for (int v = 0; v < n; ++v)
      (uf.find(v) == root_a ? side_a : side_b).push_back(v);
    for (int a : side_a)
      for (int b : side_b) {
        out.pair_counts(a, b) += 1;
        out.pair_counts(b, a) += 1;
      }
  });
  return out;
}

BigInt two_tree_forest_count(const Graph& g, int i, int j, int edge_limit) {
  g.require_connected("two_tree_forest_count");
  check_limit(g, edge_limit, "two_tree_forest_count");
  const int n = g.vertex_count();
  if (i < 0 || i >= n || j < 0 || j >= n || i == j)
    throw ValidationError("two_tree_forest_count: need two distinct vertices");
  const auto& edges = g.edges();
  BigInt count(0);
  for_each_subset(static_cast<int>(edges.size()), n - 2, [&](uint32_t mask) {
    UnionFind uf(n);
    for (uint32_t bits = mask; bits; bits &= bits - 1) {
      int e = __builtin_ctz(bits);
      if (!uf.unite(edges[e].first, edges[e].second)) return;
    }
    if (uf.find(i) != uf.find(j)) count += 1;
  });
  return count;
}

Rational kemeny_via_forests(const Graph& g, int edge_limit) {
  g.require_connected("kemeny_via_forests");
  if (g.vertex_count() < 2)
    throw ValidationError("kemeny_via_forests: undefined on a single vertex");
  ForestCount fc = forest_count_matrix(g, edge_limit);
  const int n = g.vertex_count();
  BigInt quad(0);
  for (int i = 0; i < n; ++i) {
    BigInt row(0);
    for (int j = 0; j < n; ++j) row += fc.pair_counts(i, j) * g.degree(j);
    quad += row * g.degree(i);
  }
  Rational kappa(quad, BigInt(4 * g.edge_count()) * fc.tree_count);
  kappa.canonicalize();
  return kappa;
}

}  // namespace kemeny
