#include "kemeny/optimizer.hpp"

#include <algorithm>

#include "kemeny/errors.hpp"

namespace kemeny {

namespace {

void require_tree(const Graph& t, const char* op) {
  if (t.vertex_count() == 0) throw ValidationError(std::string(op) + ": empty graph");
  if (t.edge_count() != t.vertex_count() - 1 || !t.is_connected())
    throw ValidationError(std::string(op) + ": input is not a tree");
}

// Subtree sizes with the tree rooted at 0, plus the BFS order and parents.
struct RootedTree {
  std::vector<int> parent;
  std::vector<int> order;
  std::vector<int> subtree_size;
};

RootedTree root_tree(const Graph& t) {
  const int n = t.vertex_count();
  RootedTree r;
  r.parent.assign(n, -1);
  r.subtree_size.assign(n, 1);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  r.order.push_back(0);
  for (size_t h = 0; h < r.order.size(); ++h) {
    int v = r.order[h];
    for (int w : t.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        r.parent[w] = v;
        r.order.push_back(w);
      }
  }
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it)
    if (r.parent[*it] != -1) r.subtree_size[r.parent[*it]] += r.subtree_size[*it];
  return r;
}

}  // namespace

std::vector<int> tree_centroids(const Graph& t) {
  require_tree(t, "tree_centroids");
  const int n = t.vertex_count();
  if (n == 1) return {0};
  RootedTree r = root_tree(t);

  std::vector<int> centroids;
  for (int v = 0; v < n; ++v) {
    int largest_branch = n - r.subtree_size[v];  // the side containing the root
    for (int w : t.neighbors(v))
      if (w != r.parent[v]) largest_branch = std::max(largest_branch, r.subtree_size[w]);
    if (largest_branch <= n / 2) centroids.push_back(v);
  }
  std::sort(centroids.begin(), centroids.end());
  return centroids;
}

TreeCost tree_cost(const Graph& t) {
  require_tree(t, "tree_cost");
  const int n = t.vertex_count();
  if (n < 2) throw ValidationError("tree_cost: need at least two nodes");
  RootedTree r = root_tree(t);
  TreeCost out;
  out.tree = t;
  for (int v = 0; v < n; ++v)
    if (r.parent[v] != -1)
      out.cost += static_cast<long long>(r.subtree_size[v]) * (n - r.subtree_size[v]);
  return out;
}

}  // namespace kemeny
