#include "kemeny/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "kemeny/errors.hpp"

namespace kemeny {

std::vector<Bridge> find_bridges(const Graph& g) {
  g.require_connected("find_bridges");
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next_child(n, 0);
  std::vector<Bridge> bridges;
  int timer = 0;

  // Iterative DFS so deep paths (long chains) cannot overflow the stack.
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<int> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      int v = stack.back();
      if (next_child[v] < g.degree(v)) {
        int w = g.neighbors(v)[next_child[v]++];
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        int p = parent[v];
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p])
            bridges.push_back({std::min(p, v), std::max(p, v)});
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

ChainDecomposition::ChainDecomposition(Graph parent, std::vector<Component> components,
                                       std::vector<BridgeLink> bridges,
                                       Graph quotient_tree, std::vector<int> comp_of,
                                       std::vector<int> local_of)
    : parent_(std::move(parent)),
      components_(std::move(components)),
      bridges_(std::move(bridges)),
      quotient_tree_(std::move(quotient_tree)),
      comp_of_(std::move(comp_of)),
      local_of_(std::move(local_of)) {}

int ChainDecomposition::bridge_between(int i, int j) const {
  for (size_t t = 0; t < bridges_.size(); ++t) {
    const auto& b = bridges_[t];
    if ((b.comp_x == i && b.comp_y == j) || (b.comp_x == j && b.comp_y == i))
      return static_cast<int>(t);
  }
  return -1;
}

void ChainDecomposition::require_vertex(int parent_vertex) const {
  if (parent_vertex < 0 || parent_vertex >= parent_.vertex_count())
    throw ValidationError("vertex index out of range: " + std::to_string(parent_vertex));
}

void ChainDecomposition::require_component(int comp) const {
  if (comp < 0 || comp >= component_count())
    throw ValidationError("component id out of range: " + std::to_string(comp));
}

namespace {

// A cycle through a non-bridge edge: shortest path between its endpoints
// avoiding the edge itself, reported by vertex labels.
std::string cycle_through_edge(const Graph& g, int u, int v) {
  const int n = g.vertex_count();
  std::vector<int> prev(n, -2);
  prev[u] = -1;
  std::queue<int> q;
  q.push(u);
  while (!q.empty() && prev[v] == -2) {
    int a = q.front();
    q.pop();
    for (int b : g.neighbors(a)) {
      if (a == u && b == v) continue;  // skip the edge under test
      if (prev[b] == -2) {
        prev[b] = a;
        q.push(b);
      }
    }
  }
  std::ostringstream out;
  std::vector<int> path;
  for (int x = v; x != -1; x = prev[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out << " - ";
    out << g.label(path[i]);
  }
  out << " - " << g.label(u);
  return out.str();
}

}  // namespace

ChainDecomposition decompose(const Graph& g, const std::vector<Bridge>& bridges) {
  g.require_connected("decompose");
  const int n = g.vertex_count();

  auto actual = find_bridges(g);
  std::set<std::pair<int, int>> bridge_set;
  for (const auto& b : actual) bridge_set.insert({b.x, b.y});
  std::set<std::pair<int, int>> chosen;
  for (auto b : bridges) {
    if (b.x > b.y) std::swap(b.x, b.y);
    if (!g.has_edge(b.x, b.y))
      throw ValidationError("edge " + g.label(b.x) + "-" + g.label(b.y) +
                            " is not in the graph");
    if (!bridge_set.count({b.x, b.y}))
      throw ValidationError("edge " + g.label(b.x) + "-" + g.label(b.y) +
                            " is not a bridge; it lies on the cycle " +
                            cycle_through_edge(g, b.x, b.y));
    chosen.insert({b.x, b.y});
  }

  // Components of g minus the chosen bridges, numbered by smallest vertex.
  std::vector<int> comp_of(n, -1);
  int comp_count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp_of[s] != -1) continue;
    comp_of[s] = comp_count;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        auto key = std::minmax(v, w);
        if (chosen.count({key.first, key.second})) continue;
        if (comp_of[w] == -1) {
          comp_of[w] = comp_count;
          q.push(w);
        }
      }
    }
    ++comp_count;
  }

  std::vector<Component> components(comp_count);
  std::vector<int> local_of(n, -1);
  for (int v = 0; v < n; ++v) {
    auto& tp = components[comp_of[v]].to_parent;
    local_of[v] = static_cast<int>(tp.size());
    tp.push_back(v);
  }
  for (int c = 0; c < comp_count; ++c) {
    auto& comp = components[c];
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    labels.reserve(comp.to_parent.size());
    for (int pv : comp.to_parent) labels.push_back(g.label(pv));
    for (const auto& [a, b] : g.edges()) {
      if (chosen.count({a, b})) continue;
      if (comp_of[a] == c) edges.emplace_back(local_of[a], local_of[b]);
    }
    comp.graph = Graph(static_cast<int>(comp.to_parent.size()), std::move(edges),
                       std::move(labels));
  }

  std::vector<BridgeLink> links;
  std::vector<std::pair<int, int>> tree_edges;
  for (const auto& [x, y] : chosen) {
    BridgeLink link;
    link.edge = {x, y};
    link.comp_x = comp_of[x];
    link.comp_y = comp_of[y];
    link.local_x = local_of[x];
    link.local_y = local_of[y];
    links.push_back(link);
    tree_edges.emplace_back(link.comp_x, link.comp_y);
  }
  std::vector<std::string> tree_labels;
  for (int c = 0; c < comp_count; ++c)
    tree_labels.push_back(g.label(components[c].to_parent[0]));
  Graph quotient_tree(comp_count, std::move(tree_edges), std::move(tree_labels));

  return ChainDecomposition(g, std::move(components), std::move(links),
                            std::move(quotient_tree), std::move(comp_of),
                            std::move(local_of));
}

ChainDecomposition decompose(const Graph& g) { return decompose(g, find_bridges(g)); }

int quotient_tree_distance(const ChainDecomposition& d, int i, int j) {
  d.require_component(i);
  d.require_component(j);
  if (i == j) return 0;
  return d.quotient_tree().bfs_distances(i)[j];
}

namespace {

// Parent pointers of the quotient tree rooted at `root`.
std::vector<int> tree_parents(const Graph& tree, int root) {
  std::vector<int> parent(tree.vertex_count(), -1);
  std::vector<bool> seen(tree.vertex_count(), false);
  seen[root] = true;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : tree.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        q.push(w);
      }
  }
  return parent;
}

}  // namespace

PairPath pair_path(const ChainDecomposition& d, int v, int w) {
  d.require_vertex(v);
  d.require_vertex(w);
  const int ci = d.component_of(v);
  const int cj = d.component_of(w);
  PairPath path;
  if (ci == cj) {
    path.entries.push_back({v, w, ci});
    return path;
  }
  // Component path ci -> cj along the quotient tree.
  auto parent = tree_parents(d.quotient_tree(), cj);
  std::vector<int> comps;
  for (int c = ci; c != -1; c = parent[c]) comps.push_back(c);

  int entry_vertex = v;
  for (size_t m = 0; m < comps.size(); ++m) {
    int exit_vertex;
    if (m + 1 < comps.size()) {
      int b = d.bridge_between(comps[m], comps[m + 1]);
      const auto& link = d.bridges()[b];
      exit_vertex = (link.comp_x == comps[m]) ? link.edge.x : link.edge.y;
    } else {
      exit_vertex = w;
    }
    path.entries.push_back({entry_vertex, exit_vertex, comps[m]});
    if (m + 1 < comps.size()) {
      int b = d.bridge_between(comps[m], comps[m + 1]);
      const auto& link = d.bridges()[b];
      entry_vertex = (link.comp_x == comps[m + 1]) ? link.edge.x : link.edge.y;
    }
  }
  return path;
}

std::vector<int> quotient_tree_component_parents(const ChainDecomposition& d, int root) {
  d.require_component(root);
  return tree_parents(d.quotient_tree(), root);
}

std::vector<int> anchor_vertices(const ChainDecomposition& d, int w) {
  d.require_vertex(w);
  const int k0 = d.component_of(w);
  auto parent = tree_parents(d.quotient_tree(), k0);
  std::vector<int> anchor(d.component_count(), -1);
  anchor[k0] = w;
  for (int c = 0; c < d.component_count(); ++c) {
    if (c == k0) continue;
    int b = d.bridge_between(c, parent[c]);
    const auto& link = d.bridges()[b];
    anchor[c] = (link.comp_x == c) ? link.edge.x : link.edge.y;
  }
  return anchor;
}

BridgeWeights bridge_weights(const ChainDecomposition& d) {
  BridgeWeights w;
  w.total_edges = d.parent().edge_count();
  const int k = d.component_count();
  w.contacts.assign(k, {});
  w.contact_vertices.assign(k, {});
  w.per_bridge.assign(d.bridges().size(), {0, 0});

  // Root the quotient tree and accumulate, for every component, the edge
  // total of the whole subtree hanging below it (component edges plus the
  // bridges interior to the subtree). The two sides of bridge t are then
  // the child subtree and its complement.
  std::vector<long long> subtree_edges(k);
  for (int c = 0; c < k; ++c) subtree_edges[c] = d.components()[c].graph.edge_count();

  auto parent = tree_parents(d.quotient_tree(), 0);
  std::vector<int> order;  // BFS order from the root
  {
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
      int c = q.front();
      q.pop();
      order.push_back(c);
      for (int nb : d.quotient_tree().neighbors(c))
        if (nb != parent[c]) q.push(nb);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] != -1) subtree_edges[parent[*it]] += subtree_edges[*it] + 1;

  for (size_t t = 0; t < d.bridges().size(); ++t) {
    const auto& link = d.bridges()[t];
    // The child side of the tree edge underlying bridge t.
    int child = (parent[link.comp_x] == link.comp_y) ? link.comp_x : link.comp_y;
    long long child_side = subtree_edges[child];
    long long other_side = w.total_edges - 1 - child_side;
    long long side_x = (child == link.comp_x) ? child_side : other_side;
    long long side_y = w.total_edges - 1 - side_x;
    w.per_bridge[t] = {side_x, side_y};

    w.contacts[link.comp_x].push_back(
        {static_cast<int>(t), link.edge.x, link.local_x, side_x});
    w.contacts[link.comp_y].push_back(
        {static_cast<int>(t), link.edge.y, link.local_y, side_y});
  }

  for (int c = 0; c < k; ++c) {
    std::sort(w.contacts[c].begin(), w.contacts[c].end(),
              [](const ContactOccurrence& a, const ContactOccurrence& b) {
                return a.bridge_index < b.bridge_index;
              });
    std::vector<int> verts;
    for (const auto& occ : w.contacts[c]) verts.push_back(occ.vertex);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    w.contact_vertices[c] = std::move(verts);
  }
  return w;
}

Graph compose_chain(const std::vector<Graph>& components, const Graph& tree,
                    const std::vector<std::pair<int, int>>& endpoints) {
  const int k = static_cast<int>(components.size());
  if (tree.vertex_count() != k)
    throw ValidationError("tree has " + std::to_string(tree.vertex_count()) +
                          " nodes but " + std::to_string(k) + " components given");
  if (k >= 2) {
    if (tree.edge_count() != k - 1 || !tree.is_connected())
      throw ValidationError("component arrangement graph is not a tree");
  }
  if (endpoints.size() != tree.edges().size())
    throw ValidationError("need one endpoint pair per tree edge");

  std::vector<int> offset(k + 1, 0);
  for (int c = 0; c < k; ++c) offset[c + 1] = offset[c] + components[c].vertex_count();

  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (int c = 0; c < k; ++c) {
    for (const auto& [a, b] : components[c].edges())
      edges.emplace_back(offset[c] + a, offset[c] + b);
    for (int v = 0; v < components[c].vertex_count(); ++v)
      labels.push_back(std::to_string(c) + ":" + components[c].label(v));
  }
  for (size_t t = 0; t < tree.edges().size(); ++t) {
    auto [ci, cj] = tree.edges()[t];
    auto [vi, vj] = endpoints[t];
    if (vi < 0 || vi >= components[ci].vertex_count() || vj < 0 ||
        vj >= components[cj].vertex_count())
      throw ValidationError("endpoint out of range for tree edge " + std::to_string(t));
    edges.emplace_back(offset[ci] + vi, offset[cj] + vj);
  }
  return Graph(offset[k], std::move(edges), std::move(labels));
}

}  // namespace kemeny
