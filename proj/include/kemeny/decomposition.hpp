#pragma once

#include <utility>
#include <vector>

#include "kemeny/graph.hpp"

namespace kemeny {

// A bridge of the parent graph, endpoints as parent indices with x < y.
struct Bridge {
  int x = -1;
  int y = -1;

  friend bool operator==(const Bridge&, const Bridge&) = default;
  friend bool operator<(const Bridge& a, const Bridge& b) {
    return std::pair(a.x, a.y) < std::pair(b.x, b.y);
  }
};

// One DFS low-link pass. Requires a connected graph; result sorted by
// endpoint indices.
std::vector<Bridge> find_bridges(const Graph& g);

// A component of the parent graph minus the chosen bridges, re-indexed
// locally. to_parent maps local index -> parent index (ascending).
struct Component {
  Graph graph;
  std::vector<int> to_parent;
};

// A chosen bridge with the components and local indices it joins.
struct BridgeLink {
  Bridge edge;
  int comp_x = -1;
  int comp_y = -1;
  int local_x = -1;
  int local_y = -1;
};

// The parent graph split along a set of its bridges, together with the
// tree obtained by contracting each surviving component to one node.
class ChainDecomposition {
 public:
  ChainDecomposition(Graph parent, std::vector<Component> components,
                     std::vector<BridgeLink> bridges, Graph quotient_tree,
                     std::vector<int> comp_of, std::vector<int> local_of);

  const Graph& parent() const { return parent_; }
  const std::vector<Component>& components() const { return components_; }
  const std::vector<BridgeLink>& bridges() const { return bridges_; }
  const Graph& quotient_tree() const { return quotient_tree_; }
  int component_count() const { return static_cast<int>(components_.size()); }

  int component_of(int parent_vertex) const { return comp_of_[parent_vertex]; }
  int local_index(int parent_vertex) const { return local_of_[parent_vertex]; }
  int parent_index(int comp, int local) const {
    return components_[comp].to_parent[local];
  }

  // Index into bridges() of the bridge joining components i and j, or -1.
  int bridge_between(int i, int j) const;

  void require_vertex(int parent_vertex) const;
  void require_component(int comp) const;

 private:
  Graph parent_;
  std::vector<Component> components_;
  std::vector<BridgeLink> bridges_;
  Graph quotient_tree_;
  std::vector<int> comp_of_;
  std::vector<int> local_of_;
};

// Splits g along the given bridges (any subset of its bridges; components
// may keep bridges of their own). Rejects listed edges that are not
// bridges, naming a cycle through the offending edge.
ChainDecomposition decompose(const Graph& g, const std::vector<Bridge>& bridges);
// Splits along every bridge.
ChainDecomposition decompose(const Graph& g);

int quotient_tree_distance(const ChainDecomposition& d, int i, int j);

// The ladder of vertex pairs between v and w: one pair per component on
// the quotient-tree path, consecutive pairs joined by a bridge.
struct PairPath {
  struct Entry {
    int first;      // parent index
    int second;     // parent index
    int component;  // both endpoints live here
  };
  std::vector<Entry> entries;
};

PairPath pair_path(const ChainDecomposition& d, int v, int w);

// For each component i, the unique vertex of G_i incident to the bridge
// whose deletion separates G_i from the component of w; entry for w's own
// component is w itself. Parent indices.
std::vector<int> anchor_vertices(const ChainDecomposition& d, int w);

// Parent component of each quotient-tree node when rooted at `root`;
// -1 at the root itself.
std::vector<int> quotient_tree_component_parents(const ChainDecomposition& d, int root);

// One bridge endpoint, with the edge counts of the two sides of the
// parent graph split at that bridge. A vertex incident to several chosen
// bridges appears once per bridge.
struct ContactOccurrence {
  int bridge_index;      // into ChainDecomposition::bridges()
  int vertex;            // parent index
  int local_vertex;      // index within the owning component
  long long side_edges;  // edges of the split side containing the vertex
};

struct BridgeWeights {
  long long total_edges = 0;  // m of the parent graph
  // Per bridge: side_edges for the x and y endpoints (side_x + side_y ==
  // total_edges - 1).
  std::vector<std::pair<long long, long long>> per_bridge;
  // Per component: all bridge-endpoint occurrences, ordered by bridge
  // index. Occurrence count equals the quotient-tree degree.
  std::vector<std::vector<ContactOccurrence>> contacts;
  // Per component: the deduplicated sorted contact vertex set (parent
  // indices). Smaller than the occurrence list when bridges share an
  // endpoint.
  std::vector<std::vector<int>> contact_vertices;

  long long opposite_edges(const ContactOccurrence& occ) const {
    return total_edges - occ.side_edges;
  }
};

BridgeWeights bridge_weights(const ChainDecomposition& d);

// Builds the graph obtained by wiring the given components together along
// the tree: tree edge t joins endpoints[t] = (local vertex on the lower
// component side, local vertex on the higher side), following the order of
// tree.edges(). Vertex labels are prefixed with the component position.
Graph compose_chain(const std::vector<Graph>& components, const Graph& tree,
                    const std::vector<std::pair<int, int>>& endpoints);

}  // namespace kemeny
