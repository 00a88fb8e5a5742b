#pragma once

#include <string>
#include <utility>
#include <vector>

namespace kemeny {

// Simple undirected graph over dense vertex indices. Vertices keep the
// label they had in the source document; edges are stored as sorted
// unordered pairs with duplicates collapsed. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Validates: indices in range, no self-loops. Duplicate edges collapse.
  // Missing labels default to the decimal index.
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
        std::vector<std::string> labels = {});

  // Parses an edge-list document: one edge per line as two whitespace
  // separated labels, '#' starts a comment, blank lines ignored. Labels
  // are assigned dense indices in order of first appearance.
  static Graph parse(const std::string& text);
  static Graph parse_file(const std::string& path);

  int vertex_count() const { return n_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::vector<long long> degrees() const;
  bool has_edge(int u, int v) const;

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Index of the vertex carrying `label`, or -1.
  int vertex_by_label(const std::string& label) const;

  bool is_connected() const;
  // Per-vertex component index, numbered by smallest contained vertex.
  std::vector<int> component_ids() const;
  // Hop distances from `source`; -1 for unreachable vertices.
  std::vector<int> bfs_distances(int source) const;

  // Throws DisconnectedError naming two unreachable vertices.
  void require_connected(const std::string& operation) const;

  std::string to_edge_list() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
};

// Constructors for the standard families used throughout the tests and the
// benchmark generator. Vertices are labelled by index; cycles run 0..n-1 in
// order; star center is vertex 0.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);

}  // namespace kemeny
