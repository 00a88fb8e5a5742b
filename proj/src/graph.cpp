#include "kemeny/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "kemeny/errors.hpp"

namespace kemeny {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels)
    : n_(vertex_count) {
  if (vertex_count < 0) throw ValidationError("vertex count must be non-negative");
  for (auto& [a, b] : edges) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw ValidationError("edge endpoint out of range: " + std::to_string(a) +
                            "-" + std::to_string(b));
    if (a == b)
      throw ValidationError("self-loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  if (labels.empty()) {
    labels_.reserve(n_);
    for (int v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
  } else {
    if (static_cast<int>(labels.size()) != n_)
      throw ValidationError("label count does not match vertex count");
    labels_ = std::move(labels);
  }

  adj_.assign(n_, {});
  for (const auto& [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::parse(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index_of;

  auto intern = [&](const std::string& label) {
    auto it = index_of.find(label);
    if (it != index_of.end()) return it->second;
    int id = static_cast<int>(labels.size());
    index_of.emplace(label, id);
    labels.push_back(label);
    return id;
  };

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected two vertex labels, got " +
                       std::to_string(tokens.size()));
    int a = intern(tokens[0]);
    int b = intern(tokens[1]);
    if (a == b)
      throw ValidationError("line " + std::to_string(line_no) + ": self-loop at '" +
                            tokens[0] + "'");
    edges.emplace_back(a, b);
  }
  return Graph(static_cast<int>(labels.size()), std::move(edges), std::move(labels));
}

Graph Graph::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::vector<long long> Graph::degrees() const {
  std::vector<long long> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

int Graph::vertex_by_label(const std::string& label) const {
  for (int v = 0; v < n_; ++v)
    if (labels_[v] == label) return v;
  return -1;
}

std::vector<int> Graph::component_ids() const {
  std::vector<int> comp(n_, -1);
  int next = 0;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj_[v])
        if (comp[w] == -1) {
          comp[w] = next;
          q.push(w);
        }
    }
    ++next;
  }
  return comp;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  auto comp = component_ids();
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::vector<int> Graph::bfs_distances(int source) const {
  std::vector<int> dist(n_, -1);
  dist[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj_[v])
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

void Graph::require_connected(const std::string& operation) const {
  if (is_connected()) return;
  auto comp = component_ids();
  int a = 0;
  int b = -1;
  for (int v = 0; v < n_; ++v)
    if (comp[v] != comp[a]) {
      b = v;
      break;
    }
  throw DisconnectedError(operation + ": graph is disconnected; no path between '" +
                              labels_[a] + "' and '" + labels_[b] + "'",
                          labels_[a], labels_[b]);
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  for (const auto& [a, b] : edges_) out << labels_[a] << ' ' << labels_[b] << '\n';
  return out.str();
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, std::move(edges));
}

}  // namespace kemeny
