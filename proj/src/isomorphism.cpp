#include "kemeny/isomorphism.hpp"

#include <algorithm>
#include <vector>

namespace kemeny {

namespace {

bool extend(const Graph& a, const Graph& b, std::vector<int>& map,
            std::vector<bool>& used, int next) {
  const int n = a.vertex_count();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || b.degree(cand) != a.degree(next)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      if (a.has_edge(prev, next) != b.has_edge(map[prev], cand)) ok = false;
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend(a, b, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  const int n = a.vertex_count();
  if (n > 16) return false;
  std::vector<int> deg_a, deg_b;
  for (int v = 0; v < n; ++v) {
    deg_a.push_back(a.degree(v));
    deg_b.push_back(b.degree(v));
  }
  std::sort(deg_a.begin(), deg_a.end());
  std::sort(deg_b.begin(), deg_b.end());
  if (deg_a != deg_b) return false;

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  return extend(a, b, map, used, 0);
}

}  // namespace kemeny
