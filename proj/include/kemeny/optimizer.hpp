#pragma once

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "kemeny/bridge_formula.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/numeric.hpp"
#include "kemeny/walk.hpp"

namespace kemeny {

enum class Sense { Min, Max };
enum class PlacementMethod { AccessibilityShortcut, Exhaustive, Centroid };

inline constexpr long long kDefaultPlacementCap = 1'000'000;
// Tied optima beyond this many are counted but not listed.
inline constexpr int kTiedReportCap = 100;

template <typename Scalar>
struct PlacementResult {
  // One entry per tree edge: chosen local vertices on the two sides,
  // ordered as the tree stores the edge.
  std::vector<std::pair<int, int>> endpoints;
  Scalar kemeny{};
  Sense sense = Sense::Min;
  PlacementMethod method = PlacementMethod::AccessibilityShortcut;
  long long candidates_evaluated = 0;
  long long optimal_count = 1;
  std::vector<std::vector<std::pair<int, int>>> tied;  // capped at kTiedReportCap
};

// Argmin set of the accessibility index; ties kept (exact equality in
// rational mode, 1e-9 absolute in float).
template <typename Scalar>
std::vector<int> min_accessibility_vertices(const WalkSummary<Scalar>& s) {
  std::vector<int> out;
  if (s.accessibility.empty()) return out;
  Scalar best = s.accessibility[0];
  for (const Scalar& a : s.accessibility)
    if (a < best) best = a;
  for (int v = 0; v < s.vertex_count; ++v) {
    if constexpr (is_exact_v<Scalar>) {
      if (s.accessibility[v] == best) out.push_back(v);
    } else {
      if (s.accessibility[v] - best <= 1e-9) out.push_back(v);
    }
  }
  return out;
}

namespace detail {

template <typename Scalar>
std::vector<int> accessibility_argext(const WalkSummary<Scalar>& s, Sense sense) {
  if (sense == Sense::Min) return min_accessibility_vertices(s);
  std::vector<int> out;
  Scalar best = s.accessibility[0];
  for (const Scalar& a : s.accessibility)
    if (a > best) best = a;
  for (int v = 0; v < s.vertex_count; ++v) {
    if constexpr (is_exact_v<Scalar>) {
      if (s.accessibility[v] == best) out.push_back(v);
    } else {
      if (best - s.accessibility[v] <= 1e-9) out.push_back(v);
    }
  }
  return out;
}

inline long long saturating_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<long long>::max() / b)
    return std::numeric_limits<long long>::max();
  return a * b;
}

}  // namespace detail

// Centroids of a tree: vertices none of whose branches exceeds half the
// vertex count. One vertex, or two adjacent ones when n is even.
std::vector<int> tree_centroids(const Graph& t);

// C(T): over each tree edge, the product of the two split sizes.
struct TreeCost {
  Graph tree;
  long long cost = 0;
};
TreeCost tree_cost(const Graph& t);

// Exhaustive evaluator over all bridge-endpoint assignments for a fixed
// tree. The per-component summaries are reused across candidates; only the
// contact and cross summands change between assignments.
template <typename Scalar>
PlacementResult<Scalar> exhaustive_chain_placement(
    const std::vector<WalkSummary<Scalar>>& summaries, const Graph& tree, Sense sense,
    long long cap = kDefaultPlacementCap) {
  const auto& tree_edges = tree.edges();
  const int slots = static_cast<int>(tree_edges.size());

  long long space = 1;
  for (const auto& [ci, cj] : tree_edges) {
    space = detail::saturating_mul(space, summaries[ci].vertex_count);
    space = detail::saturating_mul(space, summaries[cj].vertex_count);
  }
  if (space > cap)
    throw SizeLimitError("exhaustive placement space " + std::to_string(space) +
                             " exceeds the cap " + std::to_string(cap),
                         cap);

  detail::ChainLayout layout = detail::layout_of_placement(
      summaries, tree, std::vector<std::pair<int, int>>(slots, {0, 0}));

  // Terms independent of the endpoint choices.
  const long long m = layout.total_edges;
  Scalar fixed(0);
  for (const auto& s : summaries)
    fixed += scalar_ratio<Scalar>(s.edge_count, m) * s.kemeny;
  for (const auto& link : layout.links)
    fixed += scalar_ratio<Scalar>(
        (2 * (m - link.side_a) - 1) * (2 * (m - link.side_b) - 1), 2 * m);

  auto variable_terms = [&](const std::vector<std::pair<int, int>>& endpoints) {
    Scalar acc(0);
    struct Occ {
      int local;
      long long opposite;
    };
    std::vector<std::vector<Occ>> occ(layout.component_count);
    for (int t = 0; t < slots; ++t) {
      const auto& link = layout.links[t];
      const auto [la, lb] = endpoints[t];
      const long long opp_a = m - link.side_a;
      const long long opp_b = m - link.side_b;
      acc += scalar_ratio<Scalar>(opp_a, m) * summaries[link.comp_a].moment[la];
      acc += scalar_ratio<Scalar>(opp_b, m) * summaries[link.comp_b].moment[lb];
      occ[link.comp_a].push_back({la, opp_a});
      occ[link.comp_b].push_back({lb, opp_b});
    }
    for (int c = 0; c < layout.component_count; ++c) {
      const auto& r = summaries[c].resistance;
      for (const auto& z1 : occ[c])
        for (const auto& z2 : occ[c]) {
          if (z1.local == z2.local) continue;
          acc += scalar_ratio<Scalar>(z1.opposite * z2.opposite, m) * r(z1.local, z2.local);
        }
    }
    return acc;
  };

  auto better = [&](const Scalar& a, const Scalar& b) {
    return sense == Sense::Min ? a < b : a > b;
  };

  std::vector<std::pair<int, int>> current(slots, {0, 0});
  auto advance = [&]() {
    for (int t = 0; t < slots; ++t) {
      auto [ci, cj] = tree_edges[t];
      if (++current[t].first < summaries[ci].vertex_count) return true;
      current[t].first = 0;
      if (++current[t].second < summaries[cj].vertex_count) return true;
      current[t].second = 0;
    }
    return false;
  };

  PlacementResult<Scalar> best;
  best.sense = sense;
  best.method = PlacementMethod::Exhaustive;
  bool first = true;
  long long evaluated = 0;
  do {
    Scalar value = variable_terms(current);
    ++evaluated;
    if (first || better(value, best.kemeny)) {
      best.kemeny = value;
      best.endpoints = current;
      first = false;
    }
  } while (advance());
  best.candidates_evaluated = evaluated;

  // Second sweep for the tied optima.
  current.assign(slots, {0, 0});
  best.optimal_count = 0;
  do {
    Scalar value = variable_terms(current);
    bool tie;
    if constexpr (is_exact_v<Scalar>) {
      tie = (value == best.kemeny);
    } else {
      tie = std::fabs(value - best.kemeny) <= 1e-12 * std::max(1.0, std::fabs(best.kemeny));
    }
    if (tie) {
      ++best.optimal_count;
      if (static_cast<int>(best.tied.size()) < kTiedReportCap) best.tied.push_back(current);
    }
  } while (advance());

  best.kemeny += fixed;
  return best;
}

// Places one vertex per component — a minimum-accessibility vertex — and
// attaches every incident bridge there, which zeroes the cross summand.
template <typename Scalar>
PlacementResult<Scalar> shortcut_chain_placement(
    const std::vector<WalkSummary<Scalar>>& summaries, const Graph& tree) {
  const int k = tree.vertex_count();
  std::vector<std::vector<int>> ties(k);
  std::vector<int> chosen(k);
  for (int c = 0; c < k; ++c) {
    ties[c] = min_accessibility_vertices(summaries[c]);
    chosen[c] = ties[c].front();
  }
  PlacementResult<Scalar> out;
  out.sense = Sense::Min;
  out.method = PlacementMethod::AccessibilityShortcut;
  for (const auto& [ci, cj] : tree.edges())
    out.endpoints.emplace_back(chosen[ci], chosen[cj]);
  out.kemeny = kemeny_chain_placement(summaries, tree, out.endpoints).total;
  out.candidates_evaluated = 1;

  out.optimal_count = 1;
  for (int c = 0; c < k; ++c)
    out.optimal_count =
        detail::saturating_mul(out.optimal_count, static_cast<long long>(ties[c].size()));
  std::vector<int> pick(k, 0);
  while (static_cast<int>(out.tied.size()) < kTiedReportCap) {
    std::vector<std::pair<int, int>> assignment;
    for (const auto& [ci, cj] : tree.edges())
      assignment.emplace_back(ties[ci][pick[ci]], ties[cj][pick[cj]]);
    out.tied.push_back(std::move(assignment));
    int c = 0;
    while (c < k && ++pick[c] == static_cast<int>(ties[c].size())) pick[c++] = 0;
    if (c == k) break;
  }
  return out;
}

// Best single-bridge join of two graphs. The shortcut places the extreme
// accessibility vertex on each side; exhaustive search is available as a
// check and for completeness.
template <typename Scalar>
PlacementResult<Scalar> optimal_single_bridge(
    const WalkSummary<Scalar>& a, const WalkSummary<Scalar>& b, Sense sense,
    PlacementMethod method = PlacementMethod::AccessibilityShortcut,
    long long cap = kDefaultPlacementCap) {
  std::vector<WalkSummary<Scalar>> summaries{a, b};
  Graph tree = path_graph(2);

  if (method == PlacementMethod::Exhaustive)
    return exhaustive_chain_placement(summaries, tree, sense, cap);

  if (method == PlacementMethod::Centroid) {
    if (sense != Sense::Min)
      throw ValidationError("centroid placement only answers the minimization problem");
    throw ValidationError(
        "centroid placement needs the component graphs; use optimal_tree_bridge");
  }

  std::vector<int> ties_a = detail::accessibility_argext(a, sense);
  std::vector<int> ties_b = detail::accessibility_argext(b, sense);
  PlacementResult<Scalar> out;
  out.sense = sense;
  out.method = PlacementMethod::AccessibilityShortcut;
  out.endpoints = {{ties_a.front(), ties_b.front()}};
  out.kemeny = kemeny_single_bridge(a, ties_a.front(), b, ties_b.front());
  out.candidates_evaluated = 1;
  out.optimal_count = detail::saturating_mul(static_cast<long long>(ties_a.size()),
                                             static_cast<long long>(ties_b.size()));
  for (int va : ties_a) {
    for (int vb : ties_b) {
      if (static_cast<int>(out.tied.size()) >= kTiedReportCap) break;
      out.tied.push_back({{va, vb}});
    }
  }
  return out;
}

// Minimum-Kemeny bridge between two trees: joins centroids.
template <typename Scalar>
PlacementResult<Scalar> optimal_tree_bridge(const Graph& ta, const WalkSummary<Scalar>& a,
                                            const Graph& tb, const WalkSummary<Scalar>& b) {
  std::vector<int> ca = tree_centroids(ta);
  std::vector<int> cb = tree_centroids(tb);
  PlacementResult<Scalar> out;
  out.sense = Sense::Min;
  out.method = PlacementMethod::Centroid;
  out.endpoints = {{ca.front(), cb.front()}};
  out.kemeny = kemeny_single_bridge(a, ca.front(), b, cb.front());
  out.candidates_evaluated = 1;
  out.optimal_count = static_cast<long long>(ca.size()) * static_cast<long long>(cb.size());
  for (int va : ca)
    for (int vb : cb) out.tied.push_back({{va, vb}});
  return out;
}

// Best wiring of k components along a fixed tree. Minimization can use the
// single-contact-vertex shortcut; maximization is exhaustive only.
template <typename Scalar>
PlacementResult<Scalar> optimal_chain_placement(
    const std::vector<WalkSummary<Scalar>>& summaries, const Graph& tree, Sense sense,
    PlacementMethod method, long long cap = kDefaultPlacementCap) {
  const int k = tree.vertex_count();
  if (static_cast<int>(summaries.size()) != k)
    throw ValidationError("optimal_chain_placement: tree size and summary count differ");
  if (k >= 2 && (tree.edge_count() != k - 1 || !tree.is_connected()))
    throw ValidationError("optimal_chain_placement: arrangement graph is not a tree");

  if (method == PlacementMethod::Exhaustive)
    return exhaustive_chain_placement(summaries, tree, sense, cap);
  if (sense == Sense::Max)
    throw ValidationError(
        "maximization has no placement shortcut; request the exhaustive search");
  if (method == PlacementMethod::Centroid)
    throw ValidationError("centroid placement applies to pairs of trees; see optimal_tree_bridge");
  return shortcut_chain_placement(summaries, tree);
}

// Question-2 answer for k identical copies: a star arrangement, every
// bridge attached at a minimum-accessibility vertex of the copy.
template <typename Scalar>
struct IdenticalChainResult {
  Graph tree;
  PlacementResult<Scalar> placement;
};

template <typename Scalar>
IdenticalChainResult<Scalar> optimal_identical_chain(const WalkSummary<Scalar>& h, int k) {
  if (k < 2) throw ValidationError("optimal_identical_chain: need at least two copies");
  if (h.vertex_count < 2)
    throw ValidationError("optimal_identical_chain: component needs at least two vertices");
  IdenticalChainResult<Scalar> out;
  out.tree = star_graph(k);
  std::vector<WalkSummary<Scalar>> summaries(k, h);
  out.placement = shortcut_chain_placement(summaries, out.tree);
  return out;
}

}  // namespace kemeny
