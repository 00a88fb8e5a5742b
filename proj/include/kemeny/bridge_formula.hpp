#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "kemeny/decomposition.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/numeric.hpp"
#include "kemeny/walk.hpp"

namespace kemeny {

// Which of the two equivalent chain formulas produced a breakdown: the
// resistance/moment form or the accessibility/first-passage form.
enum class ChainForm { Resistance, FirstPassage };

// Kemeny's constant of a chain, split into its four summands: the
// per-component contribution, the bridge-endpoint contact sum, the
// within-component cross sum over contact pairs, and the pure bridge term.
template <typename Scalar>
struct KemenyBreakdown {
  Scalar component_term{};
  Scalar contact_term{};
  Scalar cross_term{};
  Scalar bridge_term{};
  Scalar total{};
  ChainForm form = ChainForm::Resistance;
};

namespace detail {

// A chain laid out for evaluation without the parent graph: one link per
// bridge with the component ids, local endpoints, and the edge counts of
// the two sides of the split.
struct ChainLayout {
  struct Link {
    int comp_a, comp_b;
    int local_a, local_b;
    long long side_a, side_b;
  };
  long long total_edges = 0;
  int component_count = 0;
  std::vector<Link> links;
};

template <typename Scalar>
void check_layout(const std::vector<WalkSummary<Scalar>>& summaries,
                  const ChainLayout& layout) {
  if (static_cast<int>(summaries.size()) != layout.component_count)
    throw ValidationError("chain evaluation: expected " +
                          std::to_string(layout.component_count) + " summaries, got " +
                          std::to_string(summaries.size()));
  for (const auto& link : layout.links) {
    if (link.local_a < 0 || link.local_a >= summaries[link.comp_a].vertex_count ||
        link.local_b < 0 || link.local_b >= summaries[link.comp_b].vertex_count)
      throw ValidationError("chain evaluation: bridge endpoint outside its component");
  }
}

inline ChainLayout layout_of(const ChainDecomposition& d, const BridgeWeights& w) {
  ChainLayout layout;
  layout.total_edges = w.total_edges;
  if (layout.total_edges == 0)
    throw ValidationError("chain has no edges; Kemeny's constant is undefined");
  layout.component_count = d.component_count();
  for (size_t t = 0; t < d.bridges().size(); ++t) {
    const auto& link = d.bridges()[t];
    layout.links.push_back({link.comp_x, link.comp_y, link.local_x, link.local_y,
                            w.per_bridge[t].first, w.per_bridge[t].second});
  }
  return layout;
}

// Lays out a hypothetical chain: components wired along `tree`, bridge t
// joining the local endpoints[t] across tree edge t. Side edge counts come
// from subtree sums, so no parent graph is materialized.
template <typename Scalar>
ChainLayout layout_of_placement(const std::vector<WalkSummary<Scalar>>& summaries,
                                const Graph& tree,
                                const std::vector<std::pair<int, int>>& endpoints) {
  const int k = tree.vertex_count();
  if (static_cast<int>(summaries.size()) != k)
    throw ValidationError("placement: tree has " + std::to_string(k) +
                          " nodes but " + std::to_string(summaries.size()) +
                          " component summaries were given");
  if (k >= 2 && (tree.edge_count() != k - 1 || !tree.is_connected()))
    throw ValidationError("placement: arrangement graph is not a tree");
  if (endpoints.size() != tree.edges().size())
    throw ValidationError("placement: need one endpoint pair per tree edge");

  ChainLayout layout;
  layout.component_count = k;
  for (int c = 0; c < k; ++c) layout.total_edges += summaries[c].edge_count;
  layout.total_edges += k - 1;
  if (layout.total_edges == 0)
    throw ValidationError("chain has no edges; Kemeny's constant is undefined");

  // Subtree edge totals below each node, rooted at 0.
  std::vector<int> parent(k, -1), order;
  std::vector<bool> seen(k, false);
  seen[0] = true;
  order.push_back(0);
  for (size_t h = 0; h < order.size(); ++h) {
    int v = order[h];
    for (int u : tree.neighbors(v))
      if (!seen[u]) {
        seen[u] = true;
        parent[u] = v;
        order.push_back(u);
      }
  }
  std::vector<long long> subtree(k);
  for (int c = 0; c < k; ++c) subtree[c] = summaries[c].edge_count;
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] != -1) subtree[parent[*it]] += subtree[*it] + 1;

  for (size_t t = 0; t < tree.edges().size(); ++t) {
    auto [ci, cj] = tree.edges()[t];
    int child = (parent[ci] == cj) ? ci : cj;
    long long child_side = subtree[child];
    long long side_i = (child == ci) ? child_side : layout.total_edges - 1 - child_side;
    layout.links.push_back({ci, cj, endpoints[t].first, endpoints[t].second, side_i,
                            layout.total_edges - 1 - side_i});
  }
  return layout;
}

// The resistance/moment form. Contact vertices enter once per incident
// bridge, each occurrence carrying the edge count of its own split, which
// is what makes coincident bridge endpoints work.
template <typename Scalar>
KemenyBreakdown<Scalar> eval_resistance_form(
    const std::vector<WalkSummary<Scalar>>& summaries, const ChainLayout& layout) {
  check_layout(summaries, layout);
  const long long m = layout.total_edges;
  KemenyBreakdown<Scalar> out;
  out.form = ChainForm::Resistance;

  Scalar component(0), contact(0), cross(0), bridge(0);
  for (const auto& s : summaries)
    component += scalar_ratio<Scalar>(s.edge_count, m) * s.kemeny;

  struct Occurrence {
    int local;
    long long opposite;  // edge count across the bridge from this endpoint
  };
  std::vector<std::vector<Occurrence>> occ(layout.component_count);
  for (const auto& link : layout.links) {
    const long long opp_a = m - link.side_a;
    const long long opp_b = m - link.side_b;
    contact += scalar_ratio<Scalar>(opp_a, m) * summaries[link.comp_a].moment[link.local_a];
    contact += scalar_ratio<Scalar>(opp_b, m) * summaries[link.comp_b].moment[link.local_b];
    bridge += scalar_ratio<Scalar>((2 * opp_a - 1) * (2 * opp_b - 1), 2 * m);
    occ[link.comp_a].push_back({link.local_a, opp_a});
    occ[link.comp_b].push_back({link.local_b, opp_b});
  }
  for (int c = 0; c < layout.component_count; ++c) {
    const auto& r = summaries[c].resistance;
    for (const auto& z1 : occ[c])
      for (const auto& z2 : occ[c]) {
        if (z1.local == z2.local) continue;  // zero resistance
        cross += scalar_ratio<Scalar>(z1.opposite * z2.opposite, m) * r(z1.local, z2.local);
      }
  }

  out.component_term = std::move(component);
  out.contact_term = std::move(contact);
  out.cross_term = std::move(cross);
  out.bridge_term = std::move(bridge);
  out.total = out.component_term + out.contact_term + out.cross_term + out.bridge_term;
  return out;
}

// The accessibility/first-passage form of the same constant.
template <typename Scalar>
KemenyBreakdown<Scalar> eval_first_passage_form(
    const std::vector<WalkSummary<Scalar>>& summaries, const ChainLayout& layout) {
  check_layout(summaries, layout);
  for (const auto& s : summaries)
    if (!s.has_mfpt)
      throw ValidationError(
          "first-passage form needs summaries computed with mean first passage times");
  const long long m = layout.total_edges;
  KemenyBreakdown<Scalar> out;
  out.form = ChainForm::FirstPassage;

  Scalar component(0), contact(0), cross(0), bridge(0);
  for (const auto& s : summaries) component += s.kemeny;

  struct Occurrence {
    int local;
    long long opposite;
  };
  std::vector<std::vector<Occurrence>> occ(layout.component_count);
  for (const auto& link : layout.links) {
    const long long opp_a = m - link.side_a;
    const long long opp_b = m - link.side_b;
    contact +=
        scalar_ratio<Scalar>(opp_a, m) * summaries[link.comp_a].accessibility[link.local_a];
    contact +=
        scalar_ratio<Scalar>(opp_b, m) * summaries[link.comp_b].accessibility[link.local_b];
    bridge += scalar_ratio<Scalar>((2 * opp_a - 1) * (2 * opp_b - 1), 2 * m);
    occ[link.comp_a].push_back({link.local_a, opp_a});
    occ[link.comp_b].push_back({link.local_b, opp_b});
  }
  for (int c = 0; c < layout.component_count; ++c) {
    const auto& mf = summaries[c].mfpt;
    for (const auto& z1 : occ[c])
      for (const auto& z2 : occ[c]) {
        if (z1.local == z2.local) continue;
        cross += scalar_ratio<Scalar>(z1.opposite * z2.opposite, 2 * m * m) *
                 (mf(z1.local, z2.local) + mf(z2.local, z1.local));
      }
  }

  out.component_term = std::move(component);
  out.contact_term = std::move(contact);
  out.cross_term = std::move(cross);
  out.bridge_term = std::move(bridge);
  out.total = out.component_term + out.contact_term + out.cross_term + out.bridge_term;
  return out;
}

template <typename Scalar>
void check_vertex_in(const WalkSummary<Scalar>& s, int v, const char* which) {
  if (v < 0 || v >= s.vertex_count)
    throw ValidationError(std::string(which) + " is not a vertex of its component");
}

}  // namespace detail

// Degree-weighted resistance quadratic form of the graph obtained by
// joining two graphs with a bridge va ~ vb, from the two component
// summaries alone.
template <typename Scalar>
Scalar bridged_resistance_quadratic(const WalkSummary<Scalar>& a, int va,
                                    const WalkSummary<Scalar>& b, int vb) {
  detail::check_vertex_in(a, va, "first endpoint");
  detail::check_vertex_in(b, vb, "second endpoint");
  return a.resistance_quadratic + b.resistance_quadratic +
         scalar_ratio<Scalar>(4 * (b.edge_count + 1), 1) * a.moment[va] +
         scalar_ratio<Scalar>(4 * (a.edge_count + 1), 1) * b.moment[vb] +
         scalar_ratio<Scalar>(2 * (2 * a.edge_count + 1) * (2 * b.edge_count + 1), 1);
}

// Kemeny's constant of the single-bridge join, evaluated through both the
// moment route and the accessibility route; the two must agree.
template <typename Scalar>
Scalar kemeny_single_bridge(const WalkSummary<Scalar>& a, int va,
                            const WalkSummary<Scalar>& b, int vb) {
  detail::check_vertex_in(a, va, "first endpoint");
  detail::check_vertex_in(b, vb, "second endpoint");
  const long long m = a.edge_count + b.edge_count + 1;
  const Scalar bridge_term =
      scalar_ratio<Scalar>((2 * a.edge_count + 1) * (2 * b.edge_count + 1), 2 * m);

  Scalar via_moments = scalar_ratio<Scalar>(a.edge_count, m) * a.kemeny +
                       scalar_ratio<Scalar>(b.edge_count, m) * b.kemeny +
                       scalar_ratio<Scalar>(b.edge_count + 1, m) * a.moment[va] +
                       scalar_ratio<Scalar>(a.edge_count + 1, m) * b.moment[vb] +
                       bridge_term;
  Scalar via_accessibility = a.kemeny + b.kemeny +
                             scalar_ratio<Scalar>(b.edge_count + 1, m) * a.accessibility[va] +
                             scalar_ratio<Scalar>(a.edge_count + 1, m) * b.accessibility[vb] +
                             bridge_term;

  if constexpr (is_exact_v<Scalar>) {
    if (via_moments != via_accessibility)
      throw std::logic_error("kemeny_single_bridge: the two routes disagree");
  } else {
    double deviation = std::fabs(via_moments - via_accessibility);
    if (deviation > 1e-9 * std::max(1.0, std::fabs(via_moments)))
      throw std::logic_error("kemeny_single_bridge: the two routes disagree by " +
                             std::to_string(deviation));
  }
  return via_moments;
}

// Two-tree forest count and effective resistance between any two vertices
// of the parent graph, assembled from component data along the pair path.
template <typename Scalar>
struct PairForestResistance {
  Scalar forest_count{};
  Scalar resistance{};
};

template <typename Scalar>
PairForestResistance<Scalar> chain_forest_count(
    const ChainDecomposition& d, const std::vector<WalkSummary<Scalar>>& summaries,
    int v, int w) {
  d.require_vertex(v);
  d.require_vertex(w);
  if (static_cast<int>(summaries.size()) != d.component_count())
    throw ValidationError("chain_forest_count: one summary per component required");
  PairForestResistance<Scalar> out;
  out.forest_count = Scalar(0);
  out.resistance = Scalar(0);
  if (v == w) return out;

  Scalar total_trees(1);
  for (const auto& s : summaries) total_trees *= s.tree_count;

  const int dist = quotient_tree_distance(d, d.component_of(v), d.component_of(w));
  Scalar resistance_sum = Scalar(dist);
  for (const auto& entry : pair_path(d, v, w).entries) {
    const auto& s = summaries[entry.component];
    resistance_sum +=
        s.resistance(d.local_index(entry.first), d.local_index(entry.second));
  }
  out.forest_count = total_trees * resistance_sum;
  out.resistance = std::move(resistance_sum);
  return out;
}

// Degree-masked moment of one component against a global target: the
// contribution of component i's degrees to the parent-graph moment of w.
template <typename Scalar>
Scalar chain_component_moment(const ChainDecomposition& d,
                              const std::vector<WalkSummary<Scalar>>& summaries,
                              int component, int w) {
  d.require_component(component);
  d.require_vertex(w);
  const auto& s = summaries[component];
  const int anchor = anchor_vertices(d, w)[component];
  const int dist = quotient_tree_distance(d, component, d.component_of(w));

  Scalar acc = s.moment[d.local_index(anchor)];
  acc += scalar_ratio<Scalar>(2 * dist * s.edge_count, 1);
  Scalar path_resistance(0);
  for (const auto& entry : pair_path(d, anchor, w).entries)
    path_resistance += summaries[entry.component].resistance(
        d.local_index(entry.first), d.local_index(entry.second));
  acc += scalar_ratio<Scalar>(2 * s.edge_count, 1) * path_resistance;
  return acc;
}

// The parent-graph moment of w from component data only, with the three
// groups of summands kept separate.
template <typename Scalar>
struct ChainMomentBreakdown {
  std::vector<Scalar> component_moments;  // anchor moment per component
  std::vector<Scalar> contact_terms;      // per contact occurrence
  std::vector<Scalar> separation_terms;   // per component other than w's
  Scalar total{};
};

template <typename Scalar>
ChainMomentBreakdown<Scalar> chain_moment(const ChainDecomposition& d,
                                          const std::vector<WalkSummary<Scalar>>& summaries,
                                          const BridgeWeights& weights, int w) {
  d.require_vertex(w);
  if (static_cast<int>(summaries.size()) != d.component_count())
    throw ValidationError("chain_moment: one summary per component required");
  const int k = d.component_count();
  const int k0 = d.component_of(w);
  const auto anchors = anchor_vertices(d, w);
  const auto parents = quotient_tree_component_parents(d, k0);

  ChainMomentBreakdown<Scalar> out;
  out.total = Scalar(0);
  for (int c = 0; c < k; ++c) {
    Scalar mu = summaries[c].moment[d.local_index(anchors[c])];
    out.total += mu;
    out.component_moments.push_back(std::move(mu));
  }
  for (int c = 0; c < k; ++c) {
    const int anchor_local = d.local_index(anchors[c]);
    for (const auto& occ : weights.contacts[c]) {
      Scalar term = scalar_ratio<Scalar>(2 * weights.opposite_edges(occ), 1) *
                    summaries[c].resistance(occ.local_vertex, anchor_local);
      out.total += term;
      out.contact_terms.push_back(std::move(term));
    }
  }
  for (int c = 0; c < k; ++c) {
    if (c == k0) continue;
    const int toward = d.bridge_between(c, parents[c]);
    long long anchor_side = (d.bridges()[toward].comp_x == c)
                                ? weights.per_bridge[toward].first
                                : weights.per_bridge[toward].second;
    Scalar term = scalar_ratio<Scalar>(2 * anchor_side + 1, 1);
    out.total += term;
    out.separation_terms.push_back(std::move(term));
  }
  return out;
}

// Kemeny's constant of the decomposed graph via the resistance form, with
// the four-term breakdown.
template <typename Scalar>
KemenyBreakdown<Scalar> kemeny_chain(const ChainDecomposition& d,
                                     const std::vector<WalkSummary<Scalar>>& summaries,
                                     const BridgeWeights& weights) {
  return detail::eval_resistance_form(summaries, detail::layout_of(d, weights));
}

// Same constant via the accessibility / first-passage form.
template <typename Scalar>
KemenyBreakdown<Scalar> kemeny_chain_mfpt(const ChainDecomposition& d,
                                          const std::vector<WalkSummary<Scalar>>& summaries,
                                          const BridgeWeights& weights) {
  return detail::eval_first_passage_form(summaries, detail::layout_of(d, weights));
}

// Evaluates the resistance form for a hypothetical wiring: components
// arranged along `tree`, bridge t joining the local endpoints[t]. No
// parent graph is built.
template <typename Scalar>
KemenyBreakdown<Scalar> kemeny_chain_placement(
    const std::vector<WalkSummary<Scalar>>& summaries, const Graph& tree,
    const std::vector<std::pair<int, int>>& endpoints) {
  return detail::eval_resistance_form(summaries,
                                      detail::layout_of_placement(summaries, tree, endpoints));
}

// Forest matrix of the single-bridge join, assembled blockwise. Vertices
// of the first component precede those of the second.
template <typename Scalar>
Matrix<Scalar> bridged_forest_matrix(const WalkSummary<Scalar>& a, int va,
                                     const WalkSummary<Scalar>& b, int vb) {
  detail::check_vertex_in(a, va, "first endpoint");
  detail::check_vertex_in(b, vb, "second endpoint");
  const int na = a.vertex_count;
  const int nb = b.vertex_count;
  Matrix<Scalar> f(na + nb, na + nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) f(i, j) = b.tree_count * a.forest(i, j);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) f(na + i, na + j) = a.tree_count * b.forest(i, j);
  const Scalar joint = a.tree_count * b.tree_count;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      Scalar v = b.tree_count * a.forest(i, va) + a.tree_count * b.forest(j, vb) + joint;
      f(na + j, i) = v;
      f(i, na + j) = std::move(v);
    }
  return f;
}

}  // namespace kemeny
