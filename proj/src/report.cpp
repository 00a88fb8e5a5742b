#include "kemeny/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kemeny/bridge_formula.hpp"
#include "kemeny/decomposition.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/forest_oracle.hpp"
#include "kemeny/isomorphism.hpp"
#include "kemeny/reference_graphs.hpp"
#include "kemeny/walk.hpp"

namespace kemeny {

namespace {

using nlohmann::json;

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::vector<std::string> expand_methods(const std::vector<std::string>& methods) {
  std::vector<std::string> out;
  for (const auto& m : methods) {
    if (m == "all") {
      out.insert(out.end(), {"direct", "chain", "chain-mfpt", "forest-oracle"});
    } else if (m == "direct" || m == "chain" || m == "chain-mfpt" ||
               m == "forest-oracle") {
      out.push_back(m);
    } else {
      throw ValidationError("unknown method: " + m);
    }
  }
  std::vector<std::string> dedup;
  for (const auto& m : out)
    if (std::find(dedup.begin(), dedup.end(), m) == dedup.end()) dedup.push_back(m);
  return dedup;
}

std::vector<Bridge> resolve_bridges(const Graph& g,
                                    const std::vector<std::pair<std::string, std::string>>&
                                        labels) {
  std::vector<Bridge> out;
  for (const auto& [la, lb] : labels) {
    int a = g.vertex_by_label(la);
    int b = g.vertex_by_label(lb);
    if (a < 0) throw ValidationError("unknown vertex label: '" + la + "'");
    if (b < 0) throw ValidationError("unknown vertex label: '" + lb + "'");
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  return out;
}

template <typename Scalar>
std::string exact_repr(const Scalar& v) {
  if constexpr (is_exact_v<Scalar>)
    return scalar_repr(v);
  else
    return {};
}

// One numeric-mode instantiation of the analysis pipeline.
template <typename Scalar>
void analyze_with(const Graph& g, const AnalyzeOptions& options, AnalysisReport& report) {
  const auto methods = expand_methods(options.methods);
  const bool explicit_oracle =
      std::find(options.methods.begin(), options.methods.end(), "forest-oracle") !=
      options.methods.end();

  auto all_bridges = find_bridges(g);
  report.bridge_count = static_cast<int>(all_bridges.size());
  std::vector<Bridge> split = options.bridges.empty()
                                  ? all_bridges
                                  : resolve_bridges(g, options.bridges);
  report.split_bridge_count = static_cast<int>(split.size());

  std::vector<Scalar> values;
  std::set<std::string> warnings;

  std::optional<ChainDecomposition> dec;
  std::optional<BridgeWeights> weights;
  std::vector<WalkSummary<Scalar>> summaries;
  bool summaries_have_mfpt = false;

  auto ensure_decomposition = [&](bool with_mfpt) {
    if (!dec) {
      dec.emplace(decompose(g, split));
      weights.emplace(bridge_weights(*dec));
    }
    if (summaries.empty() || (with_mfpt && !summaries_have_mfpt)) {
      summaries.clear();
      for (const auto& comp : dec->components())
        summaries.push_back(analyze_walk<Scalar>(comp.graph, WalkOptions{with_mfpt}));
      summaries_have_mfpt = with_mfpt;
      for (const auto& s : summaries)
        for (const auto& w : s.warnings) warnings.insert(w);
    }
  };

  auto fill_components = [&]() {
    if (!report.components.empty()) return;
    for (int c = 0; c < dec->component_count(); ++c) {
      const auto& s = summaries[c];
      ComponentRow row;
      row.id = c;
      row.vertices = s.vertex_count;
      row.edges = s.edge_count;
      row.tree_count = is_exact_v<Scalar> ? exact_repr(s.tree_count)
                                          : scalar_repr(to_double(s.tree_count));
      row.kemeny = to_double(s.kemeny);
      row.kemeny_exact = exact_repr(s.kemeny);
      report.components.push_back(std::move(row));
    }
  };

  auto record_breakdown = [&](const KemenyBreakdown<Scalar>& b) {
    if (report.breakdown) return;
    BreakdownRow row;
    row.form = b.form == ChainForm::Resistance ? "resistance" : "first-passage";
    row.component_term = to_double(b.component_term);
    row.contact_term = to_double(b.contact_term);
    row.cross_term = to_double(b.cross_term);
    row.bridge_term = to_double(b.bridge_term);
    row.total = to_double(b.total);
    row.total_exact = exact_repr(b.total);
    report.breakdown = std::move(row);
  };

  for (const auto& name : methods) {
    MethodResult res;
    res.name = name;
    Stopwatch timer;
    if (name == "direct") {
      Scalar kappa = kemeny_direct<Scalar>(g);
      res.kemeny = to_double(kappa);
      res.kemeny_exact = exact_repr(kappa);
      res.ran = true;
      values.push_back(std::move(kappa));
    } else if (name == "chain") {
      ensure_decomposition(false);
      auto breakdown = kemeny_chain(*dec, summaries, *weights);
      fill_components();
      record_breakdown(breakdown);
      res.kemeny = to_double(breakdown.total);
      res.kemeny_exact = exact_repr(breakdown.total);
      res.ran = true;
      values.push_back(std::move(breakdown.total));
    } else if (name == "chain-mfpt") {
      ensure_decomposition(true);
      auto breakdown = kemeny_chain_mfpt(*dec, summaries, *weights);
      fill_components();
      record_breakdown(breakdown);
      res.kemeny = to_double(breakdown.total);
      res.kemeny_exact = exact_repr(breakdown.total);
      res.ran = true;
      values.push_back(std::move(breakdown.total));
    } else {  // forest-oracle
      if (g.edge_count() > options.oracle_edge_limit && !explicit_oracle) {
        res.skip_reason = "graph has " + std::to_string(g.edge_count()) +
                          " edges, above the enumeration limit " +
                          std::to_string(options.oracle_edge_limit);
        warnings.insert("forest-oracle skipped: " + res.skip_reason);
      } else {
        Rational kappa = kemeny_via_forests(g, options.oracle_edge_limit);
        res.kemeny = to_double(kappa);
        res.kemeny_exact = scalar_repr(kappa);
        res.ran = true;
        if constexpr (is_exact_v<Scalar>)
          values.push_back(kappa);
        else
          values.push_back(to_double(kappa));
      }
    }
    res.seconds = timer.seconds();
    report.methods.push_back(std::move(res));
  }

  Scalar max_dev(0);
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j) {
      Scalar dev = scalar_abs(values[i] - values[j]);
      if (dev > max_dev) max_dev = dev;
    }
  report.max_deviation = to_double(max_dev);
  report.agreement = report.max_deviation <= options.tolerance;

  if (graphs_isomorphic(g, reference_graph("c4-k4-s4-chain")))
    warnings.insert(
        "this is a well-known worked example; a commonly quoted per-component value "
        "for its 4-vertex star is 7.5, but direct computation gives 2.5, which is what "
        "every method here uses (total 143/6)");

  report.warnings.assign(warnings.begin(), warnings.end());
}

json to_json(const AnalysisReport& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["kind"] = "analysis";
  j["input"] = r.input;
  j["numeric_mode"] = r.numeric_mode;
  j["graph"] = {{"vertices", r.vertices},
                {"edges", r.edges},
                {"bridges", r.bridge_count},
                {"split_bridges", r.split_bridge_count}};
  j["components"] = json::array();
  for (const auto& c : r.components) {
    json row = {{"id", c.id},
                {"vertices", c.vertices},
                {"edges", c.edges},
                {"tree_count", c.tree_count},
                {"kemeny", c.kemeny}};
    if (!c.kemeny_exact.empty()) row["kemeny_exact"] = c.kemeny_exact;
    j["components"].push_back(std::move(row));
  }
  if (r.breakdown) {
    const auto& b = *r.breakdown;
    j["breakdown"] = {{"form", b.form},
                      {"component_term", b.component_term},
                      {"contact_term", b.contact_term},
                      {"cross_term", b.cross_term},
                      {"bridge_term", b.bridge_term},
                      {"total", b.total}};
    if (!b.total_exact.empty()) j["breakdown"]["total_exact"] = b.total_exact;
  }
  j["methods"] = json::array();
  for (const auto& m : r.methods) {
    json row = {{"name", m.name}, {"ran", m.ran}, {"seconds", m.seconds}};
    if (m.ran) {
      row["kemeny"] = m.kemeny;
      if (!m.kemeny_exact.empty()) row["kemeny_exact"] = m.kemeny_exact;
    } else {
      row["skip_reason"] = m.skip_reason;
    }
    j["methods"].push_back(std::move(row));
  }
  j["max_deviation"] = r.max_deviation;
  j["tolerance"] = r.tolerance;
  j["agreement"] = r.agreement;
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace

AnalysisReport run_analysis(const Graph& g, const std::string& input_name,
                            const AnalyzeOptions& options) {
  AnalysisReport report;
  report.input = input_name;
  report.numeric_mode = options.mode == NumericMode::Exact ? "exact" : "float";
  report.vertices = g.vertex_count();
  report.edges = g.edge_count();
  report.tolerance = options.tolerance;
  if (options.mode == NumericMode::Exact)
    analyze_with<Rational>(g, options, report);
  else
    analyze_with<double>(g, options, report);
  return report;
}

std::string to_json_text(const AnalysisReport& r) { return to_json(r).dump(2); }

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "graph " << r.input << ": " << r.vertices << " vertices, " << r.edges
      << " edges, " << r.bridge_count << " bridges";
  if (r.split_bridge_count != r.bridge_count)
    out << " (" << r.split_bridge_count << " used for the split)";
  out << "\nnumeric mode: " << r.numeric_mode << "\n";
  if (!r.components.empty()) {
    out << "components:\n";
    out << "  id  vertices  edges  spanning-trees  kemeny\n";
    for (const auto& c : r.components) {
      out << "  " << c.id << "  " << c.vertices << "  " << c.edges << "  "
          << c.tree_count << "  " << scalar_repr(c.kemeny);
      if (!c.kemeny_exact.empty()) out << " (" << c.kemeny_exact << ")";
      out << "\n";
    }
  }
  if (r.breakdown) {
    const auto& b = *r.breakdown;
    out << "breakdown (" << b.form << " form):\n"
        << "  component term  " << scalar_repr(b.component_term) << "\n"
        << "  contact term    " << scalar_repr(b.contact_term) << "\n"
        << "  cross term      " << scalar_repr(b.cross_term) << "\n"
        << "  bridge term     " << scalar_repr(b.bridge_term) << "\n"
        << "  total           " << scalar_repr(b.total);
    if (!b.total_exact.empty()) out << " (" << b.total_exact << ")";
    out << "\n";
  }
  out << "methods:\n";
  for (const auto& m : r.methods) {
    out << "  " << m.name << ": ";
    if (m.ran) {
      out << "kemeny " << scalar_repr(m.kemeny);
      if (!m.kemeny_exact.empty()) out << " (" << m.kemeny_exact << ")";
      out << "  [" << scalar_repr(m.seconds) << " s]";
    } else {
      out << "skipped: " << m.skip_reason;
    }
    out << "\n";
  }
  out << "max deviation between methods: " << scalar_repr(r.max_deviation)
      << " (tolerance " << scalar_repr(r.tolerance) << ") -> "
      << (r.agreement ? "agree" : "DISAGREE") << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// optimize

namespace {

template <typename Scalar>
void optimize_with(const std::vector<Graph>& components, const Graph& tree,
                   const OptimizeOptions& options, OptimizeReport& report) {
  std::vector<WalkSummary<Scalar>> summaries;
  summaries.reserve(components.size());
  for (const auto& g : components) summaries.push_back(analyze_walk<Scalar>(g));

  std::optional<PlacementResult<Scalar>> shortcut;
  std::optional<PlacementResult<Scalar>> exhaustive;
  if (options.shortcut)
    shortcut = optimal_chain_placement(summaries, tree, options.sense,
                                       PlacementMethod::AccessibilityShortcut);
  if (options.exhaustive)
    exhaustive = optimal_chain_placement(summaries, tree, options.sense,
                                         PlacementMethod::Exhaustive, options.cap);

  if (shortcut && exhaustive) {
    report.cross_checked = true;
    if constexpr (is_exact_v<Scalar>) {
      report.cross_check_agrees = shortcut->kemeny == exhaustive->kemeny;
    } else {
      double gap = std::fabs(shortcut->kemeny - exhaustive->kemeny);
      report.cross_check_agrees = gap <= 1e-9 * std::max(1.0, std::fabs(exhaustive->kemeny));
    }
    if (!report.cross_check_agrees)
      report.warnings.push_back(
          "shortcut and exhaustive optima differ: " + scalar_repr(to_double(shortcut->kemeny)) +
          " vs " + scalar_repr(to_double(exhaustive->kemeny)));
  }

  const PlacementResult<Scalar>& chosen = exhaustive ? *exhaustive : *shortcut;
  report.method = chosen.method == PlacementMethod::Exhaustive ? "exhaustive"
                  : chosen.method == PlacementMethod::Centroid ? "centroid"
                                                               : "accessibility-shortcut";
  report.kemeny = to_double(chosen.kemeny);
  report.kemeny_exact = exact_repr(chosen.kemeny);
  report.candidates_evaluated = chosen.candidates_evaluated;
  report.optimal_count = chosen.optimal_count;
  for (size_t t = 0; t < tree.edges().size(); ++t) {
    auto [ci, cj] = tree.edges()[t];
    PlacementRow row;
    row.component_a = ci;
    row.label_a = components[ci].label(chosen.endpoints[t].first);
    row.component_b = cj;
    row.label_b = components[cj].label(chosen.endpoints[t].second);
    report.placement.push_back(std::move(row));
  }

  if (components.size() == 2) {
    const Graph& squares = reference_graph("two-squares");
    const Graph& chord = reference_graph("c5-chord");
    bool match = (graphs_isomorphic(components[0], squares) &&
                  graphs_isomorphic(components[1], chord)) ||
                 (graphs_isomorphic(components[0], chord) &&
                  graphs_isomorphic(components[1], squares));
    if (match)
      report.warnings.push_back(
          "this component pair is a well-known worked example; commonly quoted optima "
          "for it are 20.687 (min) and 25.947 (max), but direct computation gives "
          "7005/330 = 21.2273 (min) and 8741/330 = 26.4879 (max), and every method "
          "here reproduces the computed values");
  }
}

json to_json(const OptimizeReport& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["kind"] = "optimize";
  j["numeric_mode"] = r.numeric_mode;
  j["sense"] = r.sense;
  j["method"] = r.method;
  j["placement"] = json::array();
  for (const auto& p : r.placement)
    j["placement"].push_back({{"component_a", p.component_a},
                              {"vertex_a", p.label_a},
                              {"component_b", p.component_b},
                              {"vertex_b", p.label_b}});
  j["kemeny"] = r.kemeny;
  if (!r.kemeny_exact.empty()) j["kemeny_exact"] = r.kemeny_exact;
  j["candidates_evaluated"] = r.candidates_evaluated;
  j["optimal_count"] = r.optimal_count;
  j["cross_checked"] = r.cross_checked;
  j["cross_check_agrees"] = r.cross_check_agrees;
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace

OptimizeReport run_optimize(const std::vector<Graph>& components, const Graph& tree,
                            const OptimizeOptions& options) {
  if (components.size() < 2)
    throw ValidationError("optimize needs at least two component graphs");
  OptimizeReport report;
  report.numeric_mode = options.mode == NumericMode::Exact ? "exact" : "float";
  report.sense = options.sense == Sense::Min ? "min" : "max";
  if (options.mode == NumericMode::Exact)
    optimize_with<Rational>(components, tree, options, report);
  else
    optimize_with<double>(components, tree, options, report);
  return report;
}

std::string to_json_text(const OptimizeReport& r) { return to_json(r).dump(2); }

std::string to_text(const OptimizeReport& r) {
  std::ostringstream out;
  out << "sense: " << r.sense << "  method: " << r.method << "  mode: " << r.numeric_mode
      << "\nplacement:\n";
  for (const auto& p : r.placement)
    out << "  component " << p.component_a << " vertex '" << p.label_a
        << "'  ~  component " << p.component_b << " vertex '" << p.label_b << "'\n";
  out << "kemeny: " << scalar_repr(r.kemeny);
  if (!r.kemeny_exact.empty()) out << " (" << r.kemeny_exact << ")";
  out << "\ncandidates evaluated: " << r.candidates_evaluated
      << "  tied optima: " << r.optimal_count << "\n";
  if (r.cross_checked)
    out << "shortcut/exhaustive cross-check: " << (r.cross_check_agrees ? "agree" : "DISAGREE")
        << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// bench

namespace {

json to_json(const BenchReport& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["kind"] = "bench";
  j["family"] = r.family;
  j["count"] = r.count;
  j["clique_size"] = r.clique_size;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["direct_seconds"] = r.direct_seconds;
  j["chain_seconds"] = r.chain_seconds;
  j["speedup"] = r.speedup;
  j["direct_kemeny"] = r.direct_kemeny;
  j["chain_kemeny"] = r.chain_kemeny;
  j["relative_gap"] = r.relative_gap;
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace

BenchReport run_bench(const BenchOptions& options) {
  if (options.family != "chain-of-cliques")
    throw ValidationError("unknown benchmark family: " + options.family);
  if (options.count < 1 || options.clique_size < 2)
    throw ValidationError("need count >= 1 and clique size >= 2");
  const long long n = static_cast<long long>(options.count) * options.clique_size;
  if (n > options.vertex_guard)
    throw SizeLimitError("benchmark would build " + std::to_string(n) +
                             " vertices, above the memory guard " +
                             std::to_string(options.vertex_guard),
                         options.vertex_guard);

  BenchReport report;
  report.family = options.family;
  report.count = options.count;
  report.clique_size = options.clique_size;

  std::vector<Graph> components(options.count, complete_graph(options.clique_size));
  Graph tree = path_graph(options.count);
  std::vector<std::pair<int, int>> endpoints(tree.edges().size(), {0, 0});
  Graph parent = compose_chain(components, tree, endpoints);
  report.vertices = parent.vertex_count();
  report.edges = parent.edge_count();

  if (options.run_direct) {
    Stopwatch timer;
    report.direct_kemeny = kemeny_direct<double>(parent);
    report.direct_seconds = timer.seconds();
  }
  if (options.run_chain) {
    Stopwatch timer;
    auto dec = decompose(parent);
    std::vector<WalkSummary<double>> summaries;
    summaries.reserve(dec.component_count());
    for (const auto& comp : dec.components())
      summaries.push_back(analyze_walk<double>(comp.graph));
    auto weights = bridge_weights(dec);
    report.chain_kemeny = kemeny_chain(dec, summaries, weights).total;
    report.chain_seconds = timer.seconds();
  }
  if (options.run_direct && options.run_chain) {
    report.speedup = report.chain_seconds > 0
                         ? report.direct_seconds / report.chain_seconds
                         : std::numeric_limits<double>::infinity();
    report.relative_gap = std::fabs(report.direct_kemeny - report.chain_kemeny) /
                          std::max(1.0, std::fabs(report.direct_kemeny));
  }
  return report;
}

std::string to_json_text(const BenchReport& r) { return to_json(r).dump(2); }

std::string to_text(const BenchReport& r) {
  std::ostringstream out;
  out << "family " << r.family << ": " << r.count << " components of " << r.clique_size
      << " vertices -> " << r.vertices << " vertices, " << r.edges << " edges\n";
  out << "  method   seconds      kemeny\n";
  out << "  direct   " << scalar_repr(r.direct_seconds) << "  " << scalar_repr(r.direct_kemeny)
      << "\n";
  out << "  chain    " << scalar_repr(r.chain_seconds) << "  " << scalar_repr(r.chain_kemeny)
      << "\n";
  out << "speedup: " << scalar_repr(r.speedup)
      << "x, relative agreement gap: " << scalar_repr(r.relative_gap) << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

Graph resolve_tree_spec(const std::string& spec, int component_count) {
  if (spec == "star") return star_graph(component_count);
  if (spec == "path") return path_graph(component_count);
  Graph parsed = Graph::parse_file(spec);
  if (parsed.vertex_count() != component_count)
    throw ValidationError("tree file has " + std::to_string(parsed.vertex_count()) +
                          " nodes but " + std::to_string(component_count) +
                          " components were given");
  // Tree nodes are the 1-based component positions.
  std::vector<int> position(component_count, -1);
  for (int v = 0; v < parsed.vertex_count(); ++v) {
    int pos;
    try {
      pos = std::stoi(parsed.label(v));
    } catch (const std::exception&) {
      throw ValidationError("tree node label '" + parsed.label(v) +
                            "' is not a component position");
    }
    if (pos < 1 || pos > component_count || position[pos - 1] != -1)
      throw ValidationError("tree node labels must be the positions 1.." +
                            std::to_string(component_count) + " exactly once each");
    position[pos - 1] = v;
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<int> node_to_pos(component_count);
  for (int pos = 0; pos < component_count; ++pos) node_to_pos[position[pos]] = pos;
  for (const auto& [a, b] : parsed.edges())
    edges.emplace_back(node_to_pos[a], node_to_pos[b]);
  Graph tree(component_count, std::move(edges));
  if (component_count >= 2 &&
      (tree.edge_count() != component_count - 1 || !tree.is_connected()))
    throw ValidationError("tree file does not describe a tree over the components");
  return tree;
}

}  // namespace kemeny
