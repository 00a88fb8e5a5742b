#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kemeny/graph.hpp"
#include "kemeny/optimizer.hpp"

namespace kemeny {

enum class NumericMode { Float, Exact };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int error = 1;
inline constexpr int unreadable = 2;
inline constexpr int invalid_input = 3;
inline constexpr int disconnected = 4;
inline constexpr int size_limit = 5;
inline constexpr int disagreement = 6;
}  // namespace exit_code

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
  std::vector<std::string> methods{"all"};  // direct, chain, chain-mfpt, forest-oracle
  NumericMode mode = NumericMode::Float;
  double tolerance = 1e-9;
  // Empty: split along every bridge. Otherwise label pairs to split along.
  std::vector<std::pair<std::string, std::string>> bridges;
  int oracle_edge_limit = 24;
};

struct MethodResult {
  std::string name;
  bool ran = false;
  std::string skip_reason;
  double kemeny = 0;
  std::string kemeny_exact;  // fraction string in exact mode
  double seconds = 0;
};

struct ComponentRow {
  int id = 0;
  int vertices = 0;
  long long edges = 0;
  std::string tree_count;
  double kemeny = 0;
  std::string kemeny_exact;
};

struct BreakdownRow {
  std::string form;  // "resistance" or "first-passage"
  double component_term = 0, contact_term = 0, cross_term = 0, bridge_term = 0, total = 0;
  std::string total_exact;
};

struct AnalysisReport {
  int schema_version = 1;
  std::string input;
  std::string numeric_mode;
  int vertices = 0;
  long long edges = 0;
  int bridge_count = 0;
  int split_bridge_count = 0;
  std::vector<ComponentRow> components;
  std::optional<BreakdownRow> breakdown;
  std::vector<MethodResult> methods;
  double max_deviation = 0;
  double tolerance = 0;
  bool agreement = true;
  std::vector<std::string> warnings;
};

AnalysisReport run_analysis(const Graph& g, const std::string& input_name,
                            const AnalyzeOptions& options);

std::string to_json_text(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

// ---------------------------------------------------------------------------
// optimize

struct OptimizeOptions {
  NumericMode mode = NumericMode::Float;
  Sense sense = Sense::Min;
  bool shortcut = true;
  bool exhaustive = false;
  long long cap = kDefaultPlacementCap;
};

struct PlacementRow {
  int component_a = 0;
  std::string label_a;
  int component_b = 0;
  std::string label_b;
};

struct OptimizeReport {
  int schema_version = 1;
  std::string numeric_mode;
  std::string sense;
  std::string method;
  std::vector<PlacementRow> placement;
  double kemeny = 0;
  std::string kemeny_exact;
  long long candidates_evaluated = 0;
  long long optimal_count = 0;
  bool cross_checked = false;  // shortcut and exhaustive both ran
  bool cross_check_agrees = true;
  std::vector<std::string> warnings;
};

OptimizeReport run_optimize(const std::vector<Graph>& components, const Graph& tree,
                            const OptimizeOptions& options);

std::string to_json_text(const OptimizeReport& r);
std::string to_text(const OptimizeReport& r);

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string family = "chain-of-cliques";
  int count = 8;        // components in the chain
  int clique_size = 8;  // vertices per component
  bool run_direct = true;
  bool run_chain = true;
  int vertex_guard = 3000;  // refuse dense work beyond this many vertices
};

struct BenchReport {
  int schema_version = 1;
  std::string family;
  int count = 0;
  int clique_size = 0;
  long long vertices = 0;
  long long edges = 0;
  double direct_seconds = 0;
  double chain_seconds = 0;
  double speedup = 0;
  double direct_kemeny = 0;
  double chain_kemeny = 0;
  double relative_gap = 0;
  std::vector<std::string> warnings;
};

BenchReport run_bench(const BenchOptions& options);

std::string to_json_text(const BenchReport& r);
std::string to_text(const BenchReport& r);

// Tree argument of the optimize command: "star", "path", or an edge-list
// file whose labels are the 1-based component positions.
Graph resolve_tree_spec(const std::string& spec, int component_count);

}  // namespace kemeny
