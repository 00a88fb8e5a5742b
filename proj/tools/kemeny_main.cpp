#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kemeny/errors.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/report.hpp"

namespace {

using namespace kemeny;

NumericMode default_mode() {
  const char* env = std::getenv("KEMENY_NUMERIC_MODE");
  if (env && std::string(env) == "exact") return NumericMode::Exact;
  return NumericMode::Float;
}

NumericMode pick_mode(bool exact_flag, bool float_flag) {
  if (exact_flag) return NumericMode::Exact;
  if (float_flag) return NumericMode::Float;
  return default_mode();
}

std::vector<std::pair<std::string, std::string>> parse_bridge_list(const std::string& spec) {
  std::vector<std::pair<std::string, std::string>> out;
  if (spec.empty() || spec == "all") return out;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    size_t colon = item.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == item.size())
      throw ValidationError("--bridges expects 'labelA:labelB,...', got '" + item + "'");
    out.emplace_back(item.substr(0, colon), item.substr(colon + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::unreadable;
  } catch (const DisconnectedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::disconnected;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::size_limit;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::invalid_input;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::invalid_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::error;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Kemeny's constant for graphs with bridges: direct computation, "
      "divide-and-conquer over the bridge decomposition, enumeration oracle, "
      "and bridge-placement optimization"};
  app.require_subcommand(1);

  // ---- analyze ----
  auto* analyze = app.add_subcommand("analyze", "compute Kemeny's constant of one graph");
  std::string an_input;
  std::vector<std::string> an_methods{"all"};
  bool an_exact = false, an_float = false;
  std::string an_bridges = "all";
  std::string an_output = "text";
  double an_tolerance = 1e-9;
  int an_oracle_limit = 24;
  analyze->add_option("input", an_input, "edge-list file")->required();
  analyze->add_option("--method", an_methods,
                      "direct, chain, chain-mfpt, forest-oracle, or all");
  analyze->add_flag("--exact", an_exact, "exact rational arithmetic");
  analyze->add_flag("--float", an_float, "double precision arithmetic");
  analyze->add_option("--bridges", an_bridges, "'all' or labelA:labelB,... to split along");
  analyze->add_option("--output", an_output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--tolerance", an_tolerance, "method agreement tolerance");
  analyze->add_option("--oracle-limit", an_oracle_limit, "edge cap for the enumeration oracle");

  // ---- optimize ----
  auto* optimize = app.add_subcommand("optimize", "choose bridge endpoints extremizing Kemeny");
  std::vector<std::string> op_inputs;
  std::string op_tree = "path";
  std::string op_sense = "min";
  std::string op_mode = "shortcut";
  bool op_exact = false, op_float = false;
  std::string op_output = "text";
  long long op_cap = kDefaultPlacementCap;
  optimize->add_option("inputs", op_inputs, "edge-list files, one per component")
      ->required()
      ->expected(-2);
  optimize->add_option("--tree", op_tree, "'star', 'path', or an edge-list file over 1..k");
  optimize->add_option("--sense", op_sense, "min or max")
      ->check(CLI::IsMember({"min", "max"}));
  optimize->add_option("--mode", op_mode, "shortcut, exhaustive, or both")
      ->check(CLI::IsMember({"shortcut", "exhaustive", "both"}));
  optimize->add_flag("--exact", op_exact, "exact rational arithmetic");
  optimize->add_flag("--float", op_float, "double precision arithmetic");
  optimize->add_option("--cap", op_cap, "exhaustive placement cap");
  optimize->add_option("--output", op_output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // ---- bench ----
  auto* bench = app.add_subcommand("bench", "time direct vs decomposed computation");
  std::string be_family = "chain-of-cliques";
  int be_count = 8;
  int be_clique = 8;
  std::string be_methods = "direct,chain";
  std::string be_output = "text";
  bench->add_option("--family", be_family, "benchmark family");
  bench->add_option("--k", be_count, "number of chained components");
  bench->add_option("--clique-size", be_clique, "vertices per component");
  bench->add_option("--methods", be_methods, "comma list out of direct,chain");
  bench->add_option("--output", be_output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    return guarded([&]() {
      AnalyzeOptions options;
      options.methods = an_methods;
      options.mode = pick_mode(an_exact, an_float);
      options.tolerance = an_tolerance;
      options.bridges = parse_bridge_list(an_bridges);
      options.oracle_edge_limit = an_oracle_limit;
      Graph g = Graph::parse_file(an_input);
      AnalysisReport report = run_analysis(g, an_input, options);
      std::cout << (an_output == "json" ? to_json_text(report) : to_text(report)) << "\n";
      return report.agreement ? exit_code::ok : exit_code::disagreement;
    });
  }

  if (optimize->parsed()) {
    return guarded([&]() {
      OptimizeOptions options;
      options.mode = pick_mode(op_exact, op_float);
      options.sense = op_sense == "max" ? Sense::Max : Sense::Min;
      options.shortcut = op_mode == "shortcut" || op_mode == "both";
      options.exhaustive = op_mode == "exhaustive" || op_mode == "both";
      options.cap = op_cap;
      std::vector<Graph> components;
      components.reserve(op_inputs.size());
      for (const auto& path : op_inputs) components.push_back(Graph::parse_file(path));
      Graph tree = resolve_tree_spec(op_tree, static_cast<int>(components.size()));
      OptimizeReport report = run_optimize(components, tree, options);
      std::cout << (op_output == "json" ? to_json_text(report) : to_text(report)) << "\n";
      return report.cross_check_agrees ? exit_code::ok : exit_code::disagreement;
    });
  }

  return guarded([&]() {
    BenchOptions options;
    options.family = be_family;
    options.count = be_count;
    options.clique_size = be_clique;
    options.run_direct = be_methods.find("direct") != std::string::npos;
    options.run_chain = be_methods.find("chain") != std::string::npos;
    BenchReport report = run_bench(options);
    std::cout << (be_output == "json" ? to_json_text(report) : to_text(report)) << "\n";
    return exit_code::ok;
  });
}
