#pragma once

#include <string_view>
#include <vector>

#include "kemeny/graph.hpp"

namespace kemeny {

// Small named graphs used by the documentation, the regression tests, and
// the reporting layer's known-value checks:
//   "c4-k4-s4-chain"  4-cycle, complete 4, 4-star joined by two bridges
//   "two-squares"     two 4-cycles sharing one vertex
//   "c5-chord"        5-cycle plus one chord
const Graph& reference_graph(std::string_view name);

std::vector<std::string_view> reference_graph_names();

}  // namespace kemeny
