#pragma once

#include "kemeny/graph.hpp"

namespace kemeny {

// Backtracking isomorphism test with degree pruning. Meant for the small
// reference fixtures; declines (returns false) above 16 vertices.
bool graphs_isomorphic(const Graph& a, const Graph& b);

}  // namespace kemeny
