#pragma once

#include <vector>

#include "kemeny/graph.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/numeric.hpp"

namespace kemeny {

// Exhaustive enumeration over edge subsets. Everything here is integer or
// rational arithmetic; no floating point. Intended as ground truth for the
// algebraic paths on small graphs.

inline constexpr int kOracleEdgeLimit = 24;

// Counts of two-tree spanning forests separating each vertex pair, plus
// the spanning tree count.
struct ForestCount {
  Matrix<BigInt> pair_counts;  // symmetric, zero diagonal
  BigInt tree_count;
};

// Exact spanning-tree count by iterating edge subsets of size n-1.
// Refuses graphs with more than edge_limit edges.
BigInt enumerate_spanning_trees(const Graph& g, int edge_limit = kOracleEdgeLimit);

// Number of two-tree spanning forests with i and j in different trees.
BigInt two_tree_forest_count(const Graph& g, int i, int j,
                             int edge_limit = kOracleEdgeLimit);

// All pair counts in one sweep over the size n-2 subsets.
ForestCount forest_count_matrix(const Graph& g, int edge_limit = kOracleEdgeLimit);

// Kemeny's constant from pure counting.
Rational kemeny_via_forests(const Graph& g, int edge_limit = kOracleEdgeLimit);

}  // namespace kemeny
