#pragma once

#include <string>
#include <vector>

#include "kemeny/errors.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/numeric.hpp"

namespace kemeny {

struct WalkOptions {
  // Mean first passage times cost n linear solves; request them only when
  // the first-passage form or the identity checks need them.
  bool with_mfpt = false;
};

// Every random-walk quantity of one connected graph. Instantiated with
// double or with Rational for exact arithmetic.
//
// Single-vertex graphs get the convention used by the bridge composition:
// kemeny = 0, moment = 0, accessibility = 0, tree_count = 1. The strict
// per-quantity functions below still reject such inputs.
template <typename Scalar>
struct WalkSummary {
  int vertex_count = 0;
  long long edge_count = 0;
  std::vector<long long> degrees;
  Scalar tree_count{};
  Matrix<Scalar> resistance;         // symmetric, zero diagonal
  Matrix<Scalar> forest;             // tree_count * resistance
  std::vector<Scalar> stationary;    // degrees / (2m)
  Matrix<Scalar> mfpt;               // empty unless requested
  bool has_mfpt = false;
  Scalar kemeny{};
  std::vector<Scalar> accessibility;
  std::vector<Scalar> moment;        // resistance * degree vector
  Scalar resistance_quadratic{};     // degrees . moment, equals 4 m kemeny
  std::vector<std::string> warnings;
};

template <typename Scalar>
Matrix<Scalar> laplacian(const Graph& g) {
  const int n = g.vertex_count();
  Matrix<Scalar> l(n, n);
  for (int v = 0; v < n; ++v) {
    l(v, v) = Scalar(g.degree(v));
    for (int w : g.neighbors(v)) l(v, w) = Scalar(-1);
  }
  return l;
}

// Matrix-tree count. Exact mode runs fraction-free elimination on the
// integer Laplacian minor; float mode uses an LU determinant.
template <typename Scalar>
Scalar spanning_tree_count(const Graph& g) {
  g.require_connected("spanning_tree_count");
  const int n = g.vertex_count();
  if (n == 0) throw ValidationError("spanning_tree_count: empty graph");
  if (n == 1) return Scalar(1);
  if constexpr (is_exact_v<Scalar>) {
    Matrix<BigInt> minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      minor(i - 1, i - 1) = g.degree(i);
      for (int w : g.neighbors(i))
        if (w >= 1) minor(i - 1, w - 1) = -1;
    }
    return Rational(bareiss_determinant(std::move(minor)));
  } else {
    Matrix<double> minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      minor(i - 1, i - 1) = g.degree(i);
      for (int w : g.neighbors(i))
        if (w >= 1) minor(i - 1, w - 1) = -1.0;
    }
    return determinant(std::move(minor));
  }
}

// Moore-Penrose inverse of the Laplacian via the rank-one shift
// (L + J/n)^{-1} - J/n; exact-mode friendly, no SVD.
template <typename Scalar>
Matrix<Scalar> laplacian_pseudoinverse(const Graph& g) {
  g.require_connected("laplacian_pseudoinverse");
  const int n = g.vertex_count();
  Matrix<Scalar> shifted = laplacian<Scalar>(g);
  const Scalar inv_n = scalar_ratio<Scalar>(1, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) shifted(i, j) += inv_n;
  Matrix<Scalar> pinv = inverse(std::move(shifted));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pinv(i, j) -= inv_n;
  return pinv;
}

template <typename Scalar>
Matrix<Scalar> resistance_matrix(const Graph& g) {
  const int n = g.vertex_count();
  Matrix<Scalar> pinv = laplacian_pseudoinverse<Scalar>(g);
  Matrix<Scalar> r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar v = pinv(i, i) + pinv(j, j) - pinv(i, j) - pinv(j, i);
      r(i, j) = v;
      r(j, i) = std::move(v);
    }
  return r;
}

template <typename Scalar>
std::vector<Scalar> stationary_distribution(const Graph& g) {
  g.require_connected("stationary_distribution");
  if (g.edge_count() == 0)
    throw ValidationError("stationary_distribution: graph has no edges");
  const long long two_m = 2 * g.edge_count();
  std::vector<Scalar> pi(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    pi[v] = scalar_ratio<Scalar>(g.degree(v), two_m);
  return pi;
}

// Mean first passage times, column by column: for each target j solve
// (I - P_(j)) x = 1 over the remaining vertices, P the random-walk
// transition matrix.
template <typename Scalar>
Matrix<Scalar> mfpt_matrix(const Graph& g) {
  g.require_connected("mfpt_matrix");
  const int n = g.vertex_count();
  if (n < 2) throw ValidationError("mfpt_matrix: need at least two vertices");
  Matrix<Scalar> m(n, n);
  std::vector<int> rest(n - 1);
  for (int j = 0; j < n; ++j) {
    int t = 0;
    for (int v = 0; v < n; ++v)
      if (v != j) rest[t++] = v;
    Matrix<Scalar> sys(n - 1, n - 1);
    for (int a = 0; a < n - 1; ++a) {
      const int v = rest[a];
      sys(a, a) = Scalar(1);
      const Scalar step = scalar_ratio<Scalar>(1, g.degree(v));
      for (int w : g.neighbors(v)) {
        if (w == j) continue;
        int b = w - (w > j ? 1 : 0);
        sys(a, b) -= step;
      }
    }
    std::vector<Scalar> x = solve(std::move(sys), std::vector<Scalar>(n - 1, Scalar(1)));
    for (int a = 0; a < n - 1; ++a) m(rest[a], j) = std::move(x[a]);
  }
  return m;
}

template <typename Scalar>
Scalar kemeny_direct(const Graph& g) {
  g.require_connected("kemeny_direct");
  const int n = g.vertex_count();
  if (n < 2)
    throw ValidationError("kemeny_direct: undefined on a single vertex");
  Matrix<Scalar> r = resistance_matrix<Scalar>(g);
  std::vector<Scalar> d(n);
  for (int v = 0; v < n; ++v) d[v] = Scalar(g.degree(v));
  std::vector<Scalar> rd = r * d;
  Scalar quad = dot(d, rd);
  return quad / scalar_ratio<Scalar>(4 * g.edge_count(), 1);
}

// Stationary-weighted mean first passage into each vertex.
template <typename Scalar>
std::vector<Scalar> accessibility_vector(const Graph& g) {
  Matrix<Scalar> m = mfpt_matrix<Scalar>(g);
  std::vector<Scalar> pi = stationary_distribution<Scalar>(g);
  const int n = g.vertex_count();
  std::vector<Scalar> alpha(n, Scalar(0));
  for (int j = 0; j < n; ++j) {
    Scalar acc(0);
    for (int i = 0; i < n; ++i)
      if (i != j) acc += pi[i] * m(i, j);
    alpha[j] = std::move(acc);
  }
  return alpha;
}

template <typename Scalar>
Scalar moment(const Graph& g, int v) {
  g.require_connected("moment");
  if (v < 0 || v >= g.vertex_count())
    throw ValidationError("moment: vertex out of range");
  Matrix<Scalar> r = resistance_matrix<Scalar>(g);
  Scalar acc(0);
  for (int i = 0; i < g.vertex_count(); ++i) acc += Scalar(g.degree(i)) * r(i, v);
  return acc;
}

template <typename Scalar>
WalkSummary<Scalar> analyze_walk(const Graph& g, WalkOptions options = {}) {
  g.require_connected("analyze_walk");
  WalkSummary<Scalar> s;
  s.vertex_count = g.vertex_count();
  s.edge_count = g.edge_count();
  s.degrees = g.degrees();

  if (s.vertex_count == 1) {
    s.tree_count = Scalar(1);
    s.resistance = Matrix<Scalar>(1, 1);
    s.forest = Matrix<Scalar>(1, 1);
    s.stationary = {Scalar(1)};
    s.mfpt = Matrix<Scalar>(1, 1);
    s.has_mfpt = true;
    s.kemeny = Scalar(0);
    s.accessibility = {Scalar(0)};
    s.moment = {Scalar(0)};
    s.resistance_quadratic = Scalar(0);
    return s;
  }

  s.tree_count = spanning_tree_count<Scalar>(g);
  if constexpr (!is_exact_v<Scalar>) {
    if (s.tree_count > 1e15)
      s.warnings.push_back("spanning tree count " + scalar_repr(s.tree_count) +
                           " exceeds the exactly representable double range");
  }
  s.resistance = resistance_matrix<Scalar>(g);
  s.forest = s.resistance * s.tree_count;
  s.stationary = stationary_distribution<Scalar>(g);

  std::vector<Scalar> d(s.vertex_count);
  for (int v = 0; v < s.vertex_count; ++v) d[v] = Scalar(s.degrees[v]);
  s.moment = s.resistance * d;
  s.resistance_quadratic = dot(d, s.moment);
  s.kemeny = s.resistance_quadratic / scalar_ratio<Scalar>(4 * s.edge_count, 1);

  if (options.with_mfpt) {
    s.mfpt = mfpt_matrix<Scalar>(g);
    s.has_mfpt = true;
    s.accessibility.assign(s.vertex_count, Scalar(0));
    for (int j = 0; j < s.vertex_count; ++j) {
      Scalar acc(0);
      for (int i = 0; i < s.vertex_count; ++i)
        if (i != j) acc += s.stationary[i] * s.mfpt(i, j);
      s.accessibility[j] = std::move(acc);
    }
  } else {
    // moment = accessibility + kemeny, entrywise
    s.accessibility.resize(s.vertex_count);
    for (int v = 0; v < s.vertex_count; ++v)
      s.accessibility[v] = s.moment[v] - s.kemeny;
  }
  return s;
}

}  // namespace kemeny
