#pragma once

// Brute-force reference implementations. Deliberately written against the
// definitions alone (simple-path enumeration, subset and partition
// exhaustion), sharing no machinery with the solvers they check.

#include <vector>

#include "mvis/graph.hpp"

namespace mvis::oracle {

// Length of a shortest u,v-path found by enumerating simple paths; -1 when
// none exists.
int distance(const Graph& g, int u, int v);

// Some shortest x,y-path has all internal vertices outside s.
bool visible(const Graph& g, const std::vector<int>& s, int x, int y);

bool is_mv_set(const Graph& g, const std::vector<int>& s);

// Maximum mutual-visibility set size by 2^n subset enumeration.
int mu(const Graph& g);

// Same, restricted to subsets of `allowed`.
int max_mv_subset(const Graph& g, const std::vector<int>& allowed);

// Minimum class count over all set partitions of V (Bell-number scan).
int chimu(const Graph& g);

// Minimum proper vertex coloring size by backtracking over k = 1..n.
int chromatic(const Graph& g);

// Maximum ones in an m x n 0/1 matrix with no all-ones 2x2 submatrix, by
// enumerating all 2^(m*n) matrices. Requires m*n <= 16.
int zarankiewicz(int m, int n);

}  // namespace mvis::oracle
