#pragma once

#include <utility>
#include <vector>

#include "mvis/coloring.hpp"
#include "mvis/graph.hpp"
#include "mvis/metrics.hpp"

namespace mvis {

bool is_block_graph(const Graph& g);  // every 2-connected block is a clique

// Peel all simplicial vertices per layer, one class per layer. Connected
// block graphs only; yields ceil((diam+1)/2) classes.
Coloring tree_block_coloring(const Graph& g);

// seed (a verified mutual-visibility set) as one class, the rest in
// ascending-id pairs plus a possible singleton. Class count is
// ceil((n-|seed|+2)/2) for non-empty seed, ceil(n/2) otherwise.
Coloring pad_with_pairs(const Graph& g, const DistanceMatrix& d, const VertexSet& seed);

using EdgeSet = std::vector<std::pair<int, int>>;

// Greedy: each edge (u < v, lexicographic order) joins the first part whose
// spanned vertex set stays free of 4-cycles of g. The spanned subgraphs are
// 4-cycle-free by construction; no part-count guarantee.
std::vector<EdgeSet> c4_free_edge_partition(const Graph& g);

// diam = 2, every distance-2 pair on a 4-cycle, and a disjoint cover of E
// by parts whose spanned vertex sets carry no 4-cycle of g; vertex v joins
// the class of the smallest part index among its incident edges. Classes
// inherit 4-cycle-freeness from their parts, which keeps every same-class
// distance-2 pair a common neighbor outside the class. Empty classes are
// dropped.
Coloring diam2_c4_coloring(const Graph& g, const std::vector<EdgeSet>& edge_partition);

// The explicit 2k classes {x_1, x_{2k+1}} and {y_j, x_j, x_{4k-(j-2)}} for
// j = 2..2k, on the vertex ids of frog(k).
Coloring frog_coloring(int k);

// Classes of g_coloring plus one class of all copy vertices, on the vertex
// ids of corona_product(g, h). Complete g collapses to {V(g)} + copies;
// g = P_3 uses {ends}, {center}, copies.
Coloring corona_lift(const Coloring& g_coloring, const Graph& g, const Graph& h);

}  // namespace mvis
