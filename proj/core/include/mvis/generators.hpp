#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mvis/graph.hpp"

namespace mvis {

struct LabeledGraph {
    Graph graph;
    std::string family;
    std::map<std::string, std::string> params;
    std::map<std::string, int> labels;  // bijection onto 0..n-1

    int id(const std::string& label) const;  // std::out_of_range naming the label
};

LabeledGraph path(int n);
LabeledGraph cycle(int n);
LabeledGraph complete(int n);
LabeledGraph complete_bipartite(int r, int t);  // parts {0..r-1}, {r..r+t-1}
LabeledGraph star(int n);                       // K_{1,n-1}, center v1

LabeledGraph petersen();
LabeledGraph heawood();

// Core 4-cycle 1-2-3-4-1, and per core edge {a,b} one private 4-cycle
// a,(ab)_i,(ba)_i,b per round i. n = 8k+4, m = 12k+4.
LabeledGraph g_k(int k);

// C_{4k} (x_1..x_{4k}) plus the path y_2..y_{2k} attached by edge x_1 y_2.
// n = m = 6k-1.
LabeledGraph frog(int k);

// Path v_1..v_p with p = 2k-1, and q = n-2k+1 pendant vertices on v_p.
LabeledGraph broom(int n, int k);

LabeledGraph cartesian_product(const LabeledGraph& a, const LabeledGraph& b);
LabeledGraph strong_product(const LabeledGraph& a, const LabeledGraph& b);
// One copy of b per vertex of a, fully joined to it. a's ids come first,
// copy i occupies ids n_a + i*n_b .. n_a + (i+1)*n_b - 1.
LabeledGraph corona_product(const LabeledGraph& a, const LabeledGraph& b);

// Disjoint A_r, A_s, K_r, K_s with full joins A_r-K_r and A_s-K_s plus the
// given A_r x A_s cross edges. validated reports whether every non-adjacent
// pair inside a factor has a common cross-neighbor in the other factor.
struct FamilyAResult {
    LabeledGraph labeled;
    bool validated = false;
};
FamilyAResult family_a(const Graph& a_r, const Graph& a_s, int r, int s,
                       const std::vector<std::pair<int, int>>& cross_edges);

// Union of b and b2; for every non-adjacent pair at factor distance d, a
// lexicographically first pair at factor distance d-2 on the other side is
// wired in (x' = y' when d = 2). Distances are those of the original
// factors, before any cross edges exist.
struct FamilyBSelection {
    int x, y;    // non-adjacent pair, combined ids
    int x2, y2;  // chosen far-side pair, combined ids
};
struct FamilyBResult {
    LabeledGraph labeled;
    std::vector<FamilyBSelection> log;
};
FamilyBResult family_b(const Graph& b, const Graph& b2);

// Sufficient condition certifying that `part` is a mutual-visibility set:
// every non-adjacent pair x,y inside part with d = d_G(x,y) must have
// neighbors x',y' outside part with an induced outside path of length d-2
// (a common outside neighbor when d = 2). Both parts passing certifies a
// 2-class coloring.
bool family_b_membership(const Graph& g, const VertexSet& part);

LabeledGraph random_tree(int n, std::uint64_t seed);
// Bernoulli(p) per pair, rejected until connected (bounded retries).
LabeledGraph random_connected_graph(int n, double p, std::uint64_t seed);

// "name" or "name:p1,p2" for the scalar-parameter families:
// path, cycle, complete, kbip, star, petersen, heawood, gk, frog, broom,
// random-tree, random-connected. Throws std::invalid_argument otherwise.
LabeledGraph parse_family_spec(const std::string& spec, std::uint64_t seed);

}  // namespace mvis
