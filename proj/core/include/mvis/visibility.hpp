#pragma once

#include <string>

#include "mvis/budget.hpp"
#include "mvis/graph.hpp"
#include "mvis/metrics.hpp"

namespace mvis {

struct VisibilityVerdict {
    bool visible = false;
    int witness_length = -1;  // equals d(x,y) when visible
};

// True iff some shortest x,y-path has all internal vertices outside s.
// Requires x != y, both in range, and the pair reachable; membership of x,y
// in s is irrelevant. Adjacent pairs are always visible.
VisibilityVerdict is_pair_visible(const Graph& g, const DistanceMatrix& d, const VertexSet& s,
                                  int x, int y);

// Solver-strength variant: membership flags instead of a set, no argument
// validation, false for unreachable pairs.
bool pair_visible_flags(const Graph& g, const DistanceMatrix& d, const std::vector<char>& in_s,
                        int x, int y);

struct MvCheck {
    bool ok = true;
    int fail_x = -1;  // lexicographically first failing pair when !ok
    int fail_y = -1;
};

// Pairs in different components are reported as failing rather than raising.
MvCheck is_mv_set(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

struct MuCertificate {
    int value = 0;
    VertexSet witness;
    bool optimal = false;
    // "exhaustive-search": the branch and bound ran to completion.
    // "size-cap": the witness covers every allowed vertex.
    // "budget-exhausted": flagged partial result.
    std::string proof;
};

// Exact mu(G) for connected g. Branch and bound over the downward-closed
// family of mutual-visibility sets; vertices in descending-degree order,
// ties by id.
MuCertificate mu_exact(const Graph& g, const DistanceMatrix& d, const Budget& budget);

// Largest mutual-visibility set of the whole graph contained in `allowed`
// (witness geodesics may leave `allowed`).
MuCertificate max_mv_subset(const Graph& g, const DistanceMatrix& d, const VertexSet& allowed,
                            const Budget& budget);

}  // namespace mvis
