#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mvis/budget.hpp"
#include "mvis/coloring.hpp"
#include "mvis/graph.hpp"

namespace mvis {

struct LowerBound {
    int amount = 0;
    // "n-over-mu" | "geodetic-diameter" | "unique-geodesic-path" | "exhaustive-search"
    std::string provenance;
};

struct ChimuCertificate {
    int value = 0;
    Coloring coloring;  // always a verified coloring with `value` classes
    LowerBound lower_bound;
    bool optimal = false;
};

// Exact chimu. Disconnected inputs are split into components; values are
// summed and class lists concatenated. Connected case: lower bounds from
// ceil(n/mu) (only when mu is certified), the geodetic diameter bound, and
// a unique-geodesic scan; incumbent from the greedy pass; then branch and
// bound over class assignments in descending-degree order, opening a new
// class only at index = current count.
ChimuCertificate chimu_exact(const Graph& g, const Budget& budget);

struct GreedyRound {
    int color = 0;  // 1-based
    VertexSet set;
};
struct GreedyTrace {
    std::vector<GreedyRound> rounds;
    std::string strategy;  // "solver" | "scripted"
    int total_colors = 0;
    bool exact = true;  // every round's set certified maximum
};

struct ScriptedRoundError : std::runtime_error {
    ScriptedRoundError(int round, const std::string& what);
    int round;  // 1-based
};

// Repeatedly color a largest mutual-visibility set among the uncolored
// vertices. Connected inputs only.
GreedyTrace greedy_coloring(const Graph& g, const Budget& budget);

// Same loop, but the first rounds take the scripted sets, each validated to
// be a maximum mutual-visibility set within the current uncolored vertices;
// after the script runs out the solver finishes the remainder.
GreedyTrace greedy_coloring_scripted(const Graph& g, const std::vector<VertexSet>& script,
                                     const Budget& budget);

}  // namespace mvis
