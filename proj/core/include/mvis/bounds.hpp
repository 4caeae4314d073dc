#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvis/budget.hpp"
#include "mvis/graph.hpp"

namespace mvis {

struct ChromaticResult {
    int value = 0;
    bool optimal = false;
};
// Exact chromatic number; branch and bound with a greedy clique lower bound
// and a DSATUR incumbent. Desk scale n <= 16.
ChromaticResult chromatic_number_exact(const Graph& g, const Budget& budget);

// Maximum ones in an m x n 0/1 matrix with no all-ones 2x2 submatrix.
// Supported range 1 <= m, n <= 5; std::invalid_argument outside it.
int zarankiewicz_z22(int m, int n);

struct BoundEntry {
    std::string id;
    bool applicable = false;
    int value = 0;
    bool satisfied = true;  // vacuously true when inapplicable
};

struct ExactSummary {
    int n = 0;
    int mu = 0;
    int chimu = 0;
    std::optional<int> chi;
    int max_degree = 0;
    int min_degree = 0;
    int diameter = 0;
    int radius = 0;
    std::optional<int> girth;
    bool geodetic = false;
    bool mu_optimal = false;
    bool chimu_optimal = false;
};

// Family tag carried by generated instances; lets the audit apply the
// product- and corona-specific identities.
struct FamilyTag {
    std::string family;
    std::map<std::string, std::string> params;
};

struct BoundReport {
    std::string graph_id;
    ExactSummary exact;
    std::vector<BoundEntry> entries;
    std::vector<std::string> notes;
    bool any_violation = false;
};

// Evaluates every closed-form bound against certified exact values.
// Connected inputs only (std::invalid_argument otherwise). Budget-starved
// exact values mark the entries inapplicable with a note instead of
// judging against uncertified numbers.
BoundReport audit(const Graph& g, const std::string& graph_id,
                  const std::optional<FamilyTag>& tag, const Budget& budget);

}  // namespace mvis
