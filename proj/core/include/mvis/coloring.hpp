#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mvis/graph.hpp"
#include "mvis/metrics.hpp"

namespace mvis {

struct Coloring {
    std::vector<VertexSet> classes;  // pairwise disjoint, non-empty, cover V
    std::vector<int> class_of;       // derived from classes
};

struct PartitionError : std::runtime_error {
    PartitionError(int vertex, const std::string& what);
    int vertex;
};

// Validates that classes partition 0..n-1 (PartitionError names the first
// missing or duplicated vertex) and fills class_of.
Coloring make_coloring(int n, std::vector<VertexSet> classes);

struct ClassReport {
    int index = 0;
    bool ok = true;
    int fail_x = -1;
    int fail_y = -1;
};
struct ColoringReport {
    bool valid = true;
    std::vector<ClassReport> classes;
};

// Partition check first (PartitionError), then one mv verdict per class.
ColoringReport verify_coloring(const Graph& g, const DistanceMatrix& d,
                               const std::vector<VertexSet>& classes);

}  // namespace mvis
