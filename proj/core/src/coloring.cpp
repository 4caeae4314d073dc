#include "mvis/coloring.hpp"

#include <algorithm>

#include "mvis/visibility.hpp"

namespace mvis {

PartitionError::PartitionError(int v, const std::string& what)
    : std::runtime_error(what), vertex(v) {}

namespace {

std::vector<int> partition_class_of(int n, const std::vector<VertexSet>& classes) {
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (int v : classes[c]) {
            if (v < 0 || v >= n) {
                throw PartitionError(v, "vertex " + std::to_string(v) + " out of range");
            }
            if (class_of[static_cast<std::size_t>(v)] != -1) {
                throw PartitionError(v, "vertex " + std::to_string(v) + " appears in classes " +
                                            std::to_string(class_of[static_cast<std::size_t>(v)]) +
                                            " and " + std::to_string(c));
            }
            class_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (class_of[static_cast<std::size_t>(v)] == -1) {
            throw PartitionError(v, "vertex " + std::to_string(v) + " is missing from the classes");
        }
    }
    return class_of;
}

}  // namespace

Coloring make_coloring(int n, std::vector<VertexSet> classes) {
    for (auto& cls : classes) {
        std::sort(cls.begin(), cls.end());
        if (cls.empty()) throw PartitionError(-1, "empty color class");
    }
    Coloring out;
    out.class_of = partition_class_of(n, classes);
    out.classes = std::move(classes);
    return out;
}

ColoringReport verify_coloring(const Graph& g, const DistanceMatrix& d,
                               const std::vector<VertexSet>& classes) {
    partition_class_of(g.vertex_count(), classes);
    ColoringReport report;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        MvCheck check = is_mv_set(g, d, classes[c]);
        report.classes.push_back({static_cast<int>(c), check.ok, check.fail_x, check.fail_y});
        report.valid = report.valid && check.ok;
    }
    return report;
}

}  // namespace mvis
