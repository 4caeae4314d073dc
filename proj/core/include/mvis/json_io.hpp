#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvis/bounds.hpp"
#include "mvis/chimu.hpp"
#include "mvis/coloring.hpp"
#include "mvis/generators.hpp"
#include "mvis/graph.hpp"
#include "mvis/visibility.hpp"

namespace mvis {

// All serializers emit compact JSON with keys in byte order, so equal
// inputs produce byte-identical documents (elapsed_ms aside).

std::string mu_json(const MuCertificate& cert, int n, std::int64_t elapsed_ms);
std::string chimu_json(const ChimuCertificate& cert, int n, bool valid, std::int64_t elapsed_ms);
std::string chi_json(const ChromaticResult& result, int n, std::int64_t elapsed_ms);
std::string greedy_json(const GreedyTrace& trace, std::int64_t elapsed_ms);
std::string verify_json(const ColoringReport& report);
std::string bound_report_json(const BoundReport& report);
std::string audit_summary_json(int instances, int violations);

std::string sidecar_json(const LabeledGraph& lg);    // {"family","labels","params"}
std::string graph_doc_json(const LabeledGraph& lg);  // adds "n" and "edges"

// Script files: a JSON list of vertex-id lists.
std::vector<VertexSet> parse_vertex_set_list(const std::string& text);
// Coloring files: either a bare list of lists or an object with "classes".
std::vector<VertexSet> parse_coloring_classes(const std::string& text);

Graph parse_graph_json(const std::string& text);  // graph_doc_json form
struct SidecarData {
    std::string family;
    std::map<std::string, std::string> params;
};
SidecarData parse_sidecar_json(const std::string& text);

}  // namespace mvis
