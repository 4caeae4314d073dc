#include "mvis/json_io.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace mvis {

using nlohmann::json;

namespace {

json to_json(const std::vector<VertexSet>& sets) {
    json arr = json::array();
    for (const auto& s : sets) arr.push_back(s);
    return arr;
}

}  // namespace

std::string mu_json(const MuCertificate& cert, int n, std::int64_t elapsed_ms) {
    json doc;
    doc["elapsed_ms"] = elapsed_ms;
    doc["n"] = n;
    doc["optimal"] = cert.optimal;
    doc["param"] = "mu";
    doc["proof"] = cert.proof;
    doc["value"] = cert.value;
    doc["witness"] = cert.witness;
    return doc.dump();
}

std::string chimu_json(const ChimuCertificate& cert, int n, bool valid,
                       std::int64_t elapsed_ms) {
    json doc;
    doc["classes"] = to_json(cert.coloring.classes);
    doc["elapsed_ms"] = elapsed_ms;
    doc["lower_bound"] = {{"amount", cert.lower_bound.amount},
                          {"provenance", cert.lower_bound.provenance}};
    doc["n"] = n;
    doc["optimal"] = cert.optimal;
    doc["param"] = "chimu";
    doc["valid"] = valid;
    doc["value"] = cert.value;
    return doc.dump();
}

std::string chi_json(const ChromaticResult& result, int n, std::int64_t elapsed_ms) {
    json doc;
    doc["elapsed_ms"] = elapsed_ms;
    doc["n"] = n;
    doc["optimal"] = result.optimal;
    doc["param"] = "chi";
    doc["value"] = result.value;
    return doc.dump();
}

std::string greedy_json(const GreedyTrace& trace, std::int64_t elapsed_ms) {
    json doc;
    doc["elapsed_ms"] = elapsed_ms;
    doc["exact"] = trace.exact;
    json rounds = json::array();
    for (const auto& r : trace.rounds) {
        rounds.push_back({{"color", r.color}, {"set", r.set}});
    }
    doc["rounds"] = std::move(rounds);
    doc["strategy"] = trace.strategy;
    doc["total_colors"] = trace.total_colors;
    return doc.dump();
}

std::string verify_json(const ColoringReport& report) {
    json doc;
    json classes = json::array();
    for (const auto& c : report.classes) {
        json entry;
        if (c.ok) {
            entry["fail_pair"] = nullptr;
        } else {
            entry["fail_pair"] = {c.fail_x, c.fail_y};
        }
        entry["index"] = c.index;
        entry["ok"] = c.ok;
        classes.push_back(std::move(entry));
    }
    doc["classes"] = std::move(classes);
    doc["valid"] = report.valid;
    return doc.dump();
}

std::string bound_report_json(const BoundReport& report) {
    json doc;
    json bounds = json::array();
    for (const auto& e : report.entries) {
        bounds.push_back({{"applicable", e.applicable},
                          {"id", e.id},
                          {"satisfied", e.satisfied},
                          {"value", e.value}});
    }
    doc["bounds"] = std::move(bounds);
    json exact;
    if (report.exact.chi) {
        exact["chi"] = *report.exact.chi;
    } else {
        exact["chi"] = nullptr;
    }
    exact["chimu"] = report.exact.chimu;
    exact["chimu_optimal"] = report.exact.chimu_optimal;
    exact["diameter"] = report.exact.diameter;
    exact["geodetic"] = report.exact.geodetic;
    if (report.exact.girth) {
        exact["girth"] = *report.exact.girth;
    } else {
        exact["girth"] = nullptr;
    }
    exact["max_degree"] = report.exact.max_degree;
    exact["min_degree"] = report.exact.min_degree;
    exact["mu"] = report.exact.mu;
    exact["mu_optimal"] = report.exact.mu_optimal;
    exact["n"] = report.exact.n;
    exact["radius"] = report.exact.radius;
    doc["exact"] = std::move(exact);
    doc["graph"] = report.graph_id;
    doc["notes"] = report.notes;
    return doc.dump();
}

std::string audit_summary_json(int instances, int violations) {
    json doc;
    doc["summary"] = {{"instances", instances}, {"violations", violations}};
    return doc.dump();
}

std::string sidecar_json(const LabeledGraph& lg) {
    json doc;
    doc["family"] = lg.family;
    doc["labels"] = lg.labels;
    doc["params"] = lg.params;
    return doc.dump();
}

std::string graph_doc_json(const LabeledGraph& lg) {
    json doc;
    json edges = json::array();
    for (const auto& [u, v] : lg.graph.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    doc["family"] = lg.family;
    doc["labels"] = lg.labels;
    doc["n"] = lg.graph.vertex_count();
    doc["params"] = lg.params;
    return doc.dump();
}

namespace {

json parse_or_throw(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw std::invalid_argument("malformed JSON document");
    return doc;
}

std::vector<VertexSet> sets_from(const json& arr, const char* what) {
    if (!arr.is_array()) throw std::invalid_argument(std::string(what) + ": expected a list of vertex lists");
    std::vector<VertexSet> sets;
    for (const auto& item : arr) {
        if (!item.is_array()) {
            throw std::invalid_argument(std::string(what) + ": expected a list of vertex lists");
        }
        VertexSet s;
        for (const auto& v : item) {
            if (!v.is_number_integer()) {
                throw std::invalid_argument(std::string(what) + ": vertex ids must be integers");
            }
            s.push_back(v.get<int>());
        }
        sets.push_back(std::move(s));
    }
    return sets;
}

}  // namespace

std::vector<VertexSet> parse_vertex_set_list(const std::string& text) {
    return sets_from(parse_or_throw(text), "script");
}

std::vector<VertexSet> parse_coloring_classes(const std::string& text) {
    json doc = parse_or_throw(text);
    if (doc.is_object()) {
        if (!doc.contains("classes")) {
            throw std::invalid_argument("coloring: object form needs a \"classes\" key");
        }
        return sets_from(doc["classes"], "coloring");
    }
    return sets_from(doc, "coloring");
}

Graph parse_graph_json(const std::string& text) {
    json doc = parse_or_throw(text);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
        throw std::invalid_argument("graph: expected an object with \"n\" and \"edges\"");
    }
    if (!doc["n"].is_number_integer()) throw std::invalid_argument("graph: \"n\" must be an integer");
    int n = doc["n"].get<int>();
    if (!doc["edges"].is_array()) throw std::invalid_argument("graph: \"edges\" must be a list");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            throw std::invalid_argument("graph: each edge must be a pair of integers");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph::from_edge_list(n, edges);
    } catch (const GraphError& err) {
        throw std::invalid_argument(std::string("graph: ") + err.what());
    }
}

SidecarData parse_sidecar_json(const std::string& text) {
    json doc = parse_or_throw(text);
    if (!doc.is_object() || !doc.contains("family") || !doc["family"].is_string()) {
        throw std::invalid_argument("sidecar: expected an object with a \"family\" string");
    }
    SidecarData data;
    data.family = doc["family"].get<std::string>();
    if (doc.contains("params")) {
        if (!doc["params"].is_object()) {
            throw std::invalid_argument("sidecar: \"params\" must be an object");
        }
        for (const auto& [key, value] : doc["params"].items()) {
            if (!value.is_string()) {
                throw std::invalid_argument("sidecar: params values must be strings");
            }
            data.params[key] = value.get<std::string>();
        }
    }
    return data;
}

}  // namespace mvis
