#include "mvis/edgelist.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace mvis {

EdgeListError::EdgeListError(int line_no, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}

namespace {

// Strips a trailing '#' comment and surrounding whitespace; empty result
// means the line carries no tokens.
std::string strip(const std::string& raw) {
    std::string s = raw;
    if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
    std::size_t start = s.find_first_not_of(" \t");
    return start == std::string::npos ? std::string() : s.substr(start);
}

bool parse_two_ints(const std::string& s, long long& a, long long& b) {
    std::istringstream in(s);
    std::string tail;
    if (!(in >> a >> b)) return false;
    if (in >> tail) return false;
    return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string raw;
    int line_no = 0;
    long long n = -1, m = -1;
    int header_line = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string s = strip(raw);
        if (s.empty()) continue;
        long long a, b;
        if (!parse_two_ints(s, a, b)) {
            throw EdgeListError(line_no, "expected two integers, got \"" + s + "\"");
        }
        if (n < 0) {
            if (a < 0 || b < 0) throw EdgeListError(line_no, "header counts must be non-negative");
            n = a;
            m = b;
            header_line = line_no;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m) {
            throw EdgeListError(line_no, "content after the declared " + std::to_string(m) + " edges");
        }
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw EdgeListError(line_no, "edge endpoint out of range [0, " + std::to_string(n) + ")");
        }
        if (a == b) throw EdgeListError(line_no, "self-loop at vertex " + std::to_string(a));
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (n < 0) throw EdgeListError(line_no == 0 ? 1 : line_no, "missing \"n m\" header");
    if (static_cast<long long>(edges.size()) != m) {
        throw EdgeListError(header_line, "declared " + std::to_string(m) + " edges, found " +
                                             std::to_string(edges.size()));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph read_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EdgeListError(0, "cannot open " + path);
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw EdgeListError(0, "cannot open " + path + " for writing");
    out << write_edge_list(g);
}

}  // namespace mvis
