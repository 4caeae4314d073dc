#include "mvis/graph.hpp"

#include <algorithm>
#include <queue>

namespace mvis {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw GraphError("vertex count must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) {
        throw GraphError("bad edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    if (adjacent(u, v)) return;
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    auto& au = adj_[static_cast<std::size_t>(u)];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = adj_[static_cast<std::size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;  // already lexicographic: u ascending, adj sorted
}

bool is_canonical_vertex_set(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.vertex_count()) return false;
        if (i > 0 && s[i] <= s[i - 1]) return false;
    }
    return true;
}

VertexSet canonical_vertex_set(const Graph& g, VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count()) {
            throw GraphError("vertex " + std::to_string(v) + " out of range");
        }
    }
    return s;
}

DegreeSummary degrees(const Graph& g) {
    DegreeSummary out;
    const int n = g.vertex_count();
    out.degree.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out.degree[static_cast<std::size_t>(v)] = static_cast<int>(g.neighbors(v).size());
    if (n > 0) {
        out.max = *std::max_element(out.degree.begin(), out.degree.end());
        out.min = *std::min_element(out.degree.begin(), out.degree.end());
    }
    return out;
}

std::vector<int> component_ids(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::queue<int> q;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        comp[static_cast<std::size_t>(s)] = next;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (comp[static_cast<std::size_t>(v)] == -1) {
                    comp[static_cast<std::size_t>(v)] = next;
                    q.push(v);
                }
            }
        }
        ++next;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto comp = component_ids(g);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) out.add_edge(u, v);
        }
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    if (!is_canonical_vertex_set(g, vertices)) {
        throw GraphError("induced_subgraph requires a canonical vertex set");
    }
    InducedSubgraph out;
    out.graph = Graph(static_cast<int>(vertices.size()));
    out.original_id = vertices;
    std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) new_id[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (int w : g.neighbors(vertices[i])) {
            int j = new_id[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), j);
        }
    }
    return out;
}

}  // namespace mvis
