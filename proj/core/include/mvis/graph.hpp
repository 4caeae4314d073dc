#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mvis {

// Vertices are dense 0-based ints. A VertexSet is kept strictly increasing;
// canonical_vertex_set produces that form from arbitrary input.
using VertexSet = std::vector<int>;

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    // Duplicate edges (in either orientation) collapse to one. Self-loops and
    // out-of-range endpoints raise GraphError naming the offending pair.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    const std::uint64_t* neighbor_bits(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }
    int word_count() const { return words_; }

    void add_edge(int u, int v);  // validates endpoints; no-op when already present

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    // Label-sensitive equality: same order and same adjacency under identical ids.
    bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

  private:
    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
};

bool is_canonical_vertex_set(const Graph& g, const VertexSet& s);
VertexSet canonical_vertex_set(const Graph& g, VertexSet s);  // sorts, dedupes, range-checks

struct DegreeSummary {
    std::vector<int> degree;
    int max = 0;
    int min = 0;
};
DegreeSummary degrees(const Graph& g);

bool is_connected(const Graph& g);
std::vector<int> component_ids(const Graph& g);  // dense labels in BFS discovery order

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_id;  // new id -> id in the parent graph
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

}  // namespace mvis
