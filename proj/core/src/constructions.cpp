#include "mvis/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mvis/generators.hpp"
#include "mvis/visibility.hpp"

namespace mvis {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

// Iterative Tarjan lowpoint pass collecting the vertex sets of the
// biconnected blocks.
std::vector<VertexSet> biconnected_blocks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::size_t> next_nbr(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<VertexSet> blocks;

    auto pop_block = [&](int u, int v) {
        VertexSet block;
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(a);
            block.push_back(b);
            if (a == u && b == v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
    };

    for (int root = 0; root < n; ++root) {
        if (depth[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<int> stack{root};
        depth[static_cast<std::size_t>(root)] = 0;
        low[static_cast<std::size_t>(root)] = 0;
        while (!stack.empty()) {
            int u = stack.back();
            auto& i = next_nbr[static_cast<std::size_t>(u)];
            if (i < g.neighbors(u).size()) {
                int w = g.neighbors(u)[i++];
                if (depth[static_cast<std::size_t>(w)] == -1) {
                    parent[static_cast<std::size_t>(w)] = u;
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
                    low[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(w)];
                    edge_stack.emplace_back(u, w);
                    stack.push_back(w);
                } else if (w != parent[static_cast<std::size_t>(u)] &&
                           depth[static_cast<std::size_t>(w)] < depth[static_cast<std::size_t>(u)]) {
                    edge_stack.emplace_back(u, w);
                    low[static_cast<std::size_t>(u)] =
                        std::min(low[static_cast<std::size_t>(u)], depth[static_cast<std::size_t>(w)]);
                }
            } else {
                stack.pop_back();
                if (int p = parent[static_cast<std::size_t>(u)]; p != -1) {
                    low[static_cast<std::size_t>(p)] =
                        std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(u)]);
                    if (low[static_cast<std::size_t>(u)] >= depth[static_cast<std::size_t>(p)]) {
                        pop_block(p, u);
                    }
                }
            }
        }
    }
    return blocks;
}

}  // namespace

bool is_block_graph(const Graph& g) {
    for (const auto& block : biconnected_blocks(g)) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                if (!g.adjacent(block[i], block[j])) return false;
            }
        }
    }
    return true;
}

Coloring tree_block_coloring(const Graph& g) {
    require(is_connected(g), "tree_block_coloring: graph must be connected");
    require(is_block_graph(g), "tree_block_coloring: every block must be a clique");
    const int n = g.vertex_count();
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> classes;
    int left = n;
    while (left > 0) {
        // Simplicial vertices of the surviving graph: the whole layer is one
        // class; in a block graph they see each other along clique edges or
        // through interior cut vertices peeled later.
        VertexSet layer;
        for (int v = 0; v < n; ++v) {
            if (gone[static_cast<std::size_t>(v)]) continue;
            bool simplicial = true;
            const auto& nb = g.neighbors(v);
            for (std::size_t i = 0; i < nb.size() && simplicial; ++i) {
                if (gone[static_cast<std::size_t>(nb[i])]) continue;
                for (std::size_t j = i + 1; j < nb.size() && simplicial; ++j) {
                    if (gone[static_cast<std::size_t>(nb[j])]) continue;
                    simplicial = g.adjacent(nb[i], nb[j]);
                }
            }
            if (simplicial) layer.push_back(v);
        }
        for (int v : layer) gone[static_cast<std::size_t>(v)] = 1;
        left -= static_cast<int>(layer.size());
        classes.push_back(std::move(layer));
    }
    return make_coloring(n, std::move(classes));
}

Coloring pad_with_pairs(const Graph& g, const DistanceMatrix& d, const VertexSet& seed) {
    require(is_connected(g), "pad_with_pairs: graph must be connected");
    VertexSet canon = canonical_vertex_set(g, seed);
    MvCheck check = is_mv_set(g, d, canon);
    if (!check.ok) {
        throw std::invalid_argument("pad_with_pairs: seed is not a mutual-visibility set (pair " +
                                    std::to_string(check.fail_x) + ", " +
                                    std::to_string(check.fail_y) + " blocked)");
    }
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : canon) used[static_cast<std::size_t>(v)] = 1;
    std::vector<VertexSet> classes;
    if (!canon.empty()) classes.push_back(canon);
    VertexSet pending;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        pending.push_back(v);
        if (pending.size() == 2) {
            classes.push_back(pending);
            pending.clear();
        }
    }
    if (!pending.empty()) classes.push_back(pending);
    return make_coloring(g.vertex_count(), std::move(classes));
}

namespace {

// Invariant: the subgraph of g spanned by a part's touched vertices has no
// 4-cycle. Any new 4-cycle after adding (u,v) must pass through u or v, so
// it shows up as two touched neighbors of u (or v) with a second common
// touched neighbor.
bool closes_c4(const Graph& g, const std::vector<char>& touched, int u, int v) {
    auto in_set = [&](int w) {
        return w == u || w == v || touched[static_cast<std::size_t>(w)] != 0;
    };
    for (int w : {u, v}) {
        const auto& nbrs = g.neighbors(w);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (!in_set(nbrs[i])) continue;
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (!in_set(nbrs[j])) continue;
                for (int b : g.neighbors(nbrs[i])) {
                    if (b != w && in_set(b) && g.adjacent(nbrs[j], b)) return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

std::vector<EdgeSet> c4_free_edge_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<EdgeSet> parts;
    std::vector<std::vector<char>> touched;  // one vertex-membership row per part
    for (const auto& [u, v] : g.edges()) {
        std::size_t target = parts.size();
        for (std::size_t p = 0; p < parts.size(); ++p) {
            if (!closes_c4(g, touched[p], u, v)) {
                target = p;
                break;
            }
        }
        if (target == parts.size()) {
            parts.emplace_back();
            touched.emplace_back(static_cast<std::size_t>(n), 0);
        }
        parts[target].emplace_back(u, v);
        touched[target][static_cast<std::size_t>(u)] = 1;
        touched[target][static_cast<std::size_t>(v)] = 1;
    }
    return parts;
}

Coloring diam2_c4_coloring(const Graph& g, const std::vector<EdgeSet>& edge_partition) {
    const int n = g.vertex_count();
    const DistanceMatrix d = all_pairs_distances(g);
    auto diam = diameter(d);
    require(diam && *diam == 2, "diam2_c4_coloring: diameter must be exactly 2");
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (d.row(u)[v] != 2) continue;
            int common = 0;
            for (int w : g.neighbors(u)) common += g.adjacent(v, w) ? 1 : 0;
            require(common >= 2, "diam2_c4_coloring: distance-2 pair (" + std::to_string(u) +
                                     ", " + std::to_string(v) + ") lies on no 4-cycle");
        }
    }

    // The parts must cover E exactly once and stay 4-cycle-free.
    std::vector<std::vector<int>> part_of(static_cast<std::size_t>(n),
                                          std::vector<int>(static_cast<std::size_t>(n), -1));
    int covered = 0;
    for (std::size_t p = 0; p < edge_partition.size(); ++p) {
        for (auto [u, v] : edge_partition[p]) {
            require(u >= 0 && u < n && v >= 0 && v < n && g.adjacent(u, v),
                    "diam2_c4_coloring: part " + std::to_string(p) + " contains a non-edge");
            require(part_of[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == -1,
                    "diam2_c4_coloring: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") covered twice");
            part_of[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = static_cast<int>(p);
            part_of[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = static_cast<int>(p);
            ++covered;
        }
    }
    require(covered == g.edge_count(), "diam2_c4_coloring: parts do not cover every edge");
    for (std::size_t p = 0; p < edge_partition.size(); ++p) {
        std::vector<char> touched(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : edge_partition[p]) {
            touched[static_cast<std::size_t>(u)] = 1;
            touched[static_cast<std::size_t>(v)] = 1;
        }
        // A 4-cycle among the part's vertices shows up as a pair with two
        // common neighbors inside the part. Classes below are subsets of
        // these vertex sets, so they inherit 4-cycle-freeness; without it
        // a same-class distance-2 pair could lose all its common neighbors
        // to the class.
        for (int u = 0; u < n; ++u) {
            if (!touched[static_cast<std::size_t>(u)]) continue;
            for (int v = u + 1; v < n; ++v) {
                if (!touched[static_cast<std::size_t>(v)]) continue;
                int common = 0;
                for (int w : g.neighbors(u)) {
                    if (w != v && touched[static_cast<std::size_t>(w)] && g.adjacent(v, w)) {
                        ++common;
                    }
                }
                require(common < 2, "diam2_c4_coloring: part " + std::to_string(p) +
                                        " spans a 4-cycle through " + std::to_string(u) +
                                        " and " + std::to_string(v));
            }
        }
    }

    std::vector<VertexSet> classes(edge_partition.size());
    for (int v = 0; v < n; ++v) {
        int cls = -1;
        for (int w : g.neighbors(v)) {
            int p = part_of[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
            if (cls == -1 || p < cls) cls = p;
        }
        require(cls != -1, "diam2_c4_coloring: isolated vertex " + std::to_string(v));
        classes[static_cast<std::size_t>(cls)].push_back(v);
    }
    classes.erase(std::remove_if(classes.begin(), classes.end(),
                                 [](const VertexSet& c) { return c.empty(); }),
                  classes.end());
    return make_coloring(n, std::move(classes));
}

Coloring frog_coloring(int k) {
    require(k >= 2, "frog_coloring: k must be at least 2");
    // Ids as in frog(k): x_j -> j-1, y_j -> 4k + j - 2.
    auto x = [&](int j) { return j - 1; };
    auto y = [&](int j) { return 4 * k + j - 2; };
    std::vector<VertexSet> classes;
    classes.push_back({x(1), x(2 * k + 1)});
    for (int j = 2; j <= 2 * k; ++j) {
        VertexSet cls{y(j), x(j), x(4 * k - (j - 2))};
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return make_coloring(6 * k - 1, std::move(classes));
}

Coloring corona_lift(const Coloring& g_coloring, const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    require(ng >= 2 && is_connected(g), "corona_lift: first factor must be connected, order >= 2");
    const int total = ng * (1 + nh);
    VertexSet copies;
    for (int v = ng; v < total; ++v) copies.push_back(v);

    bool is_complete = g.edge_count() == ng * (ng - 1) / 2;
    if (is_complete) {
        VertexSet base(static_cast<std::size_t>(ng));
        std::iota(base.begin(), base.end(), 0);
        return make_coloring(total, {base, copies});
    }
    bool is_p3 = ng == 3 && g.edge_count() == 2;
    if (is_p3) {
        // The degree-2 vertex is the center; a geodetic P_5 through it
        // forces three classes.
        int center = 0;
        for (int v = 0; v < 3; ++v) {
            if (g.neighbors(v).size() == 2) center = v;
        }
        VertexSet ends;
        for (int v = 0; v < 3; ++v) {
            if (v != center) ends.push_back(v);
        }
        return make_coloring(total, {ends, {center}, copies});
    }

    const DistanceMatrix dg = all_pairs_distances(g);
    ColoringReport report = verify_coloring(g, dg, g_coloring.classes);
    require(report.valid, "corona_lift: the factor coloring is not a mutual-visibility coloring");
    std::vector<VertexSet> classes = g_coloring.classes;
    classes.push_back(copies);
    return make_coloring(total, std::move(classes));
}

}  // namespace mvis
