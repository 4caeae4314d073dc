#include "mvis/visibility.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace mvis {

namespace {

// Frontier-bitset BFS from x over `allowed`, capped at `limit` steps.
// Restricted distances are never below the true ones, so reaching y within
// d(x,y) steps certifies a geodesic with all internal vertices allowed.
bool restricted_reach(const Graph& g, int x, int y, const std::uint64_t* allowed, int limit) {
    const int words = g.word_count();
    thread_local std::vector<std::uint64_t> scratch;
    scratch.assign(static_cast<std::size_t>(3) * words, 0);
    std::uint64_t* visited = scratch.data();
    std::uint64_t* frontier = visited + words;
    std::uint64_t* next = frontier + words;
    visited[x >> 6] |= std::uint64_t{1} << (x & 63);
    frontier[x >> 6] |= std::uint64_t{1} << (x & 63);
    const std::uint64_t y_bit = std::uint64_t{1} << (y & 63);
    for (int step = 1; step <= limit; ++step) {
        std::fill(next, next + words, 0);
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = frontier[w];
            while (bits) {
                int v = (w << 6) + __builtin_ctzll(bits);
                bits &= bits - 1;
                const std::uint64_t* nb = g.neighbor_bits(v);
                for (int ww = 0; ww < words; ++ww) next[ww] |= nb[ww];
            }
        }
        if (next[y >> 6] & y_bit) return true;
        bool any = false;
        for (int w = 0; w < words; ++w) {
            next[w] &= allowed[w] & ~visited[w];
            visited[w] |= next[w];
            any |= next[w] != 0;
        }
        if (!any) return false;
        std::copy(next, next + words, frontier);
    }
    return false;
}

// allowed = (V \ s) + {x, y}; membership of x and y in s is irrelevant.
bool pair_visible(const Graph& g, const DistanceMatrix& d, const std::vector<char>& in_s, int x,
                  int y) {
    if (!d.reachable(x, y)) return false;
    const int target = d.row(x)[y];
    if (target <= 1) return true;
    thread_local std::vector<std::uint64_t> allowed;
    allowed.assign(static_cast<std::size_t>(g.word_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!in_s[static_cast<std::size_t>(v)]) allowed[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    allowed[x >> 6] |= std::uint64_t{1} << (x & 63);
    allowed[y >> 6] |= std::uint64_t{1} << (y & 63);
    return restricted_reach(g, x, y, allowed.data(), target);
}

std::vector<char> membership(const Graph& g, const VertexSet& s) {
    std::vector<char> in_s(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count()) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        }
        in_s[static_cast<std::size_t>(v)] = 1;
    }
    return in_s;
}

}  // namespace

bool pair_visible_flags(const Graph& g, const DistanceMatrix& d, const std::vector<char>& in_s,
                        int x, int y) {
    return pair_visible(g, d, in_s, x, y);
}

VisibilityVerdict is_pair_visible(const Graph& g, const DistanceMatrix& d, const VertexSet& s,
                                  int x, int y) {
    if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count()) {
        throw std::invalid_argument("vertex out of range");
    }
    if (x == y) throw std::invalid_argument("visibility is defined for distinct vertices");
    if (!d.reachable(x, y)) {
        throw std::invalid_argument("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                                    " are in different components");
    }
    auto in_s = membership(g, s);
    if (pair_visible(g, d, in_s, x, y)) return {true, d.row(x)[y]};
    return {false, -1};
}

MvCheck is_mv_set(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
    VertexSet cs = s;
    std::sort(cs.begin(), cs.end());
    auto in_s = membership(g, cs);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            if (!pair_visible(g, d, in_s, cs[i], cs[j])) return {false, cs[i], cs[j]};
        }
    }
    return {};
}

namespace {

// Search state shared by the include/exclude recursion. `cur` is always a
// verified mutual-visibility set.
struct MvSearch {
    const Graph& g;
    const DistanceMatrix& d;
    const Budget& budget;
    std::vector<char> in_cur;
    VertexSet cur;
    VertexSet best;
    int cap = 0;  // |allowed|; hitting it ends the search
    bool out_of_time = false;
    unsigned tick = 0;

    MvSearch(const Graph& graph, const DistanceMatrix& dist, const Budget& b)
        : g(graph), d(dist), budget(b), in_cur(static_cast<std::size_t>(graph.vertex_count()), 0) {}

    // cur + v stays a mutual-visibility set? Only pairs involving v plus old
    // pairs collinear with v need rechecking: v cannot be internal to any
    // geodesic of a non-collinear pair, and no other member changed.
    bool extends(int v) {
        in_cur[static_cast<std::size_t>(v)] = 1;
        bool ok = true;
        for (std::size_t i = 0; i < cur.size() && ok; ++i) {
            ok = pair_visible(g, d, in_cur, cur[i], v);
        }
        for (std::size_t i = 0; i < cur.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < cur.size() && ok; ++j) {
                const int x = cur[i], y = cur[j];
                if (d.row(x)[v] + d.row(v)[y] != d.row(x)[y]) continue;
                ok = pair_visible(g, d, in_cur, x, y);
            }
        }
        in_cur[static_cast<std::size_t>(v)] = 0;
        return ok;
    }

    void push(int v) {
        in_cur[static_cast<std::size_t>(v)] = 1;
        cur.push_back(v);
    }
    void pop() {
        in_cur[static_cast<std::size_t>(cur.back())] = 0;
        cur.pop_back();
    }

    void dfs(const VertexSet& candidates) {
        if ((++tick & 255u) == 0 && budget.exhausted()) {
            out_of_time = true;
            return;
        }
        if (cur.size() > best.size()) best = cur;
        if (static_cast<int>(best.size()) == cap) return;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (cur.size() + (candidates.size() - i) <= best.size()) break;
            const int v = candidates[i];
            if (!extends(v)) continue;
            push(v);
            VertexSet live;
            live.reserve(candidates.size() - i - 1);
            for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                // (v, c) must stay visible inside cur + {v, c}; dropping c
                // otherwise is sound because supersets only see less.
                const int c = candidates[j];
                in_cur[static_cast<std::size_t>(c)] = 1;
                if (pair_visible(g, d, in_cur, v, c)) live.push_back(c);
                in_cur[static_cast<std::size_t>(c)] = 0;
            }
            dfs(live);
            pop();
            if (out_of_time || static_cast<int>(best.size()) == cap) return;
        }
    }
};

VertexSet greedy_grow(MvSearch& search, const VertexSet& order) {
    for (int v : order) {
        if (search.extends(v)) search.push(v);
    }
    VertexSet grown = search.cur;
    while (!search.cur.empty()) search.pop();
    return grown;
}

}  // namespace

MuCertificate max_mv_subset(const Graph& g, const DistanceMatrix& d, const VertexSet& allowed,
                            const Budget& budget) {
    if (!is_connected(g)) {
        throw std::invalid_argument("mutual-visibility search needs a connected graph");
    }
    VertexSet base = canonical_vertex_set(g, allowed);
    if (base.empty()) throw std::invalid_argument("allowed set must be non-empty");

    // Descending degree, ties by id: high-degree vertices anchor the
    // neighborhood seed and give early incumbents.
    VertexSet order = base;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.neighbors(a).size() > g.neighbors(b).size();
    });

    MvSearch search(g, d, budget);
    search.cap = static_cast<int>(base.size());

    std::vector<char> in_base(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : base) in_base[static_cast<std::size_t>(v)] = 1;

    // Incumbent seeds: the largest in-allowed open neighborhood when it
    // verifies, plus greedy completions over both directions of the order.
    VertexSet best_nbhd;
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexSet nb;
        for (int w : g.neighbors(v)) {
            if (in_base[static_cast<std::size_t>(w)]) nb.push_back(w);
        }
        if (nb.size() > best_nbhd.size()) best_nbhd = std::move(nb);
    }
    if (!best_nbhd.empty() && is_mv_set(g, d, best_nbhd).ok) search.best = best_nbhd;

    VertexSet fwd = greedy_grow(search, order);
    if (fwd.size() > search.best.size()) search.best = fwd;
    VertexSet rev_order(order.rbegin(), order.rend());
    VertexSet rev = greedy_grow(search, rev_order);
    if (rev.size() > search.best.size()) search.best = rev;

    if (static_cast<int>(search.best.size()) < search.cap) search.dfs(order);

    MuCertificate cert;
    cert.witness = canonical_vertex_set(g, search.best);
    cert.value = static_cast<int>(cert.witness.size());
    if (search.out_of_time) {
        cert.optimal = false;
        cert.proof = "budget-exhausted";
    } else {
        cert.optimal = true;
        cert.proof = cert.value == search.cap ? "size-cap" : "exhaustive-search";
    }
    if (!is_mv_set(g, d, cert.witness).ok) {
        throw std::logic_error("witness failed the final mutual-visibility check");
    }
    return cert;
}

MuCertificate mu_exact(const Graph& g, const DistanceMatrix& d, const Budget& budget) {
    VertexSet all(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    return max_mv_subset(g, d, all, budget);
}

}  // namespace mvis
