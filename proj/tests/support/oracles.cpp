#include "support/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace mvis::oracle {

namespace {

void shortest_simple_path(const Graph& g, int v, int target, std::vector<char>& on_path,
                          int length, int& best) {
    if (v == target) {
        best = best == -1 ? length : std::min(best, length);
        return;
    }
    if (best != -1 && length >= best) return;
    for (int w : g.neighbors(v)) {
        if (on_path[static_cast<std::size_t>(w)]) continue;
        on_path[static_cast<std::size_t>(w)] = 1;
        shortest_simple_path(g, w, target, on_path, length + 1, best);
        on_path[static_cast<std::size_t>(w)] = 0;
    }
}

// Walks every shortest x,y-path; true when one avoids `blocked` internally.
bool clear_geodesic(const Graph& g, const std::vector<char>& blocked, int v, int target,
                    std::vector<char>& on_path, int remaining) {
    if (v == target) return remaining == 0;
    if (remaining == 0) return false;
    for (int w : g.neighbors(v)) {
        if (on_path[static_cast<std::size_t>(w)]) continue;
        if (w != target && blocked[static_cast<std::size_t>(w)]) continue;
        on_path[static_cast<std::size_t>(w)] = 1;
        bool found = clear_geodesic(g, blocked, w, target, on_path, remaining - 1);
        on_path[static_cast<std::size_t>(w)] = 0;
        if (found) return true;
    }
    return false;
}

}  // namespace

int distance(const Graph& g, int u, int v) {
    if (u == v) return 0;
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    on_path[static_cast<std::size_t>(u)] = 1;
    int best = -1;
    shortest_simple_path(g, u, v, on_path, 0, best);
    return best;
}

bool visible(const Graph& g, const std::vector<int>& s, int x, int y) {
    int d = distance(g, x, y);
    if (d == -1) return false;
    std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : s) blocked[static_cast<std::size_t>(v)] = 1;
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    on_path[static_cast<std::size_t>(x)] = 1;
    return clear_geodesic(g, blocked, x, y, on_path, d);
}

bool is_mv_set(const Graph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (!visible(g, s, s[i], s[j])) return false;
        }
    }
    return true;
}

namespace {

int best_subset(const Graph& g, const std::vector<int>& pool) {
    int best = 0;
    const auto count = static_cast<std::uint32_t>(pool.size());
    for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
        if (std::popcount(mask) <= best) continue;
        std::vector<int> s;
        for (std::uint32_t i = 0; i < count; ++i) {
            if (mask >> i & 1u) s.push_back(pool[i]);
        }
        if (is_mv_set(g, s)) best = static_cast<int>(s.size());
    }
    return best;
}

}  // namespace

int mu(const Graph& g) {
    std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    return best_subset(g, all);
}

int max_mv_subset(const Graph& g, const std::vector<int>& allowed) {
    return best_subset(g, allowed);
}

namespace {

void partitions(const Graph& g, int v, std::vector<std::vector<int>>& classes, int& best) {
    if (static_cast<int>(classes.size()) >= best) return;
    if (v == g.vertex_count()) {
        for (const auto& cls : classes) {
            if (!is_mv_set(g, cls)) return;
        }
        best = static_cast<int>(classes.size());
        return;
    }
    // classes may reallocate inside the recursion; index, don't iterate.
    for (std::size_t i = 0; i < classes.size(); ++i) {
        classes[i].push_back(v);
        partitions(g, v + 1, classes, best);
        classes[i].pop_back();
    }
    classes.emplace_back(1, v);
    partitions(g, v + 1, classes, best);
    classes.pop_back();
}

}  // namespace

int chimu(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    std::vector<std::vector<int>> classes;
    int best = g.vertex_count();
    partitions(g, 0, classes, best);
    return best;
}

namespace {

bool colorable(const Graph& g, int k, std::vector<int>& color, int v) {
    if (v == g.vertex_count()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int w : g.neighbors(v)) {
            if (color[static_cast<std::size_t>(w)] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        color[static_cast<std::size_t>(v)] = c;
        if (colorable(g, k, color, v + 1)) return true;
        color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
}

}  // namespace

int chromatic(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
        if (colorable(g, k, color, 0)) return k;
    }
}

int zarankiewicz(int m, int n) {
    if (m < 1 || n < 1 || m * n > 16) {
        throw std::invalid_argument("oracle::zarankiewicz requires m*n <= 16");
    }
    int best = 0;
    for (std::uint32_t matrix = 0; matrix < (1u << (m * n)); ++matrix) {
        auto bit = [&](int i, int j) { return matrix >> (i * n + j) & 1u; };
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            for (int i2 = i + 1; i2 < m && ok; ++i2) {
                for (int j = 0; j < n && ok; ++j) {
                    for (int j2 = j + 1; j2 < n && ok; ++j2) {
                        ok = !(bit(i, j) && bit(i, j2) && bit(i2, j) && bit(i2, j2));
                    }
                }
            }
        }
        if (ok) best = std::max(best, std::popcount(matrix));
    }
    return best;
}

}  // namespace mvis::oracle
