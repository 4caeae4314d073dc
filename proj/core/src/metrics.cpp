#include "mvis/metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mvis {

int DistanceMatrix::at(int u, int v) const {
    int value = d_[idx(u, v)];
    if (value == kUnreachable) {
        throw std::logic_error("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                               " are in different components");
    }
    return value;
}

namespace {

void bfs_from(const Graph& g, int src, int* dist) {
    const int n = g.vertex_count();
    std::fill(dist, dist + n, DistanceMatrix::kUnreachable);
    std::vector<int> frontier{src};
    dist[src] = 0;
    int depth = 0;
    while (!frontier.empty()) {
        std::vector<int> next;
        ++depth;
        for (int u : frontier) {
            for (int v : g.neighbors(u)) {
                if (dist[v] == DistanceMatrix::kUnreachable) {
                    dist[v] = depth;
                    next.push_back(v);
                }
            }
        }
        frontier = std::move(next);
    }
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> d(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
    for (int s = 0; s < n; ++s) bfs_from(g, s, d.data() + static_cast<std::size_t>(s) * n);
    return DistanceMatrix(n, std::move(d));
}

std::optional<int> diameter(const DistanceMatrix& d) {
    const int n = d.order();
    if (n == 0) return std::nullopt;
    int best = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (!d.reachable(u, v)) return std::nullopt;
            best = std::max(best, d.row(u)[v]);
        }
    }
    return best;
}

std::optional<int> radius(const DistanceMatrix& d) {
    const int n = d.order();
    if (n == 0) return std::nullopt;
    int best = std::numeric_limits<int>::max();
    for (int u = 0; u < n; ++u) {
        int ecc = 0;
        for (int v = 0; v < n; ++v) {
            if (!d.reachable(u, v)) return std::nullopt;
            ecc = std::max(ecc, d.row(u)[v]);
        }
        best = std::min(best, ecc);
    }
    return best;
}

std::optional<int> girth(const Graph& g) {
    // Per root: BFS, and every non-tree edge (u,w) seen from u closes a walk
    // of length dist[u] + dist[w] + 1 containing a cycle no longer than it.
    // A shortest cycle is hit exactly when the root lies on one.
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::vector<int> frontier{root};
        dist[static_cast<std::size_t>(root)] = 0;
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int u : frontier) {
                for (int w : g.neighbors(u)) {
                    if (dist[static_cast<std::size_t>(w)] == -1) {
                        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                        parent[static_cast<std::size_t>(w)] = u;
                        next.push_back(w);
                    } else if (w != parent[static_cast<std::size_t>(u)]) {
                        best = std::min(best, dist[static_cast<std::size_t>(u)] +
                                                  dist[static_cast<std::size_t>(w)] + 1);
                    }
                }
            }
            frontier = std::move(next);
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::vector<std::vector<std::uint64_t>> geodesic_counts(const Graph& g, const DistanceMatrix& d) {
    const int n = g.vertex_count();
    std::vector<std::vector<std::uint64_t>> counts(
        static_cast<std::size_t>(n), std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        auto& cnt = counts[static_cast<std::size_t>(s)];
        const int* dist = d.row(s);
        cnt[static_cast<std::size_t>(s)] = 1;
        for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
        for (int v : order) {
            if (v == s || dist[v] == DistanceMatrix::kUnreachable) continue;
            std::uint64_t total = 0;
            for (int w : g.neighbors(v)) {
                if (dist[w] != dist[v] - 1) continue;
                std::uint64_t sum;
                if (__builtin_add_overflow(total, cnt[static_cast<std::size_t>(w)], &sum)) {
                    total = std::numeric_limits<std::uint64_t>::max();
                    break;
                }
                total = sum;
            }
            cnt[static_cast<std::size_t>(v)] = total;
        }
    }
    return counts;
}

bool is_geodetic(const Graph& g, const DistanceMatrix& d) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (!d.reachable(u, v)) {
                throw std::invalid_argument("geodeticity is defined for connected graphs only");
            }
        }
    }
    auto counts = geodesic_counts(g, d);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (counts[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != 1) return false;
        }
    }
    return true;
}

}  // namespace mvis
