#include "mvis/generators.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "mvis/metrics.hpp"
#include "mvis/rng.hpp"

namespace mvis {

int LabeledGraph::id(const std::string& label) const {
    auto it = labels.find(label);
    if (it == labels.end()) throw std::out_of_range("no vertex labeled \"" + label + "\"");
    return it->second;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

std::string itos(int v) { return std::to_string(v); }

void label_run(LabeledGraph& lg, const std::string& prefix, int first_id, int count, int first_index) {
    for (int i = 0; i < count; ++i) lg.labels[prefix + itos(first_index + i)] = first_id + i;
}

}  // namespace

LabeledGraph path(int n) {
    require(n >= 1, "path: n must be at least 1");
    LabeledGraph lg;
    lg.graph = Graph(n);
    for (int i = 0; i + 1 < n; ++i) lg.graph.add_edge(i, i + 1);
    lg.family = "path";
    lg.params["n"] = itos(n);
    label_run(lg, "v", 0, n, 1);
    return lg;
}

LabeledGraph cycle(int n) {
    require(n >= 3, "cycle: n must be at least 3");
    LabeledGraph lg;
    lg.graph = Graph(n);
    for (int i = 0; i < n; ++i) lg.graph.add_edge(i, (i + 1) % n);
    lg.family = "cycle";
    lg.params["n"] = itos(n);
    label_run(lg, "v", 0, n, 1);
    return lg;
}

LabeledGraph complete(int n) {
    require(n >= 1, "complete: n must be at least 1");
    LabeledGraph lg;
    lg.graph = Graph(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) lg.graph.add_edge(i, j);
    }
    lg.family = "complete";
    lg.params["n"] = itos(n);
    label_run(lg, "v", 0, n, 1);
    return lg;
}

LabeledGraph complete_bipartite(int r, int t) {
    require(r >= 1 && t >= 1, "complete_bipartite: both parts need at least one vertex");
    LabeledGraph lg;
    lg.graph = Graph(r + t);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < t; ++j) lg.graph.add_edge(i, r + j);
    }
    lg.family = "kbip";
    lg.params["r"] = itos(r);
    lg.params["t"] = itos(t);
    label_run(lg, "a", 0, r, 1);
    label_run(lg, "b", r, t, 1);
    return lg;
}

LabeledGraph star(int n) {
    require(n >= 1, "star: n must be at least 1");
    LabeledGraph lg;
    lg.graph = Graph(n);
    for (int i = 1; i < n; ++i) lg.graph.add_edge(0, i);
    lg.family = "star";
    lg.params["n"] = itos(n);
    label_run(lg, "v", 0, n, 1);
    return lg;
}

LabeledGraph petersen() {
    LabeledGraph lg;
    lg.graph = Graph(10);
    for (int i = 0; i < 5; ++i) {
        lg.graph.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        lg.graph.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        lg.graph.add_edge(i, 5 + i);                // spokes
    }
    lg.family = "petersen";
    label_run(lg, "o", 0, 5, 1);
    label_run(lg, "i", 5, 5, 1);
    return lg;
}

LabeledGraph heawood() {
    // Incidence graph of the Fano plane: point j on lines {j, j+1, j+3} mod 7.
    LabeledGraph lg;
    lg.graph = Graph(14);
    for (int j = 0; j < 7; ++j) {
        lg.graph.add_edge(j, 7 + j);
        lg.graph.add_edge((j + 1) % 7, 7 + j);
        lg.graph.add_edge((j + 3) % 7, 7 + j);
    }
    lg.family = "heawood";
    label_run(lg, "p", 0, 7, 0);
    label_run(lg, "l", 7, 7, 0);
    return lg;
}

LabeledGraph g_k(int k) {
    require(k >= 1, "g_k: k must be at least 1");
    LabeledGraph lg;
    lg.graph = Graph(8 * k + 4);
    const char* core_names[4] = {"1", "2", "3", "4"};
    for (int c = 0; c < 4; ++c) lg.labels[core_names[c]] = c;
    for (int c = 0; c < 4; ++c) lg.graph.add_edge(c, (c + 1) % 4);
    // Core edge {a,b} gains one private 4-cycle a,(ab)_i,(ba)_i,b per round.
    const std::pair<int, int> core_edges[4] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    for (int i = 1; i <= k; ++i) {
        int base = 4 + 8 * (i - 1);
        for (int e = 0; e < 4; ++e) {
            auto [a, b] = core_edges[e];
            int ab = base + 2 * e;
            int ba = ab + 1;
            lg.graph.add_edge(a, ab);
            lg.graph.add_edge(ab, ba);
            lg.graph.add_edge(ba, b);
            std::string suffix = "_" + itos(i);
            lg.labels["(" + itos(a + 1) + itos(b + 1) + ")" + suffix] = ab;
            lg.labels["(" + itos(b + 1) + itos(a + 1) + ")" + suffix] = ba;
        }
    }
    lg.family = "gk";
    lg.params["k"] = itos(k);
    return lg;
}

LabeledGraph frog(int k) {
    require(k >= 2, "frog: k must be at least 2");
    LabeledGraph lg;
    const int n = 6 * k - 1;
    lg.graph = Graph(n);
    for (int i = 0; i < 4 * k; ++i) lg.graph.add_edge(i, (i + 1) % (4 * k));
    for (int j = 0; j + 1 < 2 * k - 1; ++j) lg.graph.add_edge(4 * k + j, 4 * k + j + 1);
    lg.graph.add_edge(0, 4 * k);  // x_1 y_2
    lg.family = "frog";
    lg.params["k"] = itos(k);
    label_run(lg, "x", 0, 4 * k, 1);
    label_run(lg, "y", 4 * k, 2 * k - 1, 2);
    return lg;
}

LabeledGraph broom(int n, int k) {
    require(k >= 2 && k <= n / 2 - 1, "broom: k must satisfy 2 <= k <= n/2 - 1");
    LabeledGraph lg;
    lg.graph = Graph(n);
    const int p = 2 * k - 1;
    for (int i = 0; i + 1 < p; ++i) lg.graph.add_edge(i, i + 1);
    for (int j = p; j < n; ++j) lg.graph.add_edge(p - 1, j);
    lg.family = "broom";
    lg.params["n"] = itos(n);
    lg.params["k"] = itos(k);
    label_run(lg, "v", 0, n, 1);
    return lg;
}

namespace {

// Canonical "name:p1,p2" spec for the scalar families; bare family name
// otherwise. parse_family_spec round-trips the former.
std::string family_spec_of(const LabeledGraph& g) {
    auto param = [&](const char* key) {
        auto it = g.params.find(key);
        return it == g.params.end() ? std::string() : it->second;
    };
    if (g.family == "path" || g.family == "cycle" || g.family == "complete" || g.family == "star") {
        return g.family + ":" + param("n");
    }
    if (g.family == "kbip") return g.family + ":" + param("r") + "," + param("t");
    if (g.family == "gk" || g.family == "frog") return g.family + ":" + param("k");
    if (g.family == "broom") return g.family + ":" + param("n") + "," + param("k");
    return g.family;
}

LabeledGraph product_shell(const LabeledGraph& a, const LabeledGraph& b, const std::string& family) {
    LabeledGraph lg;
    const int nb = b.graph.vertex_count();
    lg.graph = Graph(a.graph.vertex_count() * nb);
    lg.family = family;
    lg.params["left"] = family_spec_of(a);
    lg.params["right"] = family_spec_of(b);
    for (const auto& [la, ia] : a.labels) {
        for (const auto& [lb, ib] : b.labels) {
            lg.labels["(" + la + "," + lb + ")"] = ia * nb + ib;
        }
    }
    return lg;
}

}  // namespace

LabeledGraph cartesian_product(const LabeledGraph& a, const LabeledGraph& b) {
    LabeledGraph lg = product_shell(a, b, "cartesian");
    const int na = a.graph.vertex_count(), nb = b.graph.vertex_count();
    for (int u = 0; u < na; ++u) {
        for (const auto& [x, y] : b.graph.edges()) lg.graph.add_edge(u * nb + x, u * nb + y);
    }
    for (const auto& [u, v] : a.graph.edges()) {
        for (int x = 0; x < nb; ++x) lg.graph.add_edge(u * nb + x, v * nb + x);
    }
    return lg;
}

LabeledGraph strong_product(const LabeledGraph& a, const LabeledGraph& b) {
    LabeledGraph lg = product_shell(a, b, "strong");
    const int na = a.graph.vertex_count(), nb = b.graph.vertex_count();
    for (int u = 0; u < na; ++u) {
        for (int v = 0; v < na; ++v) {
            for (int x = 0; x < nb; ++x) {
                for (int y = 0; y < nb; ++y) {
                    if (u * nb + x >= v * nb + y) continue;
                    bool au = a.graph.adjacent(u, v), bx = b.graph.adjacent(x, y);
                    if ((u == v && bx) || (x == y && au) || (au && bx)) {
                        lg.graph.add_edge(u * nb + x, v * nb + y);
                    }
                }
            }
        }
    }
    return lg;
}

LabeledGraph corona_product(const LabeledGraph& a, const LabeledGraph& b) {
    require(a.graph.vertex_count() >= 1 && is_connected(a.graph),
            "corona_product: first factor must be connected and non-empty");
    LabeledGraph lg;
    const int na = a.graph.vertex_count(), nb = b.graph.vertex_count();
    lg.graph = Graph(na * (1 + nb));
    lg.family = "corona";
    lg.params["left"] = family_spec_of(a);
    lg.params["right"] = family_spec_of(b);
    for (const auto& [u, v] : a.graph.edges()) lg.graph.add_edge(u, v);
    for (const auto& [la, ia] : a.labels) lg.labels[la] = ia;
    for (int i = 0; i < na; ++i) {
        const int base = na + i * nb;
        for (const auto& [x, y] : b.graph.edges()) lg.graph.add_edge(base + x, base + y);
        for (int x = 0; x < nb; ++x) lg.graph.add_edge(i, base + x);
        for (const auto& [lb, ib] : b.labels) {
            lg.labels["(" + itos(i) + "," + lb + ")"] = base + ib;
        }
    }
    return lg;
}

FamilyAResult family_a(const Graph& a_r, const Graph& a_s, int r, int s,
                       const std::vector<std::pair<int, int>>& cross_edges) {
    require(r >= 1 && s >= 1, "family_a: complete factors need at least one vertex");
    const int nr = a_r.vertex_count(), ns = a_s.vertex_count();
    require(nr >= 1 && ns >= 1, "family_a: factors need at least one vertex");
    FamilyAResult out;
    LabeledGraph& lg = out.labeled;
    // Layout: A_r, then A_s, then K_r, then K_s.
    const int off_s = nr, off_kr = nr + ns, off_ks = nr + ns + r;
    lg.graph = Graph(nr + ns + r + s);
    for (const auto& [u, v] : a_r.edges()) lg.graph.add_edge(u, v);
    for (const auto& [u, v] : a_s.edges()) lg.graph.add_edge(off_s + u, off_s + v);
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) lg.graph.add_edge(off_kr + i, off_kr + j);
        for (int u = 0; u < nr; ++u) lg.graph.add_edge(u, off_kr + i);
    }
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) lg.graph.add_edge(off_ks + i, off_ks + j);
        for (int u = 0; u < ns; ++u) lg.graph.add_edge(off_s + u, off_ks + i);
    }
    for (const auto& [u, v] : cross_edges) {
        if (u < 0 || u >= nr || v < 0 || v >= ns) {
            throw std::invalid_argument("family_a: cross edge (" + itos(u) + ", " + itos(v) +
                                        ") out of range");
        }
        lg.graph.add_edge(u, off_s + v);
    }
    lg.family = "family-a";
    lg.params["r"] = itos(r);
    lg.params["s"] = itos(s);
    label_run(lg, "Ar", 0, nr, 0);
    label_run(lg, "As", off_s, ns, 0);
    label_run(lg, "Kr", off_kr, r, 0);
    label_run(lg, "Ks", off_ks, s, 0);
    // Every non-adjacent in-factor pair must share a cross neighbor.
    out.validated = true;
    for (int u = 0; u < nr && out.validated; ++u) {
        for (int v = u + 1; v < nr && out.validated; ++v) {
            if (a_r.adjacent(u, v)) continue;
            bool found = false;
            for (int w = 0; w < ns && !found; ++w) {
                found = lg.graph.adjacent(u, off_s + w) && lg.graph.adjacent(v, off_s + w);
            }
            out.validated = found;
        }
    }
    for (int u = 0; u < ns && out.validated; ++u) {
        for (int v = u + 1; v < ns && out.validated; ++v) {
            if (a_s.adjacent(u, v)) continue;
            bool found = false;
            for (int w = 0; w < nr && !found; ++w) {
                found = lg.graph.adjacent(w, off_s + u) && lg.graph.adjacent(w, off_s + v);
            }
            out.validated = found;
        }
    }
    return out;
}

FamilyBResult family_b(const Graph& b, const Graph& b2) {
    require(is_connected(b) && is_connected(b2), "family_b: both factors must be connected");
    auto db = all_pairs_distances(b);
    auto db2 = all_pairs_distances(b2);
    auto diam_b = diameter(db), diam_b2 = diameter(db2);
    require(diam_b && diam_b2 && std::abs(*diam_b - *diam_b2) <= 2,
            "family_b: factor diameters must differ by at most 2");
    const int nb = b.vertex_count(), nb2 = b2.vertex_count();
    FamilyBResult out;
    LabeledGraph& lg = out.labeled;
    lg.graph = Graph(nb + nb2);
    for (const auto& [u, v] : b.edges()) lg.graph.add_edge(u, v);
    for (const auto& [u, v] : b2.edges()) lg.graph.add_edge(nb + u, nb + v);
    lg.family = "family-b";
    label_run(lg, "L", 0, nb, 0);
    label_run(lg, "R", nb, nb2, 0);

    // Factor distances decide eligibility; the lexicographically first
    // eligible pair wins. x2 == y2 exactly when d = 2.
    auto wire = [&](const Graph& near, const DistanceMatrix& dn, int near_off,
                    const DistanceMatrix& df, int far_off, int far_n) {
        for (int x = 0; x < near.vertex_count(); ++x) {
            for (int y = x + 1; y < near.vertex_count(); ++y) {
                if (near.adjacent(x, y)) continue;
                const int d = dn.at(x, y);
                bool wired = false;
                for (int x2 = 0; x2 < far_n && !wired; ++x2) {
                    for (int y2 = 0; y2 < far_n && !wired; ++y2) {
                        if (df.at(x2, y2) != d - 2) continue;
                        lg.graph.add_edge(near_off + x, far_off + x2);
                        lg.graph.add_edge(near_off + y, far_off + y2);
                        out.log.push_back({near_off + x, near_off + y, far_off + x2, far_off + y2});
                        wired = true;
                    }
                }
                if (!wired) {
                    throw std::invalid_argument("family_b: no pair at distance " + itos(d - 2) +
                                                " for non-adjacent pair (" + itos(x) + ", " +
                                                itos(y) + ")");
                }
            }
        }
    };
    wire(b, db, 0, db2, nb, nb2);
    wire(b2, db2, nb, db, 0, nb);
    return out;
}

bool family_b_membership(const Graph& g, const VertexSet& part) {
    if (!is_canonical_vertex_set(g, part)) {
        throw std::invalid_argument("family_b_membership: part must be canonical");
    }
    const int n = g.vertex_count();
    std::vector<char> in_part(static_cast<std::size_t>(n), 0);
    for (int v : part) in_part[static_cast<std::size_t>(v)] = 1;
    VertexSet rest;
    for (int v = 0; v < n; ++v) {
        if (!in_part[static_cast<std::size_t>(v)]) rest.push_back(v);
    }
    auto sub = induced_subgraph(g, rest);
    auto d_out = all_pairs_distances(sub.graph);
    std::vector<int> outside_id(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < rest.size(); ++i) outside_id[static_cast<std::size_t>(rest[i])] = static_cast<int>(i);
    auto d = all_pairs_distances(g);
    for (std::size_t i = 0; i < part.size(); ++i) {
        for (std::size_t j = i + 1; j < part.size(); ++j) {
            const int x = part[i], y = part[j];
            if (g.adjacent(x, y)) continue;
            if (!d.reachable(x, y)) return false;
            const int need = d.at(x, y) - 2;
            bool ok = false;
            for (int x2 : g.neighbors(x)) {
                if (in_part[static_cast<std::size_t>(x2)] || ok) continue;
                for (int y2 : g.neighbors(y)) {
                    if (in_part[static_cast<std::size_t>(y2)]) continue;
                    int a = outside_id[static_cast<std::size_t>(x2)];
                    int b = outside_id[static_cast<std::size_t>(y2)];
                    if (d_out.reachable(a, b) && d_out.at(a, b) == need) {
                        ok = true;
                        break;
                    }
                }
            }
            if (!ok) return false;
        }
    }
    return true;
}

LabeledGraph random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "random_tree: n must be at least 1");
    LabeledGraph lg;
    lg.graph = Graph(n);
    lg.family = "random-tree";
    lg.params["n"] = itos(n);
    lg.params["seed"] = std::to_string(seed);
    label_run(lg, "v", 0, n, 1);
    if (n >= 2) {
        Rng rng(seed);
        std::vector<int> prufer(static_cast<std::size_t>(std::max(0, n - 2)));
        for (auto& p : prufer) p = rng.uniform_int(0, n - 1);
        std::vector<int> deg(static_cast<std::size_t>(n), 1);
        for (int p : prufer) ++deg[static_cast<std::size_t>(p)];
        std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
        for (int v = 0; v < n; ++v) {
            if (deg[static_cast<std::size_t>(v)] == 1) leaves.push(v);
        }
        for (int p : prufer) {
            int leaf = leaves.top();
            leaves.pop();
            lg.graph.add_edge(leaf, p);
            if (--deg[static_cast<std::size_t>(p)] == 1) leaves.push(p);
        }
        int a = leaves.top();
        leaves.pop();
        int b = leaves.top();
        lg.graph.add_edge(a, b);
    }
    return lg;
}

LabeledGraph random_connected_graph(int n, double p, std::uint64_t seed) {
    require(n >= 1, "random_connected_graph: n must be at least 1");
    require(p > 0.0 && p <= 1.0, "random_connected_graph: p must lie in (0, 1]");
    Rng rng(seed);
    constexpr int kMaxAttempts = 1000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Graph g(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng.bernoulli(p)) g.add_edge(u, v);
            }
        }
        if (is_connected(g)) {
            LabeledGraph lg;
            lg.graph = std::move(g);
            lg.family = "random-connected";
            lg.params["n"] = itos(n);
            lg.params["p"] = std::to_string(p);
            lg.params["seed"] = std::to_string(seed);
            label_run(lg, "v", 0, n, 1);
            return lg;
        }
    }
    throw std::runtime_error("random_connected_graph: no connected sample in " +
                             itos(kMaxAttempts) + " attempts; raise p");
}

LabeledGraph parse_family_spec(const std::string& spec, std::uint64_t seed) {
    std::string name = spec;
    std::vector<std::string> args;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        name = spec.substr(0, pos);
        std::istringstream rest(spec.substr(pos + 1));
        std::string tok;
        while (std::getline(rest, tok, ',')) args.push_back(tok);
    }
    auto arg_int = [&](std::size_t i) {
        if (i >= args.size()) throw std::invalid_argument("family spec \"" + spec + "\": missing parameter");
        try {
            return std::stoi(args[i]);
        } catch (const std::exception&) {
            throw std::invalid_argument("family spec \"" + spec + "\": bad integer \"" + args[i] + "\"");
        }
    };
    auto arg_double = [&](std::size_t i) {
        if (i >= args.size()) throw std::invalid_argument("family spec \"" + spec + "\": missing parameter");
        try {
            return std::stod(args[i]);
        } catch (const std::exception&) {
            throw std::invalid_argument("family spec \"" + spec + "\": bad number \"" + args[i] + "\"");
        }
    };
    if (name == "path") return path(arg_int(0));
    if (name == "cycle") return cycle(arg_int(0));
    if (name == "complete") return complete(arg_int(0));
    if (name == "kbip") return complete_bipartite(arg_int(0), arg_int(1));
    if (name == "star") return star(arg_int(0));
    if (name == "petersen") return petersen();
    if (name == "heawood") return heawood();
    if (name == "gk") return g_k(arg_int(0));
    if (name == "frog") return frog(arg_int(0));
    if (name == "broom") return broom(arg_int(0), arg_int(1));
    if (name == "random-tree") return random_tree(arg_int(0), seed);
    if (name == "random-connected") return random_connected_graph(arg_int(0), arg_double(1), seed);
    throw std::invalid_argument("unknown family \"" + name + "\"");
}

}  // namespace mvis
