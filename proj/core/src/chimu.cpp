#include "mvis/chimu.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "mvis/metrics.hpp"
#include "mvis/visibility.hpp"

namespace mvis {

ScriptedRoundError::ScriptedRoundError(int r, const std::string& what)
    : std::runtime_error("round " + std::to_string(r) + ": " + what), round(r) {}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

GreedyTrace run_greedy(const Graph& g, const DistanceMatrix& d,
                       const std::vector<VertexSet>* script, const Budget& budget) {
    if (!is_connected(g)) throw std::invalid_argument("greedy coloring needs a connected graph");
    GreedyTrace trace;
    trace.strategy = script ? "scripted" : "solver";
    VertexSet uncolored(static_cast<std::size_t>(g.vertex_count()));
    std::iota(uncolored.begin(), uncolored.end(), 0);
    int round_no = 0;
    while (!uncolored.empty()) {
        ++round_no;
        VertexSet chosen;
        bool round_exact = true;
        if (script && static_cast<std::size_t>(round_no) <= script->size()) {
            VertexSet set;
            try {
                set = canonical_vertex_set(g, (*script)[static_cast<std::size_t>(round_no - 1)]);
            } catch (const GraphError& e) {
                throw ScriptedRoundError(round_no, e.what());
            }
            if (set.size() != (*script)[static_cast<std::size_t>(round_no - 1)].size()) {
                throw ScriptedRoundError(round_no, "set repeats a vertex");
            }
            if (!std::includes(uncolored.begin(), uncolored.end(), set.begin(), set.end())) {
                throw ScriptedRoundError(round_no, "set contains already-colored vertices");
            }
            MvCheck check = is_mv_set(g, d, set);
            if (!check.ok) {
                throw ScriptedRoundError(round_no, "set is not a mutual-visibility set (pair " +
                                                       std::to_string(check.fail_x) + ", " +
                                                       std::to_string(check.fail_y) + " blocked)");
            }
            MuCertificate cert = max_mv_subset(g, d, uncolored, budget);
            // A certified maximum must not exceed the scripted size; with an
            // uncertified value only a strictly larger known set disqualifies.
            if (static_cast<int>(set.size()) < cert.value) {
                throw ScriptedRoundError(
                    round_no, "set of size " + std::to_string(set.size()) +
                                  " is not maximum among uncolored vertices (size " +
                                  std::to_string(cert.value) + " is achievable)");
            }
            round_exact = cert.optimal;
            chosen = std::move(set);
            round_exact = cert.optimal;
        } else {
            MuCertificate cert = max_mv_subset(g, d, uncolored, budget);
            chosen = cert.witness;
            round_exact = cert.optimal;
        }
        trace.rounds.push_back({round_no, chosen});
        trace.exact = trace.exact && round_exact;
        VertexSet rest;
        rest.reserve(uncolored.size() - chosen.size());
        std::set_difference(uncolored.begin(), uncolored.end(), chosen.begin(), chosen.end(),
                            std::back_inserter(rest));
        uncolored = std::move(rest);
    }
    if (script && script->size() > static_cast<std::size_t>(round_no)) {
        throw ScriptedRoundError(round_no + 1, "script continues past a complete coloring");
    }
    trace.total_colors = round_no;
    return trace;
}

// Class-assignment search. Classes stay verified mutual-visibility sets;
// a new class may only open at index = current count, which enumerates
// partitions canonically.
struct ChimuSearch {
    const Graph& g;
    const DistanceMatrix& d;
    const Budget& budget;
    VertexSet order;
    std::vector<VertexSet> classes;
    std::vector<std::vector<char>> in_class;
    std::vector<VertexSet> best;
    int incumbent = 0;
    int lb = 1;
    std::optional<int> mu;  // set only when certified exact
    bool out_of_time = false;
    unsigned tick = 0;

    ChimuSearch(const Graph& graph, const DistanceMatrix& dist, const Budget& b)
        : g(graph), d(dist), budget(b) {}

    bool done() const { return incumbent == lb; }

    // Same incremental argument as the mu search: adding v only needs the
    // new pairs plus old pairs collinear with v.
    bool class_extends(std::size_t ci, int v) {
        auto& members = classes[ci];
        auto& in_cls = in_class[ci];
        in_cls[static_cast<std::size_t>(v)] = 1;
        bool ok = true;
        for (std::size_t i = 0; i < members.size() && ok; ++i) {
            ok = pair_visible_flags(g, d, in_cls, members[i], v);
        }
        for (std::size_t i = 0; i < members.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < members.size() && ok; ++j) {
                const int x = members[i], y = members[j];
                if (d.row(x)[v] + d.row(v)[y] != d.row(x)[y]) continue;
                ok = pair_visible_flags(g, d, in_cls, x, y);
            }
        }
        in_cls[static_cast<std::size_t>(v)] = 0;
        return ok;
    }

    void dfs(std::size_t idx) {
        if ((++tick & 255u) == 0 && budget.exhausted()) {
            out_of_time = true;
            return;
        }
        if (idx == order.size()) {
            best = classes;
            incumbent = static_cast<int>(classes.size());
            return;
        }
        if (static_cast<int>(classes.size()) >= incumbent) return;
        if (mu) {
            // Residual capacity within incumbent-1 classes, each holding at
            // most mu vertices.
            const int remaining = static_cast<int>(order.size() - idx);
            int capacity = (incumbent - 1 - static_cast<int>(classes.size())) * *mu;
            for (const auto& cls : classes) capacity += *mu - static_cast<int>(cls.size());
            if (capacity < remaining) return;
        }
        const int v = order[idx];
        for (std::size_t ci = 0; ci < classes.size(); ++ci) {
            if (!class_extends(ci, v)) continue;
            // classes may reallocate inside dfs; never hold a reference across it.
            auto& members = classes[ci];
            members.insert(std::lower_bound(members.begin(), members.end(), v), v);
            in_class[ci][static_cast<std::size_t>(v)] = 1;
            dfs(idx + 1);
            in_class[ci][static_cast<std::size_t>(v)] = 0;
            auto& after = classes[ci];
            after.erase(std::find(after.begin(), after.end(), v));
            if (out_of_time || done()) return;
        }
        if (static_cast<int>(classes.size()) + 1 < incumbent) {
            classes.push_back({v});
            in_class.emplace_back(static_cast<std::size_t>(g.vertex_count()), 0);
            in_class.back()[static_cast<std::size_t>(v)] = 1;
            dfs(idx + 1);
            in_class.pop_back();
            classes.pop_back();
        }
    }
};

ChimuCertificate chimu_connected(const Graph& g, const Budget& budget) {
    const int n = g.vertex_count();
    const DistanceMatrix d = all_pairs_distances(g);
    MuCertificate mu = mu_exact(g, d, budget);

    // Lower bound candidates in provenance priority order; first maximum wins.
    std::vector<LowerBound> cands;
    if (mu.optimal) cands.push_back({ceil_div(n, mu.value), "n-over-mu"});
    if (is_geodetic(g, d)) cands.push_back({ceil_div(*diameter(d) + 1, 2), "geodetic-diameter"});
    {
        auto counts = geodesic_counts(g, d);
        int scan = 1;  // a single class is always needed
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (counts[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == 1) {
                    scan = std::max(scan, ceil_div(d.row(u)[v] + 1, 2));
                }
            }
        }
        cands.push_back({scan, "unique-geodesic-path"});
    }
    LowerBound lb = cands.front();
    for (const auto& cand : cands) {
        if (cand.amount > lb.amount) lb = cand;
    }

    GreedyTrace greedy = run_greedy(g, d, nullptr, budget);
    std::vector<VertexSet> greedy_classes;
    greedy_classes.reserve(greedy.rounds.size());
    for (const auto& round : greedy.rounds) greedy_classes.push_back(round.set);

    ChimuCertificate cert;
    if (greedy.total_colors == lb.amount) {
        cert.value = lb.amount;
        cert.coloring = make_coloring(n, std::move(greedy_classes));
        cert.lower_bound = lb;
        cert.optimal = true;
        return cert;
    }

    ChimuSearch search(g, d, budget);
    search.order.resize(static_cast<std::size_t>(n));
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        return g.neighbors(a).size() > g.neighbors(b).size();
    });
    search.best = std::move(greedy_classes);
    search.incumbent = greedy.total_colors;
    search.lb = lb.amount;
    if (mu.optimal) search.mu = mu.value;
    search.dfs(0);

    cert.value = search.incumbent;
    cert.coloring = make_coloring(n, search.best);
    if (search.out_of_time) {
        cert.lower_bound = lb;
        cert.optimal = false;
    } else {
        cert.optimal = true;
        cert.lower_bound = cert.value == lb.amount ? lb : LowerBound{cert.value, "exhaustive-search"};
    }
    return cert;
}

}  // namespace

ChimuCertificate chimu_exact(const Graph& g, const Budget& budget) {
    const int n = g.vertex_count();
    if (n == 0) {
        return {0, Coloring{}, {0, "exhaustive-search"}, true};
    }
    auto comp = component_ids(g);
    const int comp_count = 1 + *std::max_element(comp.begin(), comp.end());
    if (comp_count == 1) return chimu_connected(g, budget);

    // Classes cannot span components, so the value is the component sum.
    ChimuCertificate total;
    total.value = 0;
    total.optimal = true;
    std::vector<VertexSet> classes;
    std::vector<LowerBound> comp_lbs;
    for (int c = 0; c < comp_count; ++c) {
        VertexSet members;
        for (int v = 0; v < n; ++v) {
            if (comp[static_cast<std::size_t>(v)] == c) members.push_back(v);
        }
        auto sub = induced_subgraph(g, members);
        ChimuCertificate part = chimu_connected(sub.graph, budget);
        total.value += part.value;
        total.optimal = total.optimal && part.optimal;
        comp_lbs.push_back(part.lower_bound);
        for (const auto& cls : part.coloring.classes) {
            VertexSet mapped;
            mapped.reserve(cls.size());
            for (int v : cls) mapped.push_back(sub.original_id[static_cast<std::size_t>(v)]);
            classes.push_back(std::move(mapped));
        }
    }
    total.coloring = make_coloring(n, std::move(classes));
    int amount = 0;
    for (const auto& lb : comp_lbs) amount += lb.amount;
    bool same = std::all_of(comp_lbs.begin(), comp_lbs.end(), [&](const LowerBound& lb) {
        return lb.provenance == comp_lbs.front().provenance;
    });
    std::string provenance;
    if (same) {
        provenance = comp_lbs.front().provenance;
    } else if (total.optimal) {
        provenance = "exhaustive-search";
    } else {
        const LowerBound* top = &comp_lbs.front();
        for (const auto& lb : comp_lbs) {
            if (lb.amount > top->amount) top = &lb;
        }
        provenance = top->provenance;
    }
    total.lower_bound = {amount, provenance};
    return total;
}

GreedyTrace greedy_coloring(const Graph& g, const Budget& budget) {
    return run_greedy(g, all_pairs_distances(g), nullptr, budget);
}

GreedyTrace greedy_coloring_scripted(const Graph& g, const std::vector<VertexSet>& script,
                                     const Budget& budget) {
    return run_greedy(g, all_pairs_distances(g), &script, budget);
}

}  // namespace mvis
