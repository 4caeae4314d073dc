#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mvis/generators.hpp"
#include "mvis/metrics.hpp"

using namespace mvis;

namespace {

bool regular(const Graph& g, int r) {
    DegreeSummary d = degrees(g);
    return d.max == r && d.min == r;
}

bool bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (side[static_cast<std::size_t>(v)] == -1) {
                    side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
                    stack.push_back(v);
                } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("scalar families") {
    LabeledGraph p = path(5);
    CHECK(p.graph.vertex_count() == 5);
    CHECK(p.graph.edge_count() == 4);
    CHECK(p.id("v1") == 0);
    CHECK(p.id("v5") == 4);
    CHECK(p.params.at("n") == "5");
    CHECK_THROWS_AS(p.id("v6"), std::out_of_range);

    CHECK(cycle(6).graph.edge_count() == 6);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);

    CHECK(complete(5).graph.edge_count() == 10);

    LabeledGraph kb = complete_bipartite(2, 3);
    CHECK(kb.graph.vertex_count() == 5);
    CHECK(kb.graph.edge_count() == 6);
    CHECK(kb.graph.adjacent(kb.id("a1"), kb.id("b3")));
    CHECK_FALSE(kb.graph.adjacent(kb.id("a1"), kb.id("a2")));

    LabeledGraph st = star(6);
    CHECK(st.graph.vertex_count() == 6);
    CHECK(degrees(st.graph).max == 5);
}

TEST_CASE("petersen") {
    LabeledGraph pg = petersen();
    CHECK(pg.graph.vertex_count() == 10);
    CHECK(pg.graph.edge_count() == 15);
    CHECK(regular(pg.graph, 3));
    CHECK(*girth(pg.graph) == 5);
    CHECK(*diameter(all_pairs_distances(pg.graph)) == 2);
    CHECK(pg.graph.adjacent(pg.id("o1"), pg.id("i1")));
}

TEST_CASE("heawood") {
    LabeledGraph hw = heawood();
    CHECK(hw.graph.vertex_count() == 14);
    CHECK(hw.graph.edge_count() == 21);
    CHECK(regular(hw.graph, 3));
    CHECK(*girth(hw.graph) == 6);
    CHECK(*diameter(all_pairs_distances(hw.graph)) == 3);
    CHECK(bipartite(hw.graph));
}

TEST_CASE("g_k structure") {
    LabeledGraph g1 = g_k(1);
    CHECK(g1.graph.vertex_count() == 12);
    CHECK(g1.graph.edge_count() == 16);
    CHECK(g1.id("1") == 0);
    // Each core edge {a,b} carries the 4-cycle a, (ab)_1, (ba)_1, b.
    CHECK(g1.graph.adjacent(g1.id("1"), g1.id("(12)_1")));
    CHECK(g1.graph.adjacent(g1.id("(12)_1"), g1.id("(21)_1")));
    CHECK(g1.graph.adjacent(g1.id("(21)_1"), g1.id("2")));
    CHECK(g1.graph.adjacent(g1.id("3"), g1.id("(34)_1")));

    LabeledGraph g2 = g_k(2);
    CHECK(g2.graph.vertex_count() == 20);
    CHECK(g2.graph.edge_count() == 28);
    CHECK(g2.labels.count("(43)_2") == 1);

    CHECK_THROWS_AS(g_k(0), std::invalid_argument);
}

TEST_CASE("frog structure") {
    LabeledGraph f2 = frog(2);
    CHECK(f2.graph.vertex_count() == 11);
    CHECK(f2.graph.edge_count() == 11);
    CHECK(f2.id("x1") == 0);
    CHECK(f2.id("x8") == 7);
    CHECK(f2.id("y2") == 8);
    CHECK(f2.id("y4") == 10);
    CHECK(f2.graph.adjacent(f2.id("x1"), f2.id("y2")));
    CHECK(f2.graph.adjacent(f2.id("y2"), f2.id("y3")));
    CHECK_FALSE(f2.graph.adjacent(f2.id("y4"), f2.id("x1")));

    LabeledGraph f3 = frog(3);
    CHECK(f3.graph.vertex_count() == 17);
    CHECK(f3.graph.edge_count() == 17);

    CHECK_THROWS_AS(frog(1), std::invalid_argument);
}

TEST_CASE("broom structure") {
    LabeledGraph b = broom(9, 3);
    CHECK(b.graph.vertex_count() == 9);
    CHECK(b.graph.edge_count() == 8);
    CHECK(degrees(b.graph).max == 5);
    DistanceMatrix d = all_pairs_distances(b.graph);
    CHECK(d.at(b.id("v1"), b.id("v6")) == 5);
    CHECK(d.at(b.id("v6"), b.id("v9")) == 2);

    CHECK_THROWS_AS(broom(9, 1), std::invalid_argument);
    CHECK_THROWS_AS(broom(9, 4), std::invalid_argument);
}

TEST_CASE("cartesian product") {
    LabeledGraph k33 = cartesian_product(complete(3), complete(3));
    CHECK(k33.graph.vertex_count() == 9);
    CHECK(k33.graph.edge_count() == 18);
    CHECK(regular(k33.graph, 4));
    CHECK(k33.family == "cartesian");
    CHECK(k33.params.at("left") == "complete:3");
    CHECK(k33.params.at("right") == "complete:3");
    DistanceMatrix d = all_pairs_distances(k33.graph);
    CHECK(d.at(k33.id("(v1,v1)"), k33.id("(v2,v2)")) == 2);

    LabeledGraph pk = cartesian_product(path(2), path(3));
    CHECK(pk.graph.vertex_count() == 6);
    CHECK(pk.graph.edge_count() == 7);
}

TEST_CASE("strong product") {
    LabeledGraph sp = strong_product(path(4), path(4));
    CHECK(sp.graph.vertex_count() == 16);
    CHECK(sp.family == "strong");
    int interior = 0;
    for (int v = 0; v < 16; ++v) {
        if (sp.graph.neighbors(v).size() == 8) ++interior;
    }
    CHECK(interior == 4);  // the 12 boundary vertices have degree < 8
    CHECK(sp.graph.adjacent(sp.id("(v1,v1)"), sp.id("(v2,v2)")));
}

TEST_CASE("corona product") {
    LabeledGraph co = corona_product(cycle(4), complete(5));
    CHECK(co.graph.vertex_count() == 24);
    CHECK(co.family == "corona");
    CHECK(co.params.at("left") == "cycle:4");
    CHECK(co.params.at("right") == "complete:5");
    // Base vertex i is fully joined to its private copy.
    for (int i = 0; i < 4; ++i) {
        for (int x = 0; x < 5; ++x) CHECK(co.graph.adjacent(i, 4 + i * 5 + x));
    }
    CHECK_FALSE(co.graph.adjacent(4, 9));  // different copies stay apart
    CHECK(co.graph.neighbors(0).size() == 7);
    CHECK(co.id("(0,v1)") == 4);
}

TEST_CASE("family a") {
    // A_r = P_3 has the non-adjacent pair v1, v3; a full cross wiring
    // validates, a single cross edge does not.
    Graph a_r = path(3).graph;
    Graph a_s = complete(1).graph;
    std::vector<std::pair<int, int>> full;
    for (int u = 0; u < 3; ++u) full.emplace_back(u, 0);

    FamilyAResult ok = family_a(a_r, a_s, 1, 1, full);
    CHECK(ok.validated);
    CHECK(ok.labeled.graph.vertex_count() == 6);
    CHECK(ok.labeled.family == "family-a");
    CHECK(ok.labeled.graph.adjacent(ok.labeled.id("Ar0"), ok.labeled.id("Kr0")));
    CHECK(ok.labeled.graph.adjacent(ok.labeled.id("As0"), ok.labeled.id("Ks0")));
    CHECK_FALSE(ok.labeled.graph.adjacent(ok.labeled.id("Kr0"), ok.labeled.id("Ks0")));

    FamilyAResult bad = family_a(a_r, a_s, 1, 1, {{0, 0}});
    CHECK_FALSE(bad.validated);

    CHECK_THROWS_AS(family_a(a_r, a_s, 1, 1, {{3, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(family_a(a_r, a_s, 0, 1, full), std::invalid_argument);
}

TEST_CASE("family b") {
    FamilyBResult fb = family_b(path(3).graph, path(3).graph);
    CHECK(fb.labeled.graph.vertex_count() == 6);
    CHECK(fb.labeled.graph.edge_count() == 7);
    CHECK(fb.log.size() == 2);
    CHECK(fb.labeled.family == "family-b");
    CHECK(family_b_membership(fb.labeled.graph, {0, 1, 2}));

    CHECK_THROWS_AS(family_b(path(3).graph, path(9).graph), std::invalid_argument);
    Graph disconnected(3);
    CHECK_THROWS_AS(family_b(disconnected, path(3).graph), std::invalid_argument);
}

TEST_CASE("random tree") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        int n = 2 + static_cast<int>(seed % 9);
        LabeledGraph t = random_tree(n, seed);
        CHECK(t.graph.vertex_count() == n);
        CHECK(t.graph.edge_count() == n - 1);
        CHECK(is_connected(t.graph));
        CHECK(t.graph == random_tree(n, seed).graph);
    }
    CHECK(random_tree(1, 5).graph.vertex_count() == 1);
}

TEST_CASE("random connected graph") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        LabeledGraph g = random_connected_graph(7, 0.35, seed);
        CHECK(g.graph.vertex_count() == 7);
        CHECK(is_connected(g.graph));
        CHECK(g.graph == random_connected_graph(7, 0.35, seed).graph);
    }
    Graph dense = random_connected_graph(5, 1.0, 3).graph;
    CHECK(dense.edge_count() == 10);
    CHECK_THROWS_AS(random_connected_graph(4, 0.0, 1), std::invalid_argument);
}

TEST_CASE("parse family spec") {
    CHECK(parse_family_spec("path:7", 0).graph.vertex_count() == 7);
    CHECK(parse_family_spec("kbip:2,3", 0).graph.edge_count() == 6);
    CHECK(parse_family_spec("gk:1", 0).graph.vertex_count() == 12);
    CHECK(parse_family_spec("petersen", 0).graph.vertex_count() == 10);
    CHECK(parse_family_spec("broom:9,3", 0).graph.vertex_count() == 9);
    CHECK(parse_family_spec("random-connected:6,0.4", 11).graph ==
          random_connected_graph(6, 0.4, 11).graph);

    CHECK_THROWS_AS(parse_family_spec("torus:3", 0), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("path", 0), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("path:x", 0), std::invalid_argument);
}
