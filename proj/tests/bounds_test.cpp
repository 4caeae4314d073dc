#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "mvis/bounds.hpp"
#include "mvis/chimu.hpp"
#include "mvis/generators.hpp"
#include "support/oracles.hpp"

using namespace mvis;

namespace {

const BoundEntry& entry_for(const BoundReport& report, const std::string& id) {
    auto it = std::find_if(report.entries.begin(), report.entries.end(),
                           [&](const BoundEntry& e) { return e.id == id; });
    REQUIRE(it != report.entries.end());
    return *it;
}

bool has_note(const BoundReport& report, const std::string& needle) {
    return std::any_of(report.notes.begin(), report.notes.end(),
                       [&](const std::string& n) { return n.find(needle) != std::string::npos; });
}

BoundReport audit_of(const LabeledGraph& lg) {
    return audit(lg.graph, lg.family, std::nullopt, Budget::unlimited());
}

}  // namespace

TEST_CASE("chromatic number on named graphs") {
    CHECK(chromatic_number_exact(complete_bipartite(3, 4).graph, Budget::unlimited()).value == 2);
    CHECK(chromatic_number_exact(petersen().graph, Budget::unlimited()).value == 3);
    CHECK(chromatic_number_exact(cartesian_product(complete(3), complete(3)).graph,
                                 Budget::unlimited()).value == 3);
    CHECK(chromatic_number_exact(cycle(7).graph, Budget::unlimited()).value == 3);
    for (int n = 1; n <= 6; ++n) {
        ChromaticResult r = chromatic_number_exact(complete(n).graph, Budget::unlimited());
        CHECK(r.value == n);
        CHECK(r.optimal);
    }
}

TEST_CASE("chromatic number matches the oracle on seeded graphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = random_connected_graph(7, 0.45, seed).graph;
        ChromaticResult r = chromatic_number_exact(g, Budget::unlimited());
        CAPTURE(seed);
        CHECK(r.optimal);
        CHECK(r.value == oracle::chromatic(g));
    }
}

TEST_CASE("zarankiewicz z(m,n;2,2)") {
    CHECK(zarankiewicz_z22(2, 2) == 3);
    CHECK(zarankiewicz_z22(3, 3) == 6);
    CHECK(zarankiewicz_z22(4, 4) == 9);
    CHECK(zarankiewicz_z22(5, 5) == 12);
    for (int n = 1; n <= 5; ++n) CHECK(zarankiewicz_z22(2, n) == n + 1);
    for (int m = 1; m <= 5; ++m) {
        for (int n = 1; n <= 5; ++n) {
            CHECK(zarankiewicz_z22(m, n) == zarankiewicz_z22(n, m));
            if (m * n <= 16) CHECK(zarankiewicz_z22(m, n) == oracle::zarankiewicz(m, n));
        }
    }
    CHECK_THROWS_AS(zarankiewicz_z22(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(zarankiewicz_z22(3, 6), std::invalid_argument);
}

TEST_CASE("audit of a broom") {
    BoundReport report = audit_of(broom(9, 3));
    CHECK_FALSE(report.any_violation);
    CHECK(report.exact.mu == 5);
    CHECK(report.exact.chimu == 3);
    CHECK(report.exact.mu_optimal);
    CHECK(report.exact.chimu_optimal);

    const BoundEntry& geo = entry_for(report, "geodetic-diameter");
    CHECK(geo.applicable);
    CHECK(geo.value == 3);
    CHECK(geo.satisfied);
    CHECK(has_note(report, "block graph, equality required"));

    CHECK(entry_for(report, "n-over-mu").satisfied);
    CHECK(entry_for(report, "pairs-padding").satisfied);
    CHECK(entry_for(report, "delta-padding").satisfied);
    const BoundEntry& tree = entry_for(report, "tree-formula");
    CHECK(tree.applicable);
    CHECK(tree.value == 3);
    CHECK(tree.satisfied);
}

TEST_CASE("audit of the Heawood graph") {
    BoundReport report = audit_of(heawood());
    CHECK_FALSE(report.any_violation);
    const BoundEntry& rg = entry_for(report, "regular-girth6");
    CHECK(rg.applicable);
    CHECK(rg.value == 5);
    CHECK(rg.satisfied);
    CHECK_FALSE(entry_for(report, "chi-diam2").applicable);
    CHECK_FALSE(entry_for(report, "tree-formula").applicable);
    CHECK(report.exact.girth.has_value());
    CHECK(*report.exact.girth == 6);
}

TEST_CASE("audit of the Petersen graph") {
    BoundReport report = audit_of(petersen());
    CHECK_FALSE(report.any_violation);
    const BoundEntry& cd = entry_for(report, "chi-diam2");
    CHECK(cd.applicable);
    CHECK(cd.value == 3);
    CHECK(cd.satisfied);
    REQUIRE(report.exact.chi.has_value());
    CHECK(*report.exact.chi == 3);
    CHECK(report.exact.chimu == 2);
}

TEST_CASE("audit of paths") {
    BoundReport p7 = audit_of(path(7));
    CHECK_FALSE(p7.any_violation);
    const BoundEntry& ng = entry_for(p7, "nordhaus-gaddum");
    CHECK(ng.applicable);
    CHECK(ng.satisfied);
    const BoundEntry& ngo = entry_for(p7, "nordhaus-gaddum-order");
    CHECK(ngo.applicable);
    CHECK(ngo.value == 6);
    CHECK(ngo.satisfied);
    CHECK(has_note(p7, "the stated ceil((n+5)/2) is evaluated as written"));

    BoundReport p5 = audit_of(path(5));
    const BoundEntry& tree = entry_for(p5, "tree-formula");
    CHECK(tree.applicable);
    CHECK(tree.value == 3);
    CHECK(tree.satisfied);
    const BoundEntry& odd = entry_for(p5, "odd-path-iff");
    CHECK(odd.applicable);
    CHECK(odd.value == 3);
    CHECK(odd.satisfied);
}

TEST_CASE("odd-path-iff holds on non-path odd graphs") {
    BoundReport c5 = audit_of(cycle(5));
    const BoundEntry& odd = entry_for(c5, "odd-path-iff");
    CHECK(odd.applicable);
    CHECK(odd.satisfied);
    CHECK_FALSE(c5.any_violation);
}

TEST_CASE("dominating vertex bound on stars") {
    BoundReport report = audit_of(star(6));
    const BoundEntry& dom = entry_for(report, "dominating-vertex");
    CHECK(dom.applicable);
    CHECK(dom.value == 2);
    CHECK(dom.satisfied);
    CHECK(report.exact.chimu == 2);
}

TEST_CASE("zarankiewicz product bound via family tag") {
    LabeledGraph lg = cartesian_product(complete(3), complete(3));
    FamilyTag tag{lg.family, lg.params};
    BoundReport report = audit(lg.graph, "rook-3", tag, Budget::unlimited());
    const BoundEntry& z = entry_for(report, "zarankiewicz-product");
    CHECK(z.applicable);
    CHECK(z.value == 6);
    CHECK(z.satisfied);
    CHECK(report.exact.mu == 6);
    CHECK_FALSE(report.any_violation);
}

TEST_CASE("corona sandwich bound via family tag") {
    LabeledGraph lg = corona_product(cycle(4), complete(2));
    FamilyTag tag{lg.family, lg.params};
    BoundReport report = audit(lg.graph, "corona-c4-k2", tag, Budget::unlimited());
    const BoundEntry& cs = entry_for(report, "corona-sandwich");
    CHECK(cs.applicable);
    CHECK(cs.value == 2);
    CHECK(cs.satisfied);
    CHECK_FALSE(report.any_violation);
}

TEST_CASE("corona sandwich skips unparseable factors") {
    LabeledGraph lg = corona_product(cycle(4), complete(2));
    FamilyTag tag{lg.family, {{"left", "mystery:9"}, {"right", "complete:2"}}};
    BoundReport report = audit(lg.graph, "corona-odd", tag, Budget::unlimited());
    CHECK_FALSE(entry_for(report, "corona-sandwich").applicable);
    CHECK(has_note(report, "corona factor spec not recognized"));
}

TEST_CASE("audit under a starved budget reports no bounds") {
    // Dense enough that neither exact solver finishes before its first
    // budget poll; g_k instances certify too fast to starve.
    LabeledGraph lg = random_connected_graph(32, 0.3, 7);
    BoundReport report = audit(lg.graph, "rand:32", std::nullopt, Budget::from_ms(0));
    CHECK_FALSE(report.any_violation);
    CHECK(std::none_of(report.entries.begin(), report.entries.end(),
                       [](const BoundEntry& e) { return e.applicable; }));
    CHECK(has_note(report, "exact values not certified within budget"));
}

TEST_CASE("audit rejects disconnected graphs") {
    CHECK_THROWS_AS(audit(Graph(4), "empty", std::nullopt, Budget::unlimited()),
                    std::invalid_argument);
}

TEST_CASE("audit finds no violations on seeded graphs") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        int n = 4 + static_cast<int>(seed % 4);
        LabeledGraph lg = random_connected_graph(n, 0.4, seed);
        BoundReport report = audit_of(lg);
        CAPTURE(seed);
        CHECK_FALSE(report.any_violation);
        CHECK(report.exact.mu == oracle::mu(lg.graph));
        CHECK(report.exact.chimu == oracle::chimu(lg.graph));
    }
}

TEST_CASE("chimu of a clique with isolated vertices") {
    // K_p plus q isolated vertices needs 1 + q classes.
    for (int q = 1; q <= 3; ++q) {
        Graph g(3 + q);
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) g.add_edge(a, b);
        ChimuCertificate cert = chimu_exact(g, Budget::unlimited());
        CHECK(cert.value == 1 + q);
        CHECK(cert.optimal);
    }
}
