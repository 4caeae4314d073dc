#include <benchmark/benchmark.h>

#include "mvis/bounds.hpp"
#include "mvis/chimu.hpp"
#include "mvis/generators.hpp"
#include "mvis/metrics.hpp"
#include "mvis/visibility.hpp"

namespace {

using namespace mvis;

void BM_all_pairs_distances(benchmark::State& state) {
    Graph g = random_connected_graph(64, 0.12, 7).graph;
    for (auto _ : state) {
        DistanceMatrix d = all_pairs_distances(g);
        benchmark::DoNotOptimize(d.row(0));
    }
}
BENCHMARK(BM_all_pairs_distances);

void BM_pair_visibility(benchmark::State& state) {
    Graph g = heawood().graph;
    DistanceMatrix d = all_pairs_distances(g);
    VertexSet s{0, 2, 4, 6, 8, 10};
    for (auto _ : state) {
        MvCheck check = is_mv_set(g, d, s);
        benchmark::DoNotOptimize(check.ok);
    }
}
BENCHMARK(BM_pair_visibility);

void BM_mu_exact(benchmark::State& state) {
    Graph g = state.range(0) == 0 ? g_k(1).graph : frog(2).graph;
    DistanceMatrix d = all_pairs_distances(g);
    for (auto _ : state) {
        MuCertificate cert = mu_exact(g, d, Budget::unlimited());
        benchmark::DoNotOptimize(cert.value);
    }
}
BENCHMARK(BM_mu_exact)->Arg(0)->Arg(1);

void BM_chimu_exact(benchmark::State& state) {
    Graph g = petersen().graph;
    for (auto _ : state) {
        ChimuCertificate cert = chimu_exact(g, Budget::unlimited());
        benchmark::DoNotOptimize(cert.value);
    }
}
BENCHMARK(BM_chimu_exact);

void BM_zarankiewicz(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(zarankiewicz_z22(4, 4));
    }
}
BENCHMARK(BM_zarankiewicz);

void BM_audit(benchmark::State& state) {
    LabeledGraph lg = random_connected_graph(7, 0.4, 11);
    for (auto _ : state) {
        BoundReport report = audit(lg.graph, "bench", std::nullopt, Budget::unlimited());
        benchmark::DoNotOptimize(report.any_violation);
    }
}
BENCHMARK(BM_audit);

}  // namespace

BENCHMARK_MAIN();
