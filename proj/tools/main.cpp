// mvis: generate, solve, verify, and audit mutual-visibility colorings.
//
// Exit codes: 0 success (verify: valid), 1 verify found an invalid class,
// 2 input or parse error, 3 budget-limited inexact result, 4 bad scripted
// round, 5 coloring is not a partition, 6 a bound check failed.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvis/bounds.hpp"
#include "mvis/chimu.hpp"
#include "mvis/coloring.hpp"
#include "mvis/edgelist.hpp"
#include "mvis/generators.hpp"
#include "mvis/graph.hpp"
#include "mvis/json_io.hpp"
#include "mvis/metrics.hpp"
#include "mvis/visibility.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidColoring = 1;
constexpr int kExitInput = 2;
constexpr int kExitInexact = 3;
constexpr int kExitBadRound = 4;
constexpr int kExitNotPartition = 5;
constexpr int kExitBoundViolated = 6;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

void emit(const std::string& out_path, const std::string& doc) {
    if (out_path.empty()) {
        std::cout << doc << "\n";
    } else {
        spill(out_path, doc + "\n");
    }
}

struct LoadedInput {
    mvis::Graph graph;
    std::optional<mvis::FamilyTag> tag;
};

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        return c == '{';
    }
    return false;
}

// Inputs are either a readable file (edge list or graph JSON) or a family
// spec like "broom:9,3". Family tags ride along for the audit: from the
// JSON document itself, a "<path>.json" sidecar, or the spec.
LoadedInput load_input(const std::string& input, std::uint64_t seed) {
    if (std::filesystem::exists(input)) {
        std::string text = slurp(input);
        LoadedInput loaded;
        if (looks_like_json(text)) {
            loaded.graph = mvis::parse_graph_json(text);
            try {
                mvis::SidecarData side = mvis::parse_sidecar_json(text);
                loaded.tag = mvis::FamilyTag{side.family, side.params};
            } catch (const std::invalid_argument&) {
            }
        } else {
            loaded.graph = mvis::read_edge_list_text(text);
            std::string side_path = input + ".json";
            if (std::filesystem::exists(side_path)) {
                mvis::SidecarData side = mvis::parse_sidecar_json(slurp(side_path));
                loaded.tag = mvis::FamilyTag{side.family, side.params};
            }
        }
        return loaded;
    }
    mvis::LabeledGraph lg = mvis::parse_family_spec(input, seed);
    return {std::move(lg.graph), mvis::FamilyTag{lg.family, lg.params}};
}

struct GenConfig {
    std::string family;
    int n = -1, k = -1, r = -1, t = -1, s = -1;
    double p = -1.0;
    std::string left, right;
    std::uint64_t seed = 0;
};

int need_int(const GenConfig& cfg, int GenConfig::* field, const char* flag) {
    int value = cfg.*field;
    if (value < 0) {
        throw std::invalid_argument("family \"" + cfg.family + "\" needs --" + flag);
    }
    return value;
}

mvis::LabeledGraph build_family(const GenConfig& cfg) {
    const std::string& f = cfg.family;
    if (f == "path") return mvis::path(need_int(cfg, &GenConfig::n, "n"));
    if (f == "cycle") return mvis::cycle(need_int(cfg, &GenConfig::n, "n"));
    if (f == "complete") return mvis::complete(need_int(cfg, &GenConfig::n, "n"));
    if (f == "kbip") {
        return mvis::complete_bipartite(need_int(cfg, &GenConfig::r, "r"),
                                        need_int(cfg, &GenConfig::t, "t"));
    }
    if (f == "star") return mvis::star(need_int(cfg, &GenConfig::n, "n"));
    if (f == "petersen") return mvis::petersen();
    if (f == "heawood") return mvis::heawood();
    if (f == "gk") return mvis::g_k(need_int(cfg, &GenConfig::k, "k"));
    if (f == "frog") return mvis::frog(need_int(cfg, &GenConfig::k, "k"));
    if (f == "broom") {
        return mvis::broom(need_int(cfg, &GenConfig::n, "n"), need_int(cfg, &GenConfig::k, "k"));
    }
    if (f == "cartesian" || f == "strong" || f == "corona" || f == "family-a" ||
        f == "family-b") {
        if (cfg.left.empty() || cfg.right.empty()) {
            throw std::invalid_argument("family \"" + f + "\" needs --left and --right specs");
        }
        mvis::LabeledGraph a = mvis::parse_family_spec(cfg.left, cfg.seed);
        mvis::LabeledGraph b = mvis::parse_family_spec(cfg.right, cfg.seed + 1);
        if (f == "cartesian") return mvis::cartesian_product(a, b);
        if (f == "strong") return mvis::strong_product(a, b);
        if (f == "corona") return mvis::corona_product(a, b);
        if (f == "family-b") return mvis::family_b(a.graph, b.graph).labeled;
        // family-a with the full cross wiring, which always validates.
        int r = need_int(cfg, &GenConfig::r, "r");
        int s = need_int(cfg, &GenConfig::s, "s");
        std::vector<std::pair<int, int>> cross;
        for (int u = 0; u < a.graph.vertex_count(); ++u) {
            for (int v = 0; v < b.graph.vertex_count(); ++v) cross.emplace_back(u, v);
        }
        mvis::FamilyAResult result = mvis::family_a(a.graph, b.graph, r, s, cross);
        result.labeled.params["validated"] = result.validated ? "true" : "false";
        return result.labeled;
    }
    if (f == "random-tree") {
        return mvis::random_tree(need_int(cfg, &GenConfig::n, "n"), cfg.seed);
    }
    if (f == "random-connected") {
        if (cfg.p < 0.0) throw std::invalid_argument("family \"random-connected\" needs --p");
        return mvis::random_connected_graph(need_int(cfg, &GenConfig::n, "n"), cfg.p, cfg.seed);
    }
    throw std::invalid_argument("unknown family \"" + f + "\"");
}

int run_gen(const GenConfig& cfg, const std::string& out, const std::string& format) {
    mvis::LabeledGraph lg = build_family(cfg);
    if (format == "json") {
        emit(out, mvis::graph_doc_json(lg));
        return kExitOk;
    }
    if (out.empty()) {
        throw std::invalid_argument("gen with edge-list output needs --out");
    }
    mvis::write_edge_list_file(out, lg.graph);
    spill(out + ".json", mvis::sidecar_json(lg) + "\n");
    return kExitOk;
}

int run_compute(const std::string& param, const std::string& input, std::uint64_t seed,
                int budget_ms, const std::string& out) {
    LoadedInput loaded = load_input(input, seed);
    const mvis::Graph& g = loaded.graph;
    mvis::Budget budget = mvis::Budget::from_ms(budget_ms);
    Timer timer;
    if (param == "mu") {
        mvis::DistanceMatrix d = mvis::all_pairs_distances(g);
        mvis::MuCertificate cert = mvis::mu_exact(g, d, budget);
        emit(out, mvis::mu_json(cert, g.vertex_count(), timer.elapsed_ms()));
        return cert.optimal ? kExitOk : kExitInexact;
    }
    if (param == "chimu") {
        mvis::ChimuCertificate cert = mvis::chimu_exact(g, budget);
        mvis::DistanceMatrix d = mvis::all_pairs_distances(g);
        bool valid = mvis::verify_coloring(g, d, cert.coloring.classes).valid;
        emit(out, mvis::chimu_json(cert, g.vertex_count(), valid, timer.elapsed_ms()));
        return cert.optimal ? kExitOk : kExitInexact;
    }
    mvis::ChromaticResult chi = mvis::chromatic_number_exact(g, budget);
    emit(out, mvis::chi_json(chi, g.vertex_count(), timer.elapsed_ms()));
    return chi.optimal ? kExitOk : kExitInexact;
}

int run_greedy(const std::string& input, const std::string& strategy, const std::string& script,
               std::uint64_t seed, int budget_ms, const std::string& out) {
    LoadedInput loaded = load_input(input, seed);
    mvis::Budget budget = mvis::Budget::from_ms(budget_ms);
    Timer timer;
    mvis::GreedyTrace trace;
    if (strategy == "scripted") {
        std::vector<mvis::VertexSet> rounds = mvis::parse_vertex_set_list(slurp(script));
        trace = mvis::greedy_coloring_scripted(loaded.graph, rounds, budget);
    } else {
        trace = mvis::greedy_coloring(loaded.graph, budget);
    }
    emit(out, mvis::greedy_json(trace, timer.elapsed_ms()));
    return kExitOk;
}

int run_verify(const std::string& input, const std::string& coloring_path, std::uint64_t seed,
               const std::string& out) {
    LoadedInput loaded = load_input(input, seed);
    const mvis::Graph& g = loaded.graph;
    std::vector<mvis::VertexSet> classes = mvis::parse_coloring_classes(slurp(coloring_path));
    mvis::Coloring coloring = mvis::make_coloring(g.vertex_count(), std::move(classes));
    mvis::DistanceMatrix d = mvis::all_pairs_distances(g);
    mvis::ColoringReport report = mvis::verify_coloring(g, d, coloring.classes);
    emit(out, mvis::verify_json(report));
    return report.valid ? kExitOk : kExitInvalidColoring;
}

int run_audit(const std::string& input, const std::vector<std::string>& random_args,
              std::uint64_t seed, int budget_ms, const std::string& out) {
    std::ostringstream lines;
    int instances = 0, violations = 0;
    auto run_one = [&](const mvis::Graph& g, const std::string& id,
                       const std::optional<mvis::FamilyTag>& tag) {
        mvis::BoundReport report = mvis::audit(g, id, tag, mvis::Budget::from_ms(budget_ms));
        lines << mvis::bound_report_json(report) << "\n";
        ++instances;
        if (report.any_violation) ++violations;
    };
    if (!random_args.empty()) {
        int n = std::stoi(random_args[0]);
        double p = std::stod(random_args[1]);
        int count = std::stoi(random_args[2]);
        std::uint64_t base_seed = std::stoull(random_args[3]);
        for (int i = 0; i < count; ++i) {
            mvis::LabeledGraph lg = mvis::random_connected_graph(n, p, base_seed + i);
            std::string id = "random-connected:" + random_args[0] + "," + random_args[1] +
                             ",seed=" + std::to_string(base_seed + i);
            run_one(lg.graph, id, mvis::FamilyTag{lg.family, lg.params});
        }
    } else {
        LoadedInput loaded = load_input(input, seed);
        run_one(loaded.graph, input, loaded.tag);
    }
    lines << mvis::audit_summary_json(instances, violations);
    emit(out, lines.str());
    return violations > 0 ? kExitBoundViolated : kExitOk;
}

int run_zarankiewicz(int m, int n, const std::string& out) {
    int value = mvis::zarankiewicz_z22(m, n);
    emit(out, std::string("{\"m\":") + std::to_string(m) + ",\"n\":" + std::to_string(n) +
                  ",\"value\":" + std::to_string(value) + "}");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mutual-visibility coloring toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int budget_ms = 30000;
    std::string out, format = "edgelist";

    GenConfig gen_cfg;
    CLI::App* gen = app.add_subcommand("gen", "Generate a named graph family");
    gen->add_option("family", gen_cfg.family, "Family name")->required();
    gen->add_option("--n", gen_cfg.n, "Order parameter");
    gen->add_option("--k", gen_cfg.k, "Index parameter");
    gen->add_option("--r", gen_cfg.r, "First size parameter");
    gen->add_option("--t", gen_cfg.t, "Second size parameter");
    gen->add_option("--s", gen_cfg.s, "Second clique size (family-a)");
    gen->add_option("--p", gen_cfg.p, "Edge probability");
    gen->add_option("--left", gen_cfg.left, "Left factor spec");
    gen->add_option("--right", gen_cfg.right, "Right factor spec");
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--out", out, "Output path");
    gen->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"edgelist", "json"}));

    std::string param, input;
    CLI::App* compute = app.add_subcommand("compute", "Certify mu, chimu, or chi");
    compute->add_option("param", param, "Parameter")
        ->required()
        ->check(CLI::IsMember({"mu", "chimu", "chi"}));
    compute->add_option("input", input, "Edge-list/JSON path or family spec")->required();
    compute->add_option("--seed", seed, "Random seed");
    compute->add_option("--budget-ms", budget_ms, "Time budget")->check(CLI::PositiveNumber);
    compute->add_option("--out", out, "Output path");

    std::string strategy = "solver", script;
    CLI::App* greedy = app.add_subcommand("greedy", "Greedy coloring rounds");
    greedy->add_option("input", input, "Edge-list/JSON path or family spec")->required();
    greedy->add_option("--strategy", strategy, "Round selection")
        ->check(CLI::IsMember({"solver", "scripted"}));
    greedy->add_option("--script", script, "JSON list of vertex-id lists");
    greedy->add_option("--seed", seed, "Random seed");
    greedy->add_option("--budget-ms", budget_ms, "Time budget")->check(CLI::PositiveNumber);
    greedy->add_option("--out", out, "Output path");

    std::string coloring_path;
    CLI::App* verify = app.add_subcommand("verify", "Check a coloring class by class");
    verify->add_option("input", input, "Edge-list/JSON path or family spec")->required();
    verify->add_option("coloring", coloring_path, "Coloring JSON path")->required();
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--out", out, "Output path");

    std::vector<std::string> random_args;
    CLI::App* audit = app.add_subcommand("audit", "Evaluate every bound against exact values");
    audit->add_option("input", input, "Edge-list/JSON path or family spec");
    audit->add_option("--random", random_args, "n p count seed")->expected(4);
    audit->add_option("--seed", seed, "Random seed");
    audit->add_option("--budget-ms", budget_ms, "Time budget")->check(CLI::PositiveNumber);
    audit->add_option("--out", out, "Output path");

    int zm = 0, zn = 0;
    CLI::App* zar = app.add_subcommand("zarankiewicz", "z(m, n; 2, 2) by exhaustion");
    zar->add_option("m", zm, "Rows")->required();
    zar->add_option("n", zn, "Columns")->required();
    zar->add_option("--out", out, "Output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (gen->parsed()) return run_gen(gen_cfg, out, format);
        if (compute->parsed()) return run_compute(param, input, seed, budget_ms, out);
        if (greedy->parsed()) {
            if (strategy == "scripted" && script.empty()) {
                throw std::invalid_argument("scripted strategy needs --script");
            }
            return run_greedy(input, strategy, script, seed, budget_ms, out);
        }
        if (verify->parsed()) return run_verify(input, coloring_path, seed, out);
        if (audit->parsed()) {
            if (random_args.empty() && input.empty()) {
                throw std::invalid_argument("audit needs an input or --random");
            }
            return run_audit(input, random_args, seed, budget_ms, out);
        }
        if (zar->parsed()) return run_zarankiewicz(zm, zn, out);
    } catch (const mvis::ScriptedRoundError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadRound;
    } catch (const mvis::PartitionError& e) {
        std::cerr << e.what() << "\n";
        return kExitNotPartition;
    } catch (const mvis::EdgeListError& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    } catch (const mvis::GraphError& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
