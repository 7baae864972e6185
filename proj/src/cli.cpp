#include "domset/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "domset/hardness.hpp"
#include "domset/oracle.hpp"
#include "domset/solver.hpp"

namespace domset {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ordered_json cover_json(const std::vector<CoverComponent>& cover) {
    ordered_json arr = ordered_json::array();
    for (const auto& comp : cover) {
        ordered_json c;
        c["kind"] = comp.kind == CoverKind::Edge ? "edge" : "odd-cycle";
        c["vertices"] = comp.vertices;
        arr.push_back(c);
    }
    return arr;
}

int cmd_analyze(const std::string& pattern_spec, bool json, std::ostream& out) {
    Pattern p = parse_pattern(pattern_spec);
    PatternDecomposition dec = compute_rho(p);
    Budget b = budget(dec, p.k, 1, 1);
    if (json) {
        ordered_json j;
        j["rho"] = dec.rho;
        j["S"] = dec.s;
        j["NS"] = dec.ns;
        j["R"] = dec.r;
        ordered_json matching = ordered_json::array();
        for (auto [s, t] : dec.matching) matching.push_back(ordered_json::array({s, t}));
        j["matching"] = matching;
        j["cover"] = cover_json(dec.r_cover);
        j["tP_exponents"] = {{"n_exp", b.n_exponent}, {"m_exp", b.m_exponent_num / 2.0}};
        out << j.dump() << '\n';
    } else {
        out << "pattern " << pattern_spec << ": rho=" << dec.rho << " |S|=" << dec.s.size()
            << " |NS|=" << dec.ns.size() << " |R|=" << dec.r.size() << " budget=n^"
            << b.n_exponent << " * m^" << (b.m_exponent_num / 2.0) << '\n';
    }
    return 0;
}

ordered_json result_json(const SolveResult& res) {
    ordered_json j;
    j["found"] = res.found;
    if (res.found) j["witness"] = res.witness->vertices;
    j["route"] = res.route;
    if (res.matched_member >= 0) j["matched_member"] = res.matched_member;
    j["case_labels"] = res.stats.case_labels;
    return j;
}

void print_result(const SolveResult& res, bool json, std::ostream& out) {
    if (json) {
        out << result_json(res).dump() << '\n';
        return;
    }
    if (res.found) {
        out << "found via " << res.route << ":";
        for (int v : res.witness->vertices) out << ' ' << v;
        out << '\n';
    } else {
        out << "not found (route " << res.route << ")\n";
    }
}

HostGraph random_graph(int n, long long m, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    m = std::min<long long>(m, static_cast<long long>(all.size()));
    all.resize(static_cast<size_t>(m));
    return HostGraph::from_edges(n, std::move(all));
}

int cmd_verify_reduction(const std::string& pattern_spec, int trials, uint64_t seed, long long n,
                         long long m, int d, std::ostream& out, std::ostream& err) {
    Pattern p = parse_pattern(pattern_spec);
    int passed = 0;
    for (int trial = 0; trial < trials; ++trial) {
        ReductionLayout layout = plan_reduction(p, n, m);
        VectorMode mode = trial % 3 == 0  ? VectorMode::PlantedOrthogonal
                          : trial % 3 == 1 ? VectorMode::Random
                                           : VectorMode::None;
        OVInstance inst = make_ov_instance(layout, d, mode, seed + trial);
        ReductionOutput red = reduce(inst, layout);
        AuditReport audit = audit_sizes(red.graph, layout, d);
        if (!audit.ok) {
            err << "trial " << trial << ": " << audit.detail << '\n';
            continue;
        }
        bool ov = oracle_ov(inst).found;
        bool ds = oracle_solve(red.graph, p).found;
        if (ov == ds) {
            ++passed;
        } else {
            err << "trial " << trial << ": ov=" << ov << " but dominating-pattern=" << ds << '\n';
        }
    }
    out << passed << '/' << trials << " equivalent\n";
    return passed == trials ? 0 : 1;
}

int cmd_bench(const std::string& pattern_spec, const std::vector<int>& sizes, double density,
              uint64_t seed, std::ostream& out) {
    Pattern p = parse_pattern(pattern_spec);
    out << "n\tm\tseconds\tbudget\tn_exp\tm_exp\n";
    for (int n : sizes) {
        std::mt19937_64 rng(seed ^ static_cast<uint64_t>(n));
        long long m = static_cast<long long>(density * n * (n - 1) / 2);
        HostGraph g = random_graph(n, m, rng);
        SolveResult res = solve(g, p);
        Budget b = budget(p, g.n, std::max(1, g.m()));
        out << n << '\t' << g.m() << '\t' << res.stats.elapsed_seconds << '\t' << b.value << '\t'
            << b.n_exponent << '\t' << (b.m_exponent_num / 2.0) << '\n';
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dominating pattern toolkit"};
    app.require_subcommand(1);

    std::string pattern_spec, graph_path, set_specs, vectors_mode = "random", out_prefix;
    bool json = false, non_induced = false, hashed = false;
    uint64_t seed = 0;
    int threads = 1, trials = 50, d = 6;
    long long target_n = 9, target_m = 81;
    double density = 0.3;
    std::vector<int> bench_sizes{10, 14, 18};

    auto* analyze = app.add_subcommand("analyze", "decompose a pattern");
    analyze->add_option("--pattern", pattern_spec)->required();
    analyze->add_flag("--json", json);

    auto* solve_cmd = app.add_subcommand("solve", "find a dominating pattern copy");
    solve_cmd->add_option("--graph", graph_path)->required();
    solve_cmd->add_option("--pattern", pattern_spec);
    solve_cmd->add_option("--set", set_specs, "comma-separated pattern specs");
    solve_cmd->add_flag("--non-induced", non_induced);
    solve_cmd->add_flag("--hashed", hashed);
    solve_cmd->add_flag("--exact", [](size_t) {}, "exact mode (default)");
    solve_cmd->add_option("--seed", seed);
    solve_cmd->add_option("--threads", threads);
    solve_cmd->add_flag("--json", json);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference search");
    oracle_cmd->add_option("--graph", graph_path)->required();
    oracle_cmd->add_option("--pattern", pattern_spec)->required();
    oracle_cmd->add_flag("--non-induced", non_induced);
    oracle_cmd->add_flag("--json", json);

    auto* gen = app.add_subcommand("gen-ov", "compile an orthogonal-vectors instance to a graph");
    gen->add_option("--pattern", pattern_spec)->required();
    gen->add_option("--n", target_n)->required();
    gen->add_option("--m", target_m)->required();
    gen->add_option("--d", d);
    gen->add_option("--seed", seed);
    gen->add_option("--vectors", vectors_mode)
        ->check(CLI::IsMember({"random", "planted-orthogonal", "none"}));
    gen->add_option("--out", out_prefix, "write <prefix>.el and <prefix>.blocks.json");

    auto* verify = app.add_subcommand("verify-reduction", "batch equivalence check");
    verify->add_option("--pattern", pattern_spec)->required();
    verify->add_option("--trials", trials);
    verify->add_option("--seed", seed);
    verify->add_option("--n", target_n);
    verify->add_option("--m", target_m);
    verify->add_option("--d", d);

    auto* bench = app.add_subcommand("bench", "timing table over a size grid");
    bench->add_option("--pattern", pattern_spec)->required();
    bench->add_option("--sizes", bench_sizes);
    bench->add_option("--density", density);
    bench->add_option("--seed", seed);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(pattern_spec, json, out);

        if (solve_cmd->parsed()) {
            HostGraph g = parse_host_graph(read_file(graph_path));
            SolveOptions options;
            options.seed = seed;
            options.exact = !hashed;
            options.threads = threads;
            SolveResult res;
            if (!set_specs.empty()) {
                PatternSet ps;
                std::istringstream ss(set_specs);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) ps.members.push_back(parse_pattern(item));
                res = solve_pattern_set(g, ps, options);
            } else if (pattern_spec.empty()) {
                err << "solve needs --pattern or --set\n";
                return 2;
            } else if (non_induced) {
                res = solve_subgraph(g, parse_pattern(pattern_spec), options);
            } else {
                res = solve(g, parse_pattern(pattern_spec), options);
            }
            print_result(res, json, out);
            return res.found ? 0 : 1;
        }

        if (oracle_cmd->parsed()) {
            HostGraph g = parse_host_graph(read_file(graph_path));
            Pattern p = parse_pattern(pattern_spec);
            SolveResult res = non_induced ? oracle_solve_subgraph(g, p) : oracle_solve(g, p);
            print_result(res, json, out);
            return res.found ? 0 : 1;
        }

        if (gen->parsed()) {
            Pattern p = parse_pattern(pattern_spec);
            ReductionLayout layout = plan_reduction(p, target_n, target_m);
            VectorMode mode = vectors_mode == "random" ? VectorMode::Random
                              : vectors_mode == "planted-orthogonal"
                                  ? VectorMode::PlantedOrthogonal
                                  : VectorMode::None;
            OVInstance inst = make_ov_instance(layout, d, mode, seed);
            ReductionOutput red = reduce(inst, layout);
            std::string edge_list = serialize_host_graph(red.graph);
            std::string blocks = blocks_to_json(red);
            if (out_prefix.empty()) {
                out << edge_list << blocks << '\n';
            } else {
                std::ofstream(out_prefix + ".el") << edge_list;
                std::ofstream(out_prefix + ".blocks.json") << blocks << '\n';
                out << "wrote " << out_prefix << ".el (" << red.graph.n << " vertices, "
                    << red.graph.m() << " edges) and " << out_prefix << ".blocks.json\n";
            }
            return 0;
        }

        if (verify->parsed())
            return cmd_verify_reduction(pattern_spec, trials, seed, target_n, target_m, d, out,
                                        err);

        if (bench->parsed()) return cmd_bench(pattern_spec, bench_sizes, density, seed, out);
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace domset
