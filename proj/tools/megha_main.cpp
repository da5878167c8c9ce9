#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "megha/generators.hpp"
#include "megha/io.hpp"
#include "megha/solvers.hpp"

using namespace megha;

namespace {

void add_budget_flags(CLI::App* cmd, SolveOptions& opts) {
    cmd->add_option("--brute-ceiling", opts.brute_ceiling, "max n for brute-force enumeration");
    cmd->add_option("--subset-ceiling", opts.subset_ceiling, "max n for subset-DP solvers");
    cmd->add_option("--modulator-budget", opts.modulator_budget,
                    "max vertex-cover / clique-modulator size searched");
    cmd->add_option("--binary-exact-gate", opts.binary_exact_gate,
                    "max n for the binary solver's zero-envy completion search");
    cmd->add_option("--enum-budget", opts.enum_budget, "max type-assignment enumerations");
    cmd->add_option("--state-budget", opts.state_budget, "max width-DP table entries");
    cmd->add_option("--threads", opts.threads, "worker threads (0 = all, 1 = serial)");
}

SubsetMode mode_of(const std::string& name) {
    if (name == "partition-enum") return SubsetMode::PartitionEnum;
    if (name == "convolution") return SubsetMode::Convolution;
    raise(Err::ParseError, "unknown mode '" + name + "'");
}

NiceTreeDecomposition decomposition_for(const Instance& inst, const std::string& td_path) {
    SocialGraph g = SocialGraph::of(inst);
    TreeDecomposition td;
    if (!td_path.empty()) {
        td = parse_tree_decomposition(read_file(td_path), inst.n);
        validate_decomposition(g, td);
    } else {
        td = tree_decomposition_minfill(g);
    }
    return to_nice_decomposition(g, td);
}

SolveResult run_solver(const Instance& inst, const std::string& solver,
                       const std::string& td_path, const SolveOptions& opts) {
    if (solver == "auto") {
        DispatchPlan plan = plan_dispatch(inst, opts);
        std::cerr << "route: " << plan.route << "\n";
        for (const std::string& line : plan.rationale) std::cerr << "  " << line << "\n";
        return solve_auto(inst, opts);
    }
    if (solver == "brute") return solve_brute_force(inst, opts);
    if (solver == "binary-deg1") return solve_binary_degree_one(inst, opts);
    if (solver == "treewidth") return solve_treewidth(inst, decomposition_for(inst, td_path), opts);
    if (solver == "tree") return solve_tree(inst, opts);
    if (solver == "disjoint") {
        SolveOptions inner = opts;
        return solve_disjoint_union(
            inst, [inner](const Instance& sub) { return solve_auto(sub, inner); }, opts);
    }
    if (solver == "vc") {
        auto cover = minimum_vertex_cover(SocialGraph::of(inst), opts.modulator_budget);
        if (!cover) raise(Err::TooLarge, "no vertex cover within the modulator budget");
        return solve_vertex_cover(inst, *cover, opts);
    }
    if (solver == "clique-mod") {
        auto mod = minimum_clique_modulator(SocialGraph::of(inst), opts.modulator_budget);
        if (!mod) raise(Err::TooLarge, "no clique modulator within the modulator budget");
        return solve_clique_modulator(inst, *mod, opts);
    }
    if (solver == "bipartite") {
        ClassifyReport report = classify(SocialGraph::of(inst));
        if (!report.complete_bipartition)
            raise(Err::NotCompleteBipartite, "social graph is not complete bipartite");
        auto [left, right] = *report.complete_bipartition;
        return solve_complete_bipartite(inst, left, right, opts);
    }
    raise(Err::ParseError, "unknown solver '" + solver + "'");
}

int cmd_solve(const std::string& path, const std::string& solver, const std::string& mode,
              const std::string& td_path, bool pretty, SolveOptions opts) {
    opts.subset_mode = mode_of(mode);
    InstanceDocument doc = parse_instance_document(read_file(path));
    Instance inst = canonicalize_instance(doc.raw);
    SolveResult res = run_solver(inst, solver, td_path, opts);
    std::cout << format_result_document(doc, inst, res, pretty);
    return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& allocation_path) {
    InstanceDocument doc = parse_instance_document(read_file(instance_path));
    Instance inst = canonicalize_instance(doc.raw);
    std::vector<int> assignment = parse_assignment_document(read_file(allocation_path), doc);
    Allocation alloc = verify_allocation(inst, assignment);
    for (size_t i = 0; i < inst.edges.size(); ++i) {
        auto [u, v] = inst.edges[i];
        std::cout << "edge " << doc.agent_names[u] << "-" << doc.agent_names[v] << ": "
                  << envy_str(alloc.per_edge[i]) << "\n";
    }
    std::cout << "total (scaled): " << envy_str(alloc.total) << "\n";
    std::cout << "scale: " << inst.scale << "\n";
    return 0;
}

int cmd_generate(const std::string& kind, const GenSpec& base, int pairs, int isolated,
                 const std::string& graph_path, const std::string& out, bool pretty) {
    Instance inst;
    if (kind == "paper-example") {
        inst = four_agent_matching_fixture();
    } else if (kind == "bisection") {
        if (graph_path.empty())
            raise(Err::ParseError, "bisection generation needs --graph <instance.json>");
        InstanceDocument gdoc = parse_instance_document(read_file(graph_path));
        Instance ginst = canonicalize_instance(gdoc.raw);
        inst = gen_bisection(SocialGraph::of(ginst));
    } else if (kind == "binary-matching") {
        inst = gen_binary_matching(pairs, isolated, base.seed);
    } else {
        GenSpec spec = base;
        spec.kind = kind;
        inst = gen_random(spec);
    }
    InstanceDocument doc = document_of(inst);
    doc.metadata_json = std::string("{\"generator\":{\"kind\":\"") + kind +
                        "\",\"seed\":" + std::to_string(base.seed) + "}}";
    std::string text = format_instance_document(doc, pretty);
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
    std::cerr << "generated kind=" << kind << " n=" << inst.n
              << " edges=" << inst.edges.size()
              << " ell=" << compute_house_types(inst).ell << "\n";
    return 0;
}

int cmd_analyze(const std::string& path, const SolveOptions& opts) {
    InstanceDocument doc = parse_instance_document(read_file(path));
    Instance inst = canonicalize_instance(doc.raw);
    SocialGraph g = SocialGraph::of(inst);
    ClassifyReport report = classify(g);
    HouseTypePartition types = compute_house_types(inst);
    DispatchPlan plan = plan_dispatch(inst, opts);
    auto cover = minimum_vertex_cover(g, opts.modulator_budget);
    auto mod = minimum_clique_modulator(g, opts.modulator_budget);
    TreeDecomposition td = tree_decomposition_minfill(g);

    std::cout << "{\n";
    std::cout << "  \"n\": " << inst.n << ",\n";
    std::cout << "  \"edges\": " << inst.edges.size() << ",\n";
    std::cout << "  \"components\": " << components(g).size() << ",\n";
    std::cout << "  \"max_degree\": " << report.max_degree << ",\n";
    std::cout << "  \"ell\": " << types.ell << ",\n";
    std::cout << "  \"is_tree\": " << (report.is_tree ? "true" : "false") << ",\n";
    std::cout << "  \"is_clique\": " << (report.is_clique ? "true" : "false") << ",\n";
    std::cout << "  \"complete_bipartite\": "
              << (report.complete_bipartition ? "true" : "false") << ",\n";
    std::cout << "  \"split\": " << (report.split_partition ? "true" : "false") << ",\n";
    if (cover)
        std::cout << "  \"vertex_cover_size\": " << cover->size() << ",\n";
    else
        std::cout << "  \"vertex_cover_size\": null,\n";
    if (mod)
        std::cout << "  \"clique_modulator_size\": " << mod->size() << ",\n";
    else
        std::cout << "  \"clique_modulator_size\": null,\n";
    std::cout << "  \"minfill_width\": " << td.width() << ",\n";
    std::cout << "  \"route\": \"" << plan.route << "\",\n";
    std::cout << "  \"rationale\": [\n";
    for (size_t i = 0; i < plan.rationale.size(); ++i)
        std::cout << "    \"" << plan.rationale[i] << "\""
                  << (i + 1 < plan.rationale.size() ? "," : "") << "\n";
    std::cout << "  ]\n}\n";
    return 0;
}

// ---- bench ----

struct BenchRow {
    std::string suite;
    int n = 0, ell = 0;
    std::string solver, mode;
    envy_t envy = 0;
    long long millis = 0;
};

long long best_millis(int repeat, const std::function<SolveResult()>& run, envy_t& envy_out) {
    long long best = -1;
    for (int r = 0; r < std::max(1, repeat); ++r) {
        auto t0 = std::chrono::steady_clock::now();
        SolveResult res = run();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        envy_out = res.allocation.total;
        if (best < 0 || ms < best) best = ms;
    }
    return best;
}

Instance bench_bipartite(int left, int right, int ell, unsigned long long seed) {
    int n = left + right;
    GenSpec spec;
    spec.kind = "complete-bipartite";
    spec.n = n;
    spec.ell = ell;
    spec.seed = seed;
    Instance base = gen_random(spec); // left side is ceil(n/2); rebuild edges for the asked split
    RawInstance raw;
    raw.agents = n;
    raw.houses = n;
    for (int i = 0; i < left; ++i)
        for (int j = left; j < n; ++j) raw.edges.emplace_back(i, j);
    raw.vals.resize(n);
    for (int a = 0; a < n; ++a)
        for (int h = 0; h < n; ++h) raw.vals[a].push_back(Rat::from_int(base.value(a, h)));
    return canonicalize_instance(raw);
}

int cmd_bench(const std::string& suite, int repeat, const std::string& csv_path) {
    std::vector<BenchRow> rows;
    SolveOptions opts;
    auto push = [&](BenchRow row) { rows.push_back(std::move(row)); };

    if (suite == "tree" || suite == "all") {
        for (int n : {8, 10, 12}) {
            GenSpec spec;
            spec.kind = "tree";
            spec.n = n;
            spec.ell = 3;
            spec.max_value = 6;
            spec.seed = 1000 + n;
            Instance inst = gen_random(spec);
            for (auto mode : {SubsetMode::PartitionEnum, SubsetMode::Convolution}) {
                SolveOptions o = opts;
                o.subset_mode = mode;
                BenchRow row{"tree", n, 3, "tree",
                             mode == SubsetMode::PartitionEnum ? "partition-enum" : "convolution",
                             0, 0};
                row.millis = best_millis(repeat, [&] { return solve_tree(inst, o); }, row.envy);
                push(row);
            }
        }
    }
    if (suite == "vc" || suite == "all") {
        for (int ell : {2, 3})
            for (int k : {2, 4, 6}) {
                Instance inst = bench_bipartite(k, 8, ell, 2000 + 10 * ell + k);
                std::vector<int> cover(k);
                for (int i = 0; i < k; ++i) cover[i] = i;
                BenchRow row{"vc", inst.n, ell, "vc", "-", 0, 0};
                row.millis =
                    best_millis(repeat, [&] { return solve_vertex_cover(inst, cover, opts); },
                                row.envy);
                push(row);
            }
    }
    if (suite == "brute" || suite == "all") {
        for (int n = 4; n <= 8; ++n) {
            GenSpec spec;
            spec.kind = "random-graph";
            spec.n = n;
            spec.ell = std::min(3, n);
            spec.max_value = 6;
            spec.seed = 3000 + n;
            Instance inst = gen_random(spec);
            BenchRow row{"brute", n, spec.ell, "brute", "-", 0, 0};
            row.millis = best_millis(repeat, [&] { return solve_brute_force(inst, opts); },
                                     row.envy);
            push(row);
        }
    }
    if (suite == "compare" || suite == "all") {
        // serial reference against the parallel kernels on identical instances
        GenSpec bspec;
        bspec.kind = "random-graph";
        bspec.n = 9;
        bspec.ell = 4;
        bspec.max_value = 9;
        bspec.seed = 4001;
        Instance brute_inst = gen_random(bspec);
        Instance vc_inst = bench_bipartite(6, 6, 4, 4002);
        std::vector<int> cover{0, 1, 2, 3, 4, 5};
        for (int threads : {1, 0}) {
            SolveOptions o = opts;
            o.threads = threads;
            std::string mode = threads == 1 ? "serial" : "parallel";
            BenchRow row{"compare", 9, 4, "brute", mode, 0, 0};
            row.millis = best_millis(repeat, [&] { return solve_brute_force(brute_inst, o); },
                                     row.envy);
            push(row);
            BenchRow row2{"compare", 12, 4, "vc", mode, 0, 0};
            row2.millis =
                best_millis(repeat, [&] { return solve_vertex_cover(vc_inst, cover, o); },
                            row2.envy);
            push(row2);
        }
    }
    if (rows.empty()) raise(Err::ParseError, "unknown bench suite '" + suite + "'");

    std::string csv = "suite,n,ell,solver,mode,envy_scaled,millis\n";
    for (const BenchRow& r : rows)
        csv += r.suite + "," + std::to_string(r.n) + "," + std::to_string(r.ell) + "," + r.solver +
               "," + r.mode + "," + envy_str(r.envy) + "," + std::to_string(r.millis) + "\n";
    if (csv_path.empty() || csv_path == "-")
        std::cout << csv;
    else
        write_file(csv_path, csv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimum-envy house allocation over social graphs"};
    app.require_subcommand(1);
    SolveOptions opts;

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance and print the result document");
    std::string solve_path, solver = "auto", mode = "partition-enum", td_path;
    bool pretty = false, compact = false;
    solve->add_option("instance", solve_path, "instance JSON path ('-' for stdin)")->required();
    solve->add_option("--solver", solver, "solver family")
        ->check(CLI::IsMember({"auto", "brute", "binary-deg1", "treewidth", "vc", "clique-mod",
                               "bipartite", "tree", "disjoint"}));
    solve->add_option("--mode", mode, "subset-DP mode")
        ->check(CLI::IsMember({"partition-enum", "convolution"}));
    solve->add_option("--td", td_path, "tree decomposition file for --solver treewidth");
    solve->add_flag("--pretty", pretty, "pretty-print the result document");
    solve->add_flag("--json", compact, "compact output (the default)");
    add_budget_flags(solve, opts);

    // verify
    auto* verify = app.add_subcommand("verify", "re-evaluate an allocation against an instance");
    std::string verify_instance, verify_allocation_path;
    verify->add_option("instance", verify_instance, "instance JSON path")->required();
    verify->add_option("allocation", verify_allocation_path, "allocation/result JSON path")
        ->required();

    // generate
    auto* gen = app.add_subcommand("generate", "emit a deterministic instance document");
    std::string gen_kind, gen_graph, gen_out;
    GenSpec gen_spec;
    int gen_pairs = 2, gen_isolated = 0;
    bool gen_pretty = true;
    gen->add_option("kind", gen_kind,
                    "paper-example|bisection|binary-matching|random-graph|tree|path|cycle|"
                    "clique|split|complete-bipartite|matching")
        ->required();
    gen->add_option("--n", gen_spec.n, "number of agents/houses");
    gen->add_option("--ell", gen_spec.ell, "distinct valuation columns");
    gen->add_option("--max-value", gen_spec.max_value, "values drawn from [0, max]");
    gen->add_option("--seed", gen_spec.seed, "PRNG seed");
    gen->add_option("--edge-percent", gen_spec.edge_percent, "edge density percentage");
    gen->add_option("--pairs", gen_pairs, "binary-matching: number of edges");
    gen->add_option("--isolated", gen_isolated, "binary-matching: number of lone agents");
    gen->add_option("--graph", gen_graph, "bisection: instance JSON supplying the graph");
    gen->add_option("--out,-o", gen_out, "output path (default stdout)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "print the structure report and dispatch route");
    std::string analyze_path;
    analyze->add_option("instance", analyze_path, "instance JSON path")->required();
    add_budget_flags(analyze, opts);

    // bench
    auto* bench = app.add_subcommand("bench", "run a timing suite and print CSV");
    std::string bench_suite = "compare", bench_csv;
    int bench_repeat = 3;
    bench->add_option("--suite", bench_suite, "tree|vc|brute|compare|all");
    bench->add_option("--repeat", bench_repeat, "repetitions per row (best is kept)");
    bench->add_option("--csv", bench_csv, "CSV output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_path, solver, mode, td_path, pretty, opts);
        if (verify->parsed()) return cmd_verify(verify_instance, verify_allocation_path);
        if (gen->parsed())
            return cmd_generate(gen_kind, gen_spec, gen_pairs, gen_isolated, gen_graph, gen_out,
                                gen_pretty);
        if (analyze->parsed()) return cmd_analyze(analyze_path, opts);
        if (bench->parsed()) return cmd_bench(bench_suite, bench_repeat, bench_csv);
    } catch (const Error& e) {
        std::cerr << format_error_document(e);
        return is_structural(e.code) ? 2 : 1;
    } catch (const std::exception& e) {
        Error wrapped(Err::Internal, e.what());
        std::cerr << format_error_document(wrapped);
        return 1;
    }
    return 0;
}
