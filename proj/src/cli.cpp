#include "ndmc/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ndmc/checker.hpp"
#include "ndmc/cliquewidth.hpp"
#include "ndmc/hardness.hpp"
#include "ndmc/parser.hpp"
#include "ndmc/quotient.hpp"
#include "ndmc/solvers.hpp"
#include "ndmc/vertex_cover.hpp"

namespace ndmc {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file '" + path + "'");
    out << content;
}

std::string fnv1a_digest(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Report {
    json body;

    void echo(const std::vector<std::string>& args) {
        std::string cmd;
        for (const auto& a : args) cmd += (cmd.empty() ? "" : " ") + a;
        body["command"] = cmd;
    }

    void digest(const std::string& role, const std::string& content) {
        body["inputs"][role] = fnv1a_digest(content);
    }

    void print(std::ostream& out, bool as_json) const {
        if (as_json) {
            out << body.dump(2) << "\n";
            return;
        }
        for (auto it = body.begin(); it != body.end(); ++it) {
            if (it.key() == "command" || it.key() == "inputs") continue;
            out << it.key() << ": " << (it.value().is_string()
                                            ? it.value().get<std::string>()
                                            : it.value().dump())
                << "\n";
        }
    }
};

struct CommonFlags {
    std::string output = "text";
    uint64_t seed = 0xC0FFEE;
    uint64_t budget = 0;
    bool stats = false;
    bool missing_false = false;
    bool no_memo = false;
    bool total_qs_bound = false;

    bool json_out() const { return output == "json"; }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--output", flags.output, "Report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--seed", flags.seed, "Seed for randomized corpora");
    cmd->add_option("--budget", flags.budget, "Node-visit budget (0 = unlimited)");
    cmd->add_flag("--stats", flags.stats, "Emit evaluation statistics");
    cmd->add_flag("--missing-false", flags.missing_false,
                  "Missing labels/colors make the sentence false instead of an error");
    cmd->add_flag("--no-memo", flags.no_memo, "Disable subformula result caching");
    cmd->add_flag("--total-qs", flags.total_qs_bound,
                  "Conservative set-size bound using the total set quantifier count");
}

int cmd_check(const std::string& graph_path, const std::string& formula_path,
              const std::string& engine, const CommonFlags& flags,
              const std::vector<std::string>& args, std::ostream& out) {
    std::string graph_text = read_file(graph_path);
    std::string formula_text = read_file(formula_path);
    Graph g = parse_graph(graph_text);
    FormulaPtr f = parse_formula(formula_text);

    Report report;
    report.echo(args);
    report.digest("graph", graph_text);
    report.digest("formula", formula_text);
    report.body["engine"] = engine;

    bool value = false;
    auto start = std::chrono::steady_clock::now();
    if (engine == "naive") {
        EvalOptions opts;
        opts.budget = flags.budget;
        opts.missing_symbols_false = flags.missing_false;
        EvalStats stats;
        value = eval_naive(g, f, opts, &stats);
        if (flags.stats) report.body["visits"] = stats.visits;
    } else {
        CheckerOptions opts;
        opts.budget = flags.budget;
        opts.missing_symbols_false = flags.missing_false;
        opts.memoize = !flags.no_memo;
        opts.conservative_set_bound = flags.total_qs_bound;
        CheckStats stats;
        value = metrics(f).q_s > 0 ? check_mso(g, f, opts, &stats)
                                   : check_fo(g, f, opts, &stats);
        if (flags.stats) {
            report.body["visits"] = stats.visits;
            report.body["branches"] = stats.branches;
            report.body["set_choices"] = stats.set_choices;
            report.body["width"] = stats.width;
        }
    }
    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    report.body["result"] = value;
    if (flags.stats) report.body["wall_ms"] = elapsed.count();
    report.print(out, flags.json_out());
    return value ? 0 : 1;
}

int cmd_graph_op(const std::string& op, const std::string& graph_path, const CommonFlags& flags,
                 const std::vector<std::string>& args, std::ostream& out) {
    std::string graph_text = read_file(graph_path);
    Graph g = parse_graph(graph_text);
    Report report;
    report.echo(args);
    report.digest("graph", graph_text);
    if (op == "nd") {
        report.body["result"] = nd(g);
    } else if (op == "vc") {
        VertexCoverResult vc = vertex_cover(g);
        report.body["result"] = vc.size;
        report.body["cover"] = vc.cover;
    } else {
        QuotientGraph q = quotient_graph(g, neighborhood_partition(g));
        report.body["result"] = q.width();
        json nodes = json::array();
        for (int i = 0; i < q.width(); ++i) {
            nodes.push_back({{"kind", q.nodes[i].kind == ClassKind::clique ? "clique" : "independent"},
                             {"size", q.nodes[i].size},
                             {"neighbors", q.adj[i]}});
        }
        report.body["nodes"] = nodes;
    }
    report.print(out, flags.json_out());
    return 0;
}

int cmd_solve(const std::string& problem, const std::string& graph_path, const CommonFlags& flags,
              const std::vector<std::string>& args, std::ostream& out) {
    std::string graph_text = read_file(graph_path);
    Graph g = parse_graph(graph_text);
    Report report;
    report.echo(args);
    report.digest("graph", graph_text);
    int exit_code = 0;
    if (problem == "chromatic") {
        report.body["value"] = chromatic_number(g);
    } else if (problem == "hamiltonian") {
        bool value = hamiltonian_cycle(g);
        report.body["value"] = value;
        exit_code = value ? 0 : 1;
    } else {
        report.body["value"] = eds_size(g);
    }
    report.print(out, flags.json_out());
    return exit_code;
}

int cmd_gen_sat(const std::string& cnf_path, const std::string& stage, int weighted,
                bool fo_path, bool skip_vc, const std::string& out_prefix,
                const CommonFlags& flags, const std::vector<std::string>& args,
                std::ostream& out) {
    std::string cnf_text = read_file(cnf_path);
    CnfFormula cnf = parse_dimacs(cnf_text);

    GenOptions gen;
    gen.fo_path_encoding = fo_path;
    gen.compute_vertex_cover = !skip_vc;

    HardnessInstance inst = sat_to_directed(cnf, gen);
    if (weighted >= 0) {
        if (stage != "directed")
            throw InputError("--weighted applies to the directed stage only");
        inst.sentence = weighted_variant(cnf, weighted);
        inst.metadata.sentence_metrics = metrics(inst.sentence, inst.graph);
    }
    if (stage == "undirected" || stage == "uncolored" || stage == "unlabeled")
        inst = directed_to_undirected(inst, gen);
    if (stage == "uncolored" || stage == "unlabeled") inst = decolor(inst);
    if (stage == "unlabeled") inst = delabel(inst);

    std::string graph_text = render_graph(inst.graph);
    std::string formula_text = render(inst.sentence) + "\n";
    write_file(out_prefix + ".graph", graph_text);
    write_file(out_prefix + ".formula", formula_text);

    Report report;
    report.echo(args);
    report.digest("cnf", cnf_text);
    report.body["stage"] = stage_name(inst.stage);
    report.body["graph_file"] = out_prefix + ".graph";
    report.body["formula_file"] = out_prefix + ".formula";
    report.body["vertices"] = inst.graph.n;
    report.body["bit_width"] = inst.metadata.bit_width;
    if (inst.metadata.vertex_cover_size >= 0)
        report.body["vertex_cover"] = inst.metadata.vertex_cover_size;
    const SentenceMetrics& sm = inst.metadata.sentence_metrics;
    report.body["metrics"] = {{"q_v", sm.q_v}, {"q_s", sm.q_s}, {"depth", sm.depth},
                              {"size", sm.size}, {"labels", sm.label_count}};
    if (!inst.metadata.levels.empty()) report.body["max_level"] =
        *std::max_element(inst.metadata.levels.begin(), inst.metadata.levels.end());
    report.print(out, flags.json_out());
    return 0;
}

struct BenchRow {
    std::string family;
    int n;
    Graph graph;
    FormulaPtr sentence;
    std::string engine;
};

std::vector<BenchRow> bench_suite(const std::string& name, uint64_t /*seed*/) {
    const std::string dominating = "exists x. forall y. (x = y | E(x,y))";
    const std::string two_coloring =
        "existsS X. forall x. forall y. (E(x,y) -> !(x in X <-> y in X))";
    std::vector<BenchRow> rows;
    if (name == "fo-scaling") {
        for (int n : {50, 100, 200})
            rows.push_back({"K_{n,n}", 2 * n, complete_bipartite(n, n),
                            parse_formula(dominating), "fast"});
    } else if (name == "mso-scaling") {
        for (int n : {50, 200, 1000})
            rows.push_back({"K_{n,n}", 2 * n, complete_bipartite(n, n),
                            parse_formula(two_coloring), "fast"});
    } else if (name == "naive-vs-fast") {
        for (int n : {4, 5, 6}) {
            for (const std::string engine : {"naive", "fast"}) {
                rows.push_back({"C_n", n, cycle_graph(n), parse_formula(two_coloring), engine});
            }
        }
    } else {
        throw InputError("unknown bench suite '" + name + "'");
    }
    return rows;
}

int cmd_bench(const std::string& suite, const CommonFlags& flags,
              const std::vector<std::string>& args, std::ostream& out) {
    std::vector<BenchRow> rows = bench_suite(suite, flags.seed);
    if (rows.empty()) throw InputError("bench suite '" + suite + "' is empty");

    json table = json::array();
    out << "family\tn\tnd\tengine\ttime_ms\tbranches\tresult\n";
    for (auto& row : rows) {
        CheckStats stats;
        CheckerOptions copts;
        copts.budget = flags.budget;
        EvalOptions eopts;
        eopts.budget = flags.budget;
        int width = nd(row.graph);
        auto start = std::chrono::steady_clock::now();
        bool value;
        uint64_t branches = 0;
        if (row.engine == "naive") {
            EvalStats es;
            value = eval_naive(row.graph, row.sentence, eopts, &es);
            branches = es.visits;
        } else {
            value = check_mso(row.graph, row.sentence, copts, &stats);
            branches = stats.branches;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        out << row.family << "\t" << row.n << "\t" << width << "\t" << row.engine << "\t" << ms
            << "\t" << branches << "\t" << (value ? "true" : "false") << "\n";
        table.push_back({{"family", row.family}, {"n", row.n}, {"nd", width},
                         {"engine", row.engine}, {"time_ms", ms}, {"branches", branches},
                         {"result", value}});
    }
    if (flags.json_out()) out << table.dump(2) << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact FO/MSO model checking on colored labeled graphs via neighborhood "
                 "diversity, with quotient-graph solvers and a SAT-gadget generator"};
    app.require_subcommand(1);
    CommonFlags flags;

    std::string graph_path, formula_path, engine = "fast";
    auto* check = app.add_subcommand("check", "Decide whether a graph models a sentence");
    check->add_option("graph", graph_path, "Graph file")->required();
    check->add_option("formula", formula_path, "Formula file")->required();
    check->add_option("--engine", engine, "naive or fast")
        ->check(CLI::IsMember({"naive", "fast"}));
    add_common(check, flags);

    std::string nd_graph;
    auto* nd_cmd = app.add_subcommand("nd", "Neighborhood diversity of a graph");
    nd_cmd->add_option("graph", nd_graph, "Graph file")->required();
    add_common(nd_cmd, flags);

    std::string vc_graph;
    auto* vc_cmd = app.add_subcommand("vc", "Minimum vertex cover");
    vc_cmd->add_option("graph", vc_graph, "Graph file")->required();
    add_common(vc_cmd, flags);

    std::string quotient_graph_path;
    auto* quotient_cmd = app.add_subcommand("quotient", "Type-class quotient graph");
    quotient_cmd->add_option("graph", quotient_graph_path, "Graph file")->required();
    add_common(quotient_cmd, flags);

    std::string solve_problem, solve_graph;
    auto* solve = app.add_subcommand("solve", "chromatic | hamiltonian | eds");
    solve->add_option("problem", solve_problem, "Problem name")
        ->required()
        ->check(CLI::IsMember({"chromatic", "hamiltonian", "eds"}));
    solve->add_option("graph", solve_graph, "Graph file")->required();
    add_common(solve, flags);

    auto* gen = app.add_subcommand("gen", "Instance generators");
    gen->require_subcommand(1);
    std::string cnf_path, gen_stage = "directed", out_prefix = "instance";
    int weighted = -1;
    bool fo_path = false, skip_vc = false;
    auto* gen_sat = gen->add_subcommand("sat", "SAT reduction instance");
    gen_sat->add_option("--cnf", cnf_path, "DIMACS CNF input")->required();
    gen_sat->add_option("--stage", gen_stage, "directed|undirected|uncolored|unlabeled")
        ->check(CLI::IsMember({"directed", "undirected", "uncolored", "unlabeled"}));
    gen_sat->add_option("--weighted", weighted, "Exact-weight FO variant (directed stage)");
    gen_sat->add_flag("--fo-path", fo_path, "First-order path comparison encoding");
    gen_sat->add_flag("--skip-vc", skip_vc, "Skip the vertex cover measurement");
    gen_sat->add_option("-o,--out", out_prefix, "Output file prefix");
    add_common(gen_sat, flags);

    std::string bench_suite_name;
    auto* bench = app.add_subcommand("bench", "Scaling tables");
    bench->add_option("suite", bench_suite_name, "Suite name")->required();
    add_common(bench, flags);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help() << std::flush;
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(graph_path, formula_path, engine, flags, args, out);
        if (nd_cmd->parsed()) return cmd_graph_op("nd", nd_graph, flags, args, out);
        if (vc_cmd->parsed()) return cmd_graph_op("vc", vc_graph, flags, args, out);
        if (quotient_cmd->parsed())
            return cmd_graph_op("quotient", quotient_graph_path, flags, args, out);
        if (solve->parsed()) return cmd_solve(solve_problem, solve_graph, flags, args, out);
        if (gen_sat->parsed())
            return cmd_gen_sat(cnf_path, gen_stage, weighted, fo_path, skip_vc, out_prefix,
                               flags, args, out);
        if (bench->parsed()) return cmd_bench(bench_suite_name, flags, args, out);
        err << "error: no command\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ndmc
