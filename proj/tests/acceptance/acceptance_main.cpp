// Acceptance suite: one pass/fail line per criterion, exit code = #failures.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ndmc/checker.hpp"
#include "ndmc/cliquewidth.hpp"
#include "ndmc/hardness.hpp"
#include "ndmc/naive.hpp"
#include "ndmc/parser.hpp"
#include "ndmc/solvers.hpp"
#include "ndmc/vertex_cover.hpp"
#include "support.hpp"

using namespace ndmc;
using namespace ndmc::test;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

const char* kTwoColoring = "existsS X. forall x. forall y. (E(x,y) -> !(x in X <-> y in X))";

// Attaches the standard palette (colors c0, c1; labels l0, l1) so sentences
// drawn from the shared generator are well formed for the graph.
Graph with_palette(Graph g, Rng& rng) {
    VertexSet c0, c1;
    for (int v = 0; v < g.n; ++v) {
        if (rand_chance(rng, 0.5)) c0.push_back(v);
        if (rand_chance(rng, 0.4)) c1.push_back(v);
    }
    g.add_color("c0", c0);
    g.add_color("c1", c1);
    g.add_label("l0", rand_int(rng, 0, g.n - 1));
    g.add_label("l1", rand_int(rng, 0, g.n - 1));
    return g;
}

// --------------------------------------------------------------------------

bool criterion1_fo_oracle(std::string& detail, std::vector<CheckStats>& fo_stats) {
    Rng rng(0xACC1);
    std::vector<Graph> corpus;
    for (int n = 1; n <= 4; ++n)
        for (Graph& g : all_graphs(n)) corpus.push_back(std::move(g));

    Graph palette = with_palette(complete_graph(2), rng);
    uint64_t cases = 0, mismatches = 0;
    for (int si = 0; si < 500; ++si) {
        FormulaGenOptions fo;
        fo.max_depth = 3;
        fo.max_q_v = 3;
        FormulaPtr sentence = random_sentence(rng, palette, fo);
        for (size_t gi = 0; gi < corpus.size(); ++gi) {
            Rng grng(0xBADC0DE + si * 1315423911u + gi);
            Graph g = with_palette(corpus[gi], grng);
            CheckStats stats;
            bool fast = check_fo(g, sentence, {}, &stats);
            bool naive = eval_naive(g, sentence);
            fo_stats.push_back(stats);
            ++cases;
            if (fast != naive) ++mismatches;
        }
    }

    // Digraph side: independent random instances with arc atoms.
    Graph dpalette = with_palette(Graph::digraph(2), rng);
    dpalette.add_edge(0, 1);
    for (int di = 0; di < 500; ++di) {
        GraphGenOptions go;
        go.max_n = 4;
        go.directed = true;
        go.max_colors = 0;
        go.max_labels = 0;
        Graph g = with_palette(random_graph(rng, go), rng);
        FormulaGenOptions fo;
        fo.max_depth = 3;
        fo.max_q_v = 3;
        FormulaPtr sentence = random_sentence(rng, g, fo);
        CheckStats stats;
        bool fast = check_fo(g, sentence, {}, &stats);
        bool naive = eval_naive(g, sentence);
        fo_stats.push_back(stats);
        ++cases;
        if (fast != naive) ++mismatches;
    }

    std::ostringstream os;
    os << cases << " cases, " << mismatches << " mismatches";
    detail = os.str();
    return mismatches == 0 && cases >= 500 * 75 + 500;
}

bool criterion2_mso_oracle(std::string& detail) {
    Rng rng(0xACC2);
    uint64_t cases = 0, mismatches = 0;
    while (cases < 2000) {
        GraphGenOptions go;
        go.max_n = 5;
        go.directed = cases % 5 == 4;
        Graph g = random_graph(rng, go);
        FormulaGenOptions fo;
        fo.max_q_v = 2;
        fo.max_q_s = 2;
        FormulaPtr sentence = random_sentence(rng, g, fo);
        if (metrics(sentence).q_s == 0 && cases % 3 != 0) continue;  // keep it MSO-heavy
        bool fast = check_mso(g, sentence);
        bool naive = eval_naive(g, sentence);
        ++cases;
        if (fast != naive) ++mismatches;
    }
    std::ostringstream os;
    os << cases << " cases, " << mismatches << " mismatches";
    detail = os.str();
    return mismatches == 0;
}

bool criterion3_branch_bound(std::string& detail, const std::vector<CheckStats>& fo_stats) {
    uint64_t violations = 0;
    for (const CheckStats& stats : fo_stats) {
        long double bound = 1;
        for (int i = 0; i < stats.quantifiers; ++i)
            bound *= stats.width + stats.labels + i;
        if (static_cast<long double>(stats.branches) > bound) ++violations;
    }
    std::ostringstream os;
    os << fo_stats.size() << " runs, " << violations << " violations";
    detail = os.str();
    return !fo_stats.empty() && violations == 0;
}

bool criterion4_scaling(std::string& detail) {
    FormulaPtr two_coloring = parse_formula(kTwoColoring);
    std::ostringstream os;
    bool ok = true;

    auto timed = [&](int side) {
        Graph g = complete_bipartite(side, side);
        auto start = Clock::now();
        bool value = check_mso(g, two_coloring);
        double secs = seconds_since(start);
        return std::make_pair(value, secs);
    };
    auto [v200, t200] = timed(200);
    os << "K_{200,200}: " << std::fixed << std::setprecision(3) << t200 << "s";
    ok &= v200 && t200 < 1.0;
    auto [v1000, t1000] = timed(1000);
    os << ", K_{1000,1000}: " << t1000 << "s";
    ok &= v1000 && t1000 < 10.0;

    // The ground-truth engine must blow its budget already at 40 vertices.
    Graph k2020 = complete_bipartite(20, 20);
    EvalOptions opts;
    opts.budget = 100'000'000;
    bool exhausted = false;
    auto start = Clock::now();
    try {
        eval_naive(k2020, two_coloring, opts);
    } catch (const ResourceError&) {
        exhausted = true;
    }
    os << ", naive@n=40 budget hit: " << (exhausted ? "yes" : "no") << " ("
       << seconds_since(start) << "s)";
    ok &= exhausted;
    detail = os.str();
    return ok;
}

bool criterion5_partition_minimality(std::string& detail) {
    Rng rng(0xACC5);
    uint64_t cases = 0, width_mismatch = 0, bound_violations = 0;
    auto inspect = [&](const Graph& g) {
        ++cases;
        if (nd(g) != oracle_min_partition_width(g)) ++width_mismatch;
        // The cover bound speaks about uncolored graphs (colors split types
        // without touching edges).
        if (!g.directed && g.colors.empty()) {
            int k = vertex_cover(g).size;
            if (nd(g) > (1 << k) + k) ++bound_violations;
        }
    };
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : all_graphs(n)) inspect(g);
    for (int trial = 0; trial < 10000; ++trial) {
        GraphGenOptions go;
        go.min_n = 5;
        go.max_n = 6;
        go.max_colors = trial % 3 == 0 ? 2 : 0;
        go.max_labels = 0;
        go.edge_prob = 0.2 + 0.6 * (trial % 7) / 6.0;
        inspect(random_graph(rng, go));
    }
    std::ostringstream os;
    os << cases << " graphs, " << width_mismatch << " width mismatches, " << bound_violations
       << " cover-bound violations";
    detail = os.str();
    return width_mismatch == 0 && bound_violations == 0 && cases >= 10000;
}

bool criterion6_solvers(std::string& detail) {
    Rng rng(0xACC6);
    uint64_t cases = 0, mismatches = 0;
    auto inspect = [&](const Graph& g) {
        ++cases;
        if (chromatic_number(g) != oracle_chromatic(g)) ++mismatches;
        if (hamiltonian_cycle(g) != oracle_hamiltonian(g)) ++mismatches;
        if (eds_size(g) != oracle_eds(g)) ++mismatches;
        if (eds_size(g) != oracle_min_maximal_matching(g)) ++mismatches;
    };
    inspect(complete_bipartite(2, 3));
    inspect(clique_join_independent(3, 4));
    inspect(complete_graph(5));
    if (hamiltonian_cycle(complete_bipartite(2, 3))) ++mismatches;
    if (hamiltonian_cycle(clique_join_independent(3, 4))) ++mismatches;
    if (chromatic_number(clique_join_independent(3, 4)) != 4) ++mismatches;
    if (eds_size(complete_graph(5)) != 2) ++mismatches;

    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n)) inspect(g);
    for (int trial = 0; trial < 1000; ++trial) {
        GraphGenOptions go;
        go.min_n = 6;
        go.max_n = 7;
        go.max_colors = 0;
        go.max_labels = 0;
        go.edge_prob = 0.15 + 0.7 * (trial % 9) / 8.0;
        inspect(random_graph(rng, go));
    }
    std::ostringstream os;
    os << cases << " graphs, " << mismatches << " mismatches";
    detail = os.str();
    return mismatches == 0 && cases >= 2000;
}

// Canonical form of a CNF under variable permutation, polarity flips, and
// clause/literal reordering; used to deduplicate the exhaustive corpus.
std::string cnf_canonical(int n, const std::vector<std::array<int, 3>>& clauses) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::string best;
    do {
        for (uint32_t flips = 0; flips < (1u << n); ++flips) {
            std::vector<std::array<int, 3>> mapped;
            for (const auto& cl : clauses) {
                std::array<int, 3> out;
                for (int i = 0; i < 3; ++i) {
                    int var = std::abs(cl[i]);
                    int sign = cl[i] > 0 ? 1 : -1;
                    if (flips & (1u << (var - 1))) sign = -sign;
                    out[i] = sign * perm[var - 1];
                }
                std::sort(out.begin(), out.end());
                mapped.push_back(out);
            }
            std::sort(mapped.begin(), mapped.end());
            std::ostringstream os;
            for (const auto& cl : mapped) os << cl[0] << "," << cl[1] << "," << cl[2] << ";";
            std::string enc = os.str();
            if (best.empty() || enc < best) best = enc;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool criterion7_hardness(std::string& detail) {
    // eq formulas grow by a fixed node count per level.
    Term x = Term::var("x"), y = Term::var("y");
    std::vector<int> sizes;
    for (int h = 1; h <= 8; ++h) sizes.push_back(metrics(eq_formula(h, x, y, "A", "B")).size);
    bool linear = true;
    for (size_t i = 1; i + 1 < sizes.size(); ++i)
        linear &= sizes[i + 1] - sizes[i] == sizes[1] - sizes[0];

    // Exhaustive tiny CNF corpus up to literal-pattern symmetry.
    std::set<std::string> seen;
    uint64_t instances = 0, mismatches = 0, metric_violations = 0;
    double worst_seconds = 0;
    bool within_budget = true;
    for (int n = 1; n <= 2; ++n) {
        std::vector<std::array<int, 3>> all_clauses;
        std::vector<int> literals;
        for (int v = 1; v <= n; ++v) {
            literals.push_back(v);
            literals.push_back(-v);
        }
        for (size_t a = 0; a < literals.size(); ++a)
            for (size_t b = a; b < literals.size(); ++b)
                for (size_t c = b; c < literals.size(); ++c)
                    all_clauses.push_back({literals[a], literals[b], literals[c]});

        std::vector<std::vector<std::array<int, 3>>> formulas;
        for (const auto& cl : all_clauses) formulas.push_back({cl});
        for (size_t i = 0; i < all_clauses.size(); ++i)
            for (size_t j = i; j < all_clauses.size(); ++j)
                formulas.push_back({all_clauses[i], all_clauses[j]});

        for (const auto& clauses : formulas) {
            if (!seen.insert(cnf_canonical(n, clauses)).second) continue;
            CnfFormula cnf;
            cnf.variable_count = n;
            for (const auto& cl : clauses) {
                CnfFormula::Clause c;
                for (int i = 0; i < 3; ++i) c.literals[i] = cl[i];
                cnf.clauses.push_back(c);
            }
            GenOptions opts;
            opts.compute_vertex_cover = false;
            HardnessInstance inst = sat_to_directed(cnf, opts);
            if (inst.metadata.sentence_metrics.q_s != 1) ++metric_violations;
            auto start = Clock::now();
            bool value = check_mso(inst.graph, inst.sentence);
            double secs = seconds_since(start);
            worst_seconds = std::max(worst_seconds, secs);
            if (secs > 60.0) within_budget = false;
            if (value != oracle_sat(n, clauses)) ++mismatches;
            ++instances;
        }
    }
    std::ostringstream os;
    os << instances << " instances, " << mismatches << " mismatches, eq sizes "
       << (linear ? "linear" : "NOT linear") << ", worst " << std::fixed << std::setprecision(2)
       << worst_seconds << "s, q_s violations " << metric_violations;
    detail = os.str();
    return linear && mismatches == 0 && metric_violations == 0 && within_budget && instances >= 40;
}

bool criterion8_transformations(std::string& detail) {
    Rng rng(0xACC8);
    uint64_t d2u_ok = 0, d2u_bad = 0;
    int attempts = 0;
    while (d2u_ok + d2u_bad < 50 && attempts < 500) {
        ++attempts;
        bool fo_path = (d2u_ok + d2u_bad) % 2 == 0;
        int n = rand_int(rng, 1, fo_path ? 4 : 3);
        Graph dag = Graph::digraph(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rand_chance(rng, 0.45)) dag.add_edge(v, u);
        VertexSet reds;
        for (int v = 0; v < n; ++v)
            if (rand_chance(rng, 0.5)) reds.push_back(v);
        dag.add_color("red", reds);
        FormulaGenOptions fo;
        fo.max_q_v = 3;
        fo.max_depth = 3;
        FormulaPtr sentence = random_sentence(rng, dag, fo);
        if (!uses_arc_atoms(sentence)) continue;
        HardnessInstance inst;
        inst.stage = Stage::directed;
        inst.graph = dag;
        inst.sentence = sentence;
        GenOptions opts;
        opts.compute_vertex_cover = false;
        opts.fo_path_encoding = fo_path;
        HardnessInstance out = directed_to_undirected(inst, opts);
        EvalOptions eval;
        eval.budget = 200'000'000;
        try {
            bool before = eval_naive(dag, sentence, eval);
            bool after = eval_naive(out.graph, out.sentence, eval);
            if (before == after)
                ++d2u_ok;
            else
                ++d2u_bad;
        } catch (const ResourceError&) {
            continue;
        }
    }

    uint64_t dec_ok = 0, dec_bad = 0;
    for (int trial = 0; trial < 50; ++trial) {
        GraphGenOptions go;
        go.max_n = 5;
        go.max_colors = 2;
        go.max_labels = 1;
        Graph g = random_graph(rng, go);
        FormulaGenOptions fo;
        fo.max_q_v = 2;
        fo.max_q_s = 1;
        FormulaPtr sentence = random_sentence(rng, g, fo);
        HardnessInstance inst;
        inst.stage = Stage::undirected;
        inst.graph = g;
        inst.sentence = sentence;
        HardnessInstance out = decolor(inst);
        if (eval_naive(g, sentence) == eval_naive(out.graph, out.sentence))
            ++dec_ok;
        else
            ++dec_bad;
    }

    uint64_t del_ok = 0, del_bad = 0;
    int del_attempts = 0;
    while (del_ok + del_bad < 50 && del_attempts < 600) {
        ++del_attempts;
        GraphGenOptions go;
        go.min_n = 2;
        go.max_n = 5;
        go.max_colors = 0;
        go.max_labels = 2;
        go.edge_prob = 0.7;
        Graph g = random_graph(rng, go);
        bool has_leaf = false;
        for (int v = 0; v < g.n; ++v) has_leaf |= g.degree(v) == 1;
        if (has_leaf) continue;
        FormulaGenOptions fo;
        fo.max_q_v = 2;
        fo.max_q_s = 1;
        FormulaPtr sentence = random_sentence(rng, g, fo);
        HardnessInstance inst;
        inst.stage = Stage::uncolored;
        inst.graph = g;
        inst.sentence = sentence;
        HardnessInstance out = delabel(inst);
        if (eval_naive(g, sentence) == eval_naive(out.graph, out.sentence))
            ++del_ok;
        else
            ++del_bad;
    }

    std::ostringstream os;
    os << "direction removal " << d2u_ok << "/" << (d2u_ok + d2u_bad) << ", decolor " << dec_ok
       << "/" << (dec_ok + dec_bad) << ", delabel " << del_ok << "/" << (del_ok + del_bad);
    detail = os.str();
    return d2u_ok >= 50 && d2u_bad == 0 && dec_ok == 50 && dec_bad == 0 && del_ok >= 50 &&
           del_bad == 0;
}

bool criterion9_cliquewidth(std::string& detail) {
    Rng rng(0xACC9);
    uint64_t cases = 0, failures = 0;
    auto inspect = [&](const Graph& g) {
        ++cases;
        NeighborhoodPartition p = neighborhood_partition(g);
        CliquewidthScript script = cliquewidth_expression(g, p);
        if (script.used_labels() > nd(g) + 1) ++failures;
        if (canonical_form(replay_cliquewidth(script)) != canonical_form(g)) ++failures;
    };
    for (int n = 0; n <= 4; ++n)
        for (const Graph& g : all_graphs(n)) inspect(g);
    for (int trial = 0; trial < 200; ++trial) {
        GraphGenOptions go;
        go.min_n = 5;
        go.max_n = 8;
        go.max_colors = 0;
        go.max_labels = 0;
        go.edge_prob = 0.2 + 0.6 * (trial % 5) / 4.0;
        inspect(random_graph(rng, go));
    }
    std::ostringstream os;
    os << cases << " graphs, " << failures << " failures";
    detail = os.str();
    return failures == 0 && cases >= 200;
}

}  // namespace

int main() {
    std::vector<CheckStats> fo_stats;
    struct Row {
        const char* name;
        bool passed;
        std::string detail;
        double seconds;
    };
    std::vector<Row> rows;

    auto run = [&](const char* name, auto&& fn) {
        auto start = Clock::now();
        std::string detail;
        bool passed = false;
        try {
            passed = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        rows.push_back({name, passed, detail, seconds_since(start)});
        std::cout << (passed ? "PASS" : "FAIL") << "  " << name << "  (" << std::fixed
                  << std::setprecision(1) << rows.back().seconds << "s)  " << detail << "\n"
                  << std::flush;
    };

    run("1 FO oracle equivalence", [&](std::string& d) { return criterion1_fo_oracle(d, fo_stats); });
    run("2 MSO oracle equivalence", [&](std::string& d) { return criterion2_mso_oracle(d); });
    run("3 FO branch bound", [&](std::string& d) { return criterion3_branch_bound(d, fo_stats); });
    run("4 scaling separation", [&](std::string& d) { return criterion4_scaling(d); });
    run("5 partition minimality", [&](std::string& d) { return criterion5_partition_minimality(d); });
    run("6 solver correctness", [&](std::string& d) { return criterion6_solvers(d); });
    run("7 hardness instance soundness", [&](std::string& d) { return criterion7_hardness(d); });
    run("8 transformation preservation", [&](std::string& d) { return criterion8_transformations(d); });
    run("9 cliquewidth emitter", [&](std::string& d) { return criterion9_cliquewidth(d); });

    int failures = 0;
    for (const Row& row : rows) failures += row.passed ? 0 : 1;
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures;
}
