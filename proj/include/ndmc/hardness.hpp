#pragma once

#include "ndmc/graph.hpp"
#include "ndmc/logic.hpp"

namespace ndmc {

/// tow(0)=0, tow(h+1)=2^tow(h). Throws std::overflow_error for h >= 6.
uint64_t tow(int h);

/// Least h with tow(h) >= n (log-star). Requires n >= 1.
int log_star(uint64_t n);

/// The number-encoding DAG on vertices 0..k: vertex i has an arc to vertex j
/// exactly when bit j of i is set. Vertex i "means" the number i.
Graph number_encoding_dag(int k);

/// Linear-size formula asserting that the numbers encoded by the C1
/// out-neighborhood of x and the C2 out-neighborhood of y agree, reliable for
/// numbers up to tow(h). Size grows by a constant per level; eq_0 is true.
FormulaPtr eq_formula(int h, const Term& x, const Term& y, const std::string& c1,
                      const std::string& c2);

struct CnfFormula {
    int variable_count = 0;
    struct Clause {
        int literals[3] = {0, 0, 0};  ///< DIMACS convention: +v / -v
    };
    std::vector<Clause> clauses;
};

/// DIMACS CNF reader; clauses must have exactly three literals (duplicates
/// allowed). Rejects other widths and out-of-range variables.
CnfFormula parse_dimacs(const std::string& text);
std::string render_dimacs(const CnfFormula& cnf);

enum class Stage { directed, undirected, uncolored, unlabeled };
std::string stage_name(Stage s);

struct InstanceMetadata {
    int vertex_cover_size = -1;  ///< of the underlying undirected graph; -1 = not computed
    SentenceMetrics sentence_metrics;
    int bit_width = 0;  ///< bits used for variable indices
    std::vector<int> levels;  ///< longest-path levels, filled by the undirected stage
};

struct HardnessInstance {
    Graph graph;
    FormulaPtr sentence;
    Stage stage = Stage::directed;
    InstanceMetadata metadata;
};

struct GenOptions {
    /// Encode the path-membership helper with first-order variables instead of
    /// set quantifiers when removing arc directions.
    bool fo_path_encoding = false;
    /// Skip the exact vertex-cover measurement (it dominates generation time
    /// on larger instances).
    bool compute_vertex_cover = true;
};

/// Colored digraph plus a one-set-quantifier sentence that holds iff the CNF
/// is satisfiable. Colors N1..N6 hold six number-encoding DAGs (positive and
/// negative occurrence slots for the three literal positions), V1 the
/// variable vertices, M the clause vertices.
HardnessInstance sat_to_directed(const CnfFormula& cnf, const GenOptions& opts = {});

/// Removes arc directions: vertices gain spokes into a fresh path colored P
/// (label l_s marks its end) recording longest-path levels, and D(x,y) atoms
/// become E(x,y) plus a level comparison via projected path segments.
/// Quantifiers of the incoming sentence are restricted to non-path vertices,
/// which keeps truth intact for arbitrary sentences. Input must be a DAG.
HardnessInstance directed_to_undirected(const HardnessInstance& inst,
                                        const GenOptions& opts = {});

/// Replaces each color class by a labeled apex vertex adjacent to the class;
/// membership atoms become adjacency tests against the apex. Quantifiers of
/// the incoming sentence additionally avoid the apexes.
HardnessInstance decolor(const HardnessInstance& inst);

/// Removes labels: the i-th labeled vertex (label-name order) receives i
/// pendant leaves, and the sentence pins fresh variables to "the vertex with
/// exactly i pendant leaves". Requires the graph to have no leaves already.
HardnessInstance delabel(const HardnessInstance& inst);

/// First-order variant over the directed-stage graph: true iff the CNF is
/// satisfiable by setting exactly `weight` variables true. The set quantifier
/// becomes `weight` pairwise-distinct variable-vertex choices.
FormulaPtr weighted_variant(const CnfFormula& cnf, int weight);

}  // namespace ndmc
