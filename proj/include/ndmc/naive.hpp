#pragma once

#include <map>

#include "ndmc/graph.hpp"
#include "ndmc/logic.hpp"

namespace ndmc {

/// Variable bindings for evaluation. Bindings extend the graph with transient
/// labels/colors; the graph itself is never mutated.
struct Environment {
    std::map<std::string, int> vertex;
    std::map<std::string, VertexSet> sets;
};

struct EvalOptions {
    /// Node-visit limit; 0 means unlimited. Exceeding it raises ResourceError.
    uint64_t budget = 0;
    /// When set, a sentence mentioning a label or color absent from the graph
    /// evaluates to false instead of raising InputError.
    bool missing_symbols_false = false;
};

struct EvalStats {
    uint64_t visits = 0;
};

/// Checks a sentence against a graph: closedness, E/D atoms matching graph
/// directedness, and (unless the policy says otherwise) that every mentioned
/// color and label exists. Returns false when the missing-symbol policy turned
/// a missing name into constant falsity; true when evaluation should proceed.
bool check_well_formed(const Graph& g, const FormulaPtr& f, const EvalOptions& opts);

/// Brute-force evaluation: vertex quantifiers scan all n vertices, set
/// quantifiers all 2^n subsets (by cardinality, then lexicographically),
/// with short-circuiting. Exact but exponential; the oracle for everything.
bool eval_naive(const Graph& g, const FormulaPtr& f, const EvalOptions& opts = {},
                EvalStats* stats = nullptr);

}  // namespace ndmc
