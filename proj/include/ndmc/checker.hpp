#pragma once

#include "ndmc/naive.hpp"
#include "ndmc/partition.hpp"

namespace ndmc {

struct CheckerOptions {
    uint64_t budget = 0;               ///< node-visit limit, 0 = unlimited
    bool missing_symbols_false = false;
    bool memoize = true;               ///< cache set-variable-free subformula results
    /// Size-candidate bound uses the total set-quantifier count instead of the
    /// count remaining below the current quantifier.
    bool conservative_set_bound = false;
};

struct CheckStats {
    uint64_t visits = 0;
    /// Representative trials at innermost quantifiers; the quantity bounded by
    /// prod_{i<q}(w+l+i) for FO sentences.
    uint64_t branches = 0;
    uint64_t set_choices = 0;  ///< sample sets tried across set quantifiers
    int quantifiers = 0;       ///< vertex quantifier count of the normalized sentence
    int width = 0;             ///< base neighborhood partition width
    int labels = 0;
};

/// Evaluation state at one point of the quantifier recursion: the partition
/// refined by every set chosen so far, plus the vertices bound (pinned) so far.
struct CheckerState {
    const Graph* graph = nullptr;
    NeighborhoodPartition partition;
    std::vector<int> bound_vertices;  ///< in binding order
};

/// Vertices worth trying for the next vertex quantifier: every labeled vertex,
/// every bound vertex, then the smallest not-pinned, not-labeled member of
/// each class that still has one. At most width + labels + bound.
std::vector<int> representatives(const CheckerState& state);

/// Intersection sizes that must be tried for a class of `class_size`
/// interchangeable vertices when the tail of the formula can distinguish at
/// most `bound` of them: every size within `bound` of either end. Sizes in
/// between are all equivalent to `bound` itself, which the list includes.
std::vector<int> mso_size_candidates(int class_size, int bound);

/// Decides an FO sentence by trying one representative per vertex type instead
/// of every vertex. Agrees with eval_naive; explores at most
/// prod_{i<q}(w+l+i) innermost branches. Rejects sentences with set
/// quantifiers (use check_mso).
bool check_fo(const Graph& g, const FormulaPtr& f, const CheckerOptions& opts = {},
              CheckStats* stats = nullptr);

/// Decides an MSO sentence. Set quantifiers fix labeled/bound vertices
/// individually and otherwise only choose how many vertices of each type the
/// set takes, materializing one canonical sample per size profile; the
/// partition is refined with each chosen set. Vertex quantifiers use
/// `representatives`. Universal quantifiers run the same enumeration as
/// conjunctions. Agrees with eval_naive.
bool check_mso(const Graph& g, const FormulaPtr& f, const CheckerOptions& opts = {},
               CheckStats* stats = nullptr);

}  // namespace ndmc
