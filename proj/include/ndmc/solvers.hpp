#pragma once

#include <optional>

#include "ndmc/matching.hpp"
#include "ndmc/quotient.hpp"

namespace ndmc {

/// Arc-multiplicity feasibility problem on the quotient graph: one variable
/// per directed arc along a quotient edge, in [0, max_multiplicity]; each node
/// must see equal in- and out-degree, landing in its visit interval; when
/// `require_connected`, positive-visit nodes must form one connected piece of
/// the positive-arc support (so the multiset of arcs closes into one walk).
struct WalkConstraintSystem {
    struct Arc {
        int from = 0, to = 0;
    };
    int node_count = 0;
    std::vector<Arc> arcs;
    std::vector<int> visit_lo, visit_hi;
    int max_multiplicity = 0;
    bool require_connected = true;
};

using WalkAssignment = std::vector<int>;

/// Exhaustive depth-first search with bound propagation over the arc
/// variables. Returns a satisfying assignment or nullopt. A system with no
/// arcs is satisfiable by the empty assignment iff it has at most one node
/// and that node admits a single trivial visit.
std::optional<WalkAssignment> ilp_feasible(const WalkConstraintSystem& system);

/// The visit-constrained closed-walk system whose feasibility decides whether
/// the expanded graph has a Hamiltonian cycle: independent classes are visited
/// exactly size times, clique classes between 1 and size times.
WalkConstraintSystem hamiltonian_walk_system(const QuotientGraph& q);

/// Exact chromatic number. Independent classes contribute one vertex; all
/// colorings of the quotient are scored by the sum over colors of the largest
/// clique class receiving that color.
int chromatic_number(const Graph& g);

/// Exact Hamiltonian-cycle decision via the quotient walk system.
/// False for fewer than 3 vertices.
bool hamiltonian_cycle(const Graph& g);

/// Exact minimum edge dominating set size (equivalently, minimum maximal
/// matching). Enumerates quotient vertex covers; for each, matches inside the
/// induced cover of g and then across to the rest.
int eds_size(const Graph& g);

}  // namespace ndmc
