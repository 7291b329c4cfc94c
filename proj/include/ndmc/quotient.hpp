#pragma once

#include "ndmc/partition.hpp"

namespace ndmc {

struct QuotientNode {
    ClassKind kind = ClassKind::independent;
    int size = 0;  ///< vertices in the underlying class
};

/// One node per partition class; an edge where the underlying classes carry
/// every possible edge between them. Node order matches class order.
struct QuotientGraph {
    std::vector<QuotientNode> nodes;
    std::vector<VertexSet> adj;

    int width() const { return static_cast<int>(nodes.size()); }
    bool edge(int i, int j) const { return vs_contains(adj[i], j); }
};

QuotientGraph quotient_graph(const Graph& g, const NeighborhoodPartition& p);

}  // namespace ndmc
