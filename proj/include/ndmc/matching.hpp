#pragma once

#include "ndmc/graph.hpp"

namespace ndmc {

struct Matching {
    std::vector<std::pair<int, int>> edges;  ///< vertex-disjoint graph edges

    int size() const { return static_cast<int>(edges.size()); }
    VertexSet covered() const;
};

/// Maximum matching of the subgraph induced by `subset` (augmenting paths with
/// blossom contraction, exact on general graphs). Undirected input only.
Matching max_matching(const Graph& g, const VertexSet& subset);

}  // namespace ndmc
