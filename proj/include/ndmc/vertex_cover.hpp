#pragma once

#include "ndmc/graph.hpp"

namespace ndmc {

struct VertexCoverResult {
    VertexSet cover;
    int size = 0;
};

/// Exact minimum vertex cover size (undirected input only).
int min_vertex_cover_size(const Graph& g);

/// Exact minimum vertex cover; among minimum covers returns the
/// lexicographically smallest vertex set. Undirected input only.
VertexCoverResult vertex_cover(const Graph& g);

}  // namespace ndmc
