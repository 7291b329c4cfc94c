#pragma once

#include <map>
#include <string>
#include <vector>

#include "ndmc/common.hpp"

namespace ndmc {

/// A finite colored, labeled graph or digraph.
///
/// Colors map a name to an arbitrary vertex set (sets may overlap); labels map
/// a name to a single vertex (names are unique, vertices may carry several
/// labels). Adjacency never contains self-loops, and undirected graphs keep it
/// symmetric. All values are immutable once built; operations on them are pure.
struct Graph {
    bool directed = false;
    int n = 0;
    std::vector<VertexSet> out;  ///< out-neighbors, sorted; == neighbors when undirected
    std::vector<VertexSet> in;   ///< in-neighbors, sorted; mirrors `out` when undirected
    std::map<std::string, VertexSet> colors;
    std::map<std::string, int> labels;

    static Graph undirected(int n);
    static Graph digraph(int n);

    /// Adds an edge (both directions when undirected). Rejects self-loops and
    /// out-of-range endpoints. Adding an existing edge is a no-op.
    void add_edge(int u, int v);

    void add_color(const std::string& name, VertexSet vertices);
    void add_label(const std::string& name, int vertex);

    bool has_arc(int u, int v) const;
    int degree(int v) const;  ///< undirected degree; for digraphs in+out
    int edge_count() const;

    void check_vertex(int v) const;

    /// The same graph with arc directions dropped (identity on undirected input).
    Graph underlying_undirected() const;
};

/// Reads the text format: header `graph <n>` or `digraph <n>`, then lines
/// `e <u> <v>`, `c <name> <v...>`, `l <name> <v>`. `#` starts a comment.
Graph parse_graph(const std::string& text);

std::string render_graph(const Graph& g);

// Small builders used throughout the tool and tests.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph edgeless_graph(int n);
/// Complete join of a clique on `clique` vertices with an independent set.
Graph clique_join_independent(int clique, int independent);

}  // namespace ndmc
