#pragma once

#include "ndmc/graph.hpp"

namespace ndmc {

enum class ClassKind { clique, independent };

/// A partition of V into classes of pairwise same-type vertices.
///
/// Classes are disjoint, nonempty, cover V, and are ordered by their smallest
/// member so downstream enumeration is reproducible. Singleton classes are
/// canonically `independent`. For undirected graphs every class induces a
/// clique or an independent set and any two classes carry either all possible
/// edges or none. Kinds are only meaningful for undirected graphs; for
/// digraphs a class with any internal arc is marked `clique`.
struct NeighborhoodPartition {
    std::vector<VertexSet> classes;
    std::vector<ClassKind> kinds;

    int width() const { return static_cast<int>(classes.size()); }
};

/// True iff u and v belong to exactly the same colors and have equal
/// neighborhoods once the pair itself is removed (both directions on digraphs).
bool same_type(const Graph& g, int u, int v);

/// Minimum-width neighborhood partition. Deterministic: vertices are processed
/// in index order and join the first compatible class, else open a new one.
NeighborhoodPartition neighborhood_partition(const Graph& g);

/// Width of `neighborhood_partition`.
int nd(const Graph& g);

/// The width <= 2^k + k partition induced by a vertex cover: one singleton per
/// cover vertex, remaining vertices grouped by their cover neighborhood (and
/// color membership, so the result stays type-valid on colored graphs).
NeighborhoodPartition partition_from_vertex_cover(const Graph& g, const VertexSet& cover);

/// Splits every class into (class & s, class \ s), dropping empty parts.
NeighborhoodPartition refine_with_set(const NeighborhoodPartition& p, const VertexSet& s);

/// Checks partition structure against g: disjoint nonempty classes covering V,
/// kinds matching the induced subgraphs, all-or-none edges between classes.
/// Throws InputError on violation.
void validate_partition(const Graph& g, const NeighborhoodPartition& p);

/// Kind for one class of vertices of g, applying the singleton convention.
ClassKind classify(const Graph& g, const VertexSet& members);

/// Shared refinement helper for plain class lists (no kind bookkeeping).
std::vector<VertexSet> split_classes(const std::vector<VertexSet>& classes, const VertexSet& s);

}  // namespace ndmc
