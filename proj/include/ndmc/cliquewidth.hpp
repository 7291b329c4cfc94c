#pragma once

#include <memory>

#include "ndmc/partition.hpp"

namespace ndmc {

struct CliquewidthScript;

/// One construction step. `union_with` holds a sub-script built independently
/// and merged as a disjoint union; the other operations use integer labels.
struct CwOp {
    enum class Kind { introduce, join, rename, union_with };
    Kind kind = Kind::introduce;
    int a = 0;  ///< introduce: label; join: first label; rename: from
    int b = 0;  ///< join: second label; rename: to
    std::shared_ptr<CliquewidthScript> sub;
};

/// A cliquewidth construction script. `label_budget` is the number of labels
/// the emitter was allowed (partition width + 1); `used_labels` reports how
/// many distinct labels actually occur.
struct CliquewidthScript {
    std::vector<CwOp> ops;
    int label_budget = 0;

    int used_labels() const;
};

/// Emits a script that rebuilds g (up to isomorphism) from a neighborhood
/// partition, using at most width+1 labels: label i holds class i, the spare
/// label threads new clique vertices through join/rename.
CliquewidthScript cliquewidth_expression(const Graph& g, const NeighborhoodPartition& p);

/// Replays a script into a concrete graph. Vertices are numbered in
/// introduction order (left sub-script first for unions).
Graph replay_cliquewidth(const CliquewidthScript& script);

}  // namespace ndmc
