#include "ndmc/quotient.hpp"

namespace ndmc {

QuotientGraph quotient_graph(const Graph& g, const NeighborhoodPartition& p) {
    if (g.directed) throw InputError("quotient graph requires an undirected graph");
    validate_partition(g, p);
    QuotientGraph q;
    q.nodes.resize(p.width());
    q.adj.resize(p.width());
    for (int i = 0; i < p.width(); ++i) {
        q.nodes[i].kind = p.kinds[i];
        q.nodes[i].size = static_cast<int>(p.classes[i].size());
    }
    for (int i = 0; i < p.width(); ++i)
        for (int j = i + 1; j < p.width(); ++j)
            if (g.has_arc(p.classes[i].front(), p.classes[j].front())) {
                vs_insert(q.adj[i], j);
                vs_insert(q.adj[j], i);
            }
    return q;
}

}  // namespace ndmc
