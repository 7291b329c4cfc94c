#include "ndmc/solvers.hpp"

#include <functional>

namespace ndmc {

namespace {

bool support_connected(const WalkConstraintSystem& sys, const WalkAssignment& x) {
    int w = sys.node_count;
    std::vector<int> visits(w, 0);
    std::vector<std::vector<int>> adj(w);
    for (size_t i = 0; i < sys.arcs.size(); ++i) {
        if (x[i] <= 0) continue;
        visits[sys.arcs[i].to] += x[i];
        adj[sys.arcs[i].from].push_back(sys.arcs[i].to);
        adj[sys.arcs[i].to].push_back(sys.arcs[i].from);
    }
    int start = -1;
    for (int v = 0; v < w; ++v)
        if (visits[v] > 0) {
            start = v;
            break;
        }
    if (start < 0) return true;
    std::vector<char> seen(w, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    for (int v = 0; v < w; ++v)
        if (visits[v] > 0 && !seen[v]) return false;
    return true;
}

class WalkSearch {
public:
    explicit WalkSearch(const WalkConstraintSystem& sys) : sys_(sys) {
        int w = sys_.node_count;
        out_sum_.assign(w, 0);
        in_sum_.assign(w, 0);
        out_left_.assign(w, 0);
        in_left_.assign(w, 0);
        for (const auto& a : sys_.arcs) {
            out_left_[a.from] += 1;
            in_left_[a.to] += 1;
        }
        x_.assign(sys_.arcs.size(), 0);
    }

    std::optional<WalkAssignment> run() {
        if (search(0)) return x_;
        return std::nullopt;
    }

private:
    const WalkConstraintSystem& sys_;
    std::vector<int> out_sum_, in_sum_, out_left_, in_left_;
    WalkAssignment x_;

    bool node_viable(int v) const {
        // Remaining arcs can only add; completed sides must already satisfy
        // the bounds and agree with each other.
        if (out_sum_[v] > sys_.visit_hi[v] || in_sum_[v] > sys_.visit_hi[v]) return false;
        long long out_max = out_sum_[v] + static_cast<long long>(out_left_[v]) * sys_.max_multiplicity;
        long long in_max = in_sum_[v] + static_cast<long long>(in_left_[v]) * sys_.max_multiplicity;
        if (out_max < sys_.visit_lo[v] || in_max < sys_.visit_lo[v]) return false;
        if (out_left_[v] == 0 && in_left_[v] == 0 && out_sum_[v] != in_sum_[v]) return false;
        if (out_left_[v] == 0 && in_max < out_sum_[v]) return false;
        if (in_left_[v] == 0 && out_max < in_sum_[v]) return false;
        return true;
    }

    bool search(size_t idx) {
        if (idx == sys_.arcs.size()) {
            for (int v = 0; v < sys_.node_count; ++v) {
                if (out_sum_[v] != in_sum_[v]) return false;
                if (in_sum_[v] < sys_.visit_lo[v] || in_sum_[v] > sys_.visit_hi[v]) return false;
            }
            return !sys_.require_connected || support_connected(sys_, x_);
        }
        const auto& a = sys_.arcs[idx];
        out_left_[a.from] -= 1;
        in_left_[a.to] -= 1;
        for (int val = 0; val <= sys_.max_multiplicity; ++val) {
            x_[idx] = val;
            out_sum_[a.from] += val;
            in_sum_[a.to] += val;
            bool ok = node_viable(a.from) && node_viable(a.to);
            if (ok && search(idx + 1)) return true;
            out_sum_[a.from] -= val;
            in_sum_[a.to] -= val;
            if (out_sum_[a.from] + val > sys_.visit_hi[a.from] ||
                in_sum_[a.to] + val > sys_.visit_hi[a.to])
                break;  // larger values only get worse
        }
        x_[idx] = 0;
        out_left_[a.from] += 1;
        in_left_[a.to] += 1;
        return false;
    }
};

}  // namespace

std::optional<WalkAssignment> ilp_feasible(const WalkConstraintSystem& sys) {
    if (sys.node_count < 0 || static_cast<int>(sys.visit_lo.size()) != sys.node_count ||
        static_cast<int>(sys.visit_hi.size()) != sys.node_count)
        throw InputError("malformed walk constraint system");
    for (const auto& a : sys.arcs)
        if (a.from < 0 || a.from >= sys.node_count || a.to < 0 || a.to >= sys.node_count)
            throw InputError("walk system arc endpoint out of range");

    if (sys.arcs.empty()) {
        // A single node hosts the trivial one-visit closed walk; anything
        // larger cannot be visited at all without arcs.
        bool ok = true;
        for (int v = 0; v < sys.node_count; ++v) {
            int visits = sys.node_count == 1 ? 1 : 0;
            ok &= sys.visit_lo[v] <= visits && visits <= sys.visit_hi[v];
        }
        if (ok) return WalkAssignment{};
        return std::nullopt;
    }
    WalkSearch search(sys);
    return search.run();
}

WalkConstraintSystem hamiltonian_walk_system(const QuotientGraph& q) {
    WalkConstraintSystem sys;
    sys.node_count = q.width();
    int n = 0;
    for (const auto& node : q.nodes) n += node.size;
    sys.max_multiplicity = n;
    for (const auto& node : q.nodes) {
        if (node.kind == ClassKind::independent) {
            sys.visit_lo.push_back(node.size);
            sys.visit_hi.push_back(node.size);
        } else {
            sys.visit_lo.push_back(1);
            sys.visit_hi.push_back(node.size);
        }
    }
    for (int i = 0; i < q.width(); ++i)
        for (int j : q.adj[i]) {
            sys.arcs.push_back({i, j});
        }
    return sys;
}

int chromatic_number(const Graph& g) {
    if (g.directed) throw InputError("chromatic number requires an undirected graph");
    if (g.n == 0) return 0;
    QuotientGraph q = quotient_graph(g, neighborhood_partition(g));
    int w = q.width();
    if (w > 30)
        throw ResourceError("quotient width " + std::to_string(w) +
                            " too large for exact chromatic number");

    // Each color of an optimal coloring touches a set of classes that is
    // independent in the quotient; a clique class needs `size` colors, an
    // independent class one (its members can share). So the chromatic number
    // is the smallest multiset of independent quotient sets covering those
    // demands, and restricting to maximal independent sets loses nothing.
    std::vector<int> demand(w);
    for (int i = 0; i < w; ++i)
        demand[i] = q.nodes[i].kind == ClassKind::clique ? q.nodes[i].size : 1;

    std::vector<uint32_t> adj_mask(w, 0);
    for (int i = 0; i < w; ++i)
        for (int j : q.adj[i]) adj_mask[i] |= 1u << j;

    std::vector<uint32_t> maximal_sets;
    for (uint32_t mask = 1; mask < (1u << w); ++mask) {
        bool independent = true;
        for (int i = 0; i < w && independent; ++i)
            if ((mask & (1u << i)) && (mask & adj_mask[i])) independent = false;
        if (!independent) continue;
        bool maximal = true;
        for (int i = 0; i < w && maximal; ++i)
            if (!(mask & (1u << i)) && !(mask & adj_mask[i])) maximal = false;
        if (maximal) maximal_sets.push_back(mask);
    }

    // Lower bound: some quotient clique must be rainbow, so its total demand
    // is always needed.
    std::function<int(const std::vector<int>&)> clique_bound = [&](const std::vector<int>& d) {
        int best_clique = 0;
        std::function<void(uint32_t, uint32_t, int)> grow = [&](uint32_t members,
                                                                uint32_t candidates, int total) {
            best_clique = std::max(best_clique, total);
            for (int i = 0; i < w; ++i) {
                if (!(candidates & (1u << i))) continue;
                grow(members | (1u << i), candidates & adj_mask[i] & ~((2u << i) - 1),
                     total + d[i]);
            }
        };
        grow(0, (1u << w) - 1, 0);
        return best_clique;
    };

    int best = 0;
    for (int i = 0; i < w; ++i) best += demand[i];  // every class rainbow and disjoint

    std::function<void(std::vector<int>&, int)> search = [&](std::vector<int>& d, int used) {
        int total = 0, max_d = 0, pick = -1;
        uint32_t positive = 0;
        for (int i = 0; i < w; ++i) {
            total += d[i];
            if (d[i] > max_d) {
                max_d = d[i];
                pick = i;
            }
            if (d[i] > 0) positive |= 1u << i;
        }
        if (total == 0) {
            best = std::min(best, used);
            return;
        }
        bool positive_independent = true;
        for (int i = 0; i < w && positive_independent; ++i)
            if ((positive & (1u << i)) && (positive & adj_mask[i])) positive_independent = false;
        if (positive_independent) {
            best = std::min(best, used + max_d);
            return;
        }
        if (used + clique_bound(d) >= best) return;
        for (uint32_t set : maximal_sets) {
            if (!(set & (1u << pick))) continue;
            std::vector<int> next = d;
            for (int i = 0; i < w; ++i)
                if (set & (1u << i)) next[i] = std::max(0, next[i] - 1);
            search(next, used + 1);
        }
    };
    std::vector<int> d = demand;
    search(d, 0);
    return best;
}

bool hamiltonian_cycle(const Graph& g) {
    if (g.directed) throw InputError("hamiltonian cycle requires an undirected graph");
    if (g.n < 3) return false;
    NeighborhoodPartition p = neighborhood_partition(g);
    if (p.width() == 1)
        return p.kinds[0] == ClassKind::clique;  // K_n with n >= 3; edgeless otherwise
    QuotientGraph q = quotient_graph(g, p);
    return ilp_feasible(hamiltonian_walk_system(q)).has_value();
}

int eds_size(const Graph& g) {
    if (g.directed) throw InputError("edge dominating set requires an undirected graph");
    if (g.edge_count() == 0) return 0;
    NeighborhoodPartition p = neighborhood_partition(g);
    QuotientGraph q = quotient_graph(g, p);
    int w = q.width();
    if (w > 30)
        throw ResourceError("quotient width " + std::to_string(w) +
                            " too large for exact edge dominating set");

    VertexSet all_vertices(g.n);
    for (int v = 0; v < g.n; ++v) all_vertices[v] = v;

    int best = g.edge_count();
    for (uint32_t mask = 0; mask < (1u << w); ++mask) {
        // Keep only vertex covers of the quotient.
        bool cover = true;
        for (int i = 0; i < w && cover; ++i)
            for (int j : q.adj[i])
                if (i < j && !(mask & (1u << i)) && !(mask & (1u << j))) {
                    cover = false;
                    break;
                }
        if (!cover) continue;

        // Cover classes fully; cliques outside the cover still need all but
        // one vertex (their internal edges must be dominated).
        VertexSet chosen;
        for (int i = 0; i < w; ++i) {
            const VertexSet& cls = p.classes[i];
            if (mask & (1u << i)) {
                for (int v : cls) vs_insert(chosen, v);
            } else if (q.nodes[i].kind == ClassKind::clique) {
                for (size_t k = 0; k + 1 < cls.size(); ++k) vs_insert(chosen, cls[k]);
            }
        }

        Matching m1 = max_matching(g, chosen);
        VertexSet matched = m1.covered();
        VertexSet unmatched = vs_subtract(chosen, matched);
        VertexSet outside = vs_subtract(all_vertices, chosen);

        // Bipartite layer: unmatched cover vertices against the rest.
        Graph bridge = Graph::undirected(g.n);
        for (int u : unmatched)
            for (int v : g.out[u])
                if (vs_contains(outside, v)) bridge.add_edge(u, v);
        Matching m2 = max_matching(bridge, vs_union(unmatched, outside));

        best = std::min(best, m1.size() + m2.size());
    }
    return best;
}

}  // namespace ndmc
