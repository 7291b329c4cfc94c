#include "ndmc/vertex_cover.hpp"

#include <numeric>

namespace ndmc {

namespace {

// Branch-and-bound vertex cover decision: can the edges of `g`, minus those
// covered by `taken`, be covered with at most `budget` vertices, none of which
// is marked excluded? Degree-1 reduction plus a greedy matching lower bound
// keep the tree small at the scales this tool runs at.
class VcSearch {
public:
    explicit VcSearch(const Graph& g) : g_(g) {}

    // Feasibility with a forced-in prefix and a set of excluded vertices.
    bool feasible(const VertexSet& forced_in, const std::vector<char>& excluded, int budget) {
        std::vector<char> in_cover(g_.n, 0);
        for (int v : forced_in) in_cover[v] = 1;
        return solve(std::move(in_cover), excluded, budget);
    }

    // Minimum cover size, seeded with a greedy upper bound.
    int minimum() {
        int lo = 0, hi = greedy_upper_bound();
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            std::vector<char> none(g_.n, 0);
            if (feasible({}, none, mid))
                hi = mid;
            else
                lo = mid + 1;
        }
        return lo;
    }

private:
    const Graph& g_;

    int greedy_upper_bound() {
        std::vector<char> covered(g_.n, 0);
        int count = 0;
        while (true) {
            int best = -1, best_deg = 0;
            for (int v = 0; v < g_.n; ++v) {
                if (covered[v]) continue;
                int d = 0;
                for (int u : g_.out[v])
                    if (!covered[u]) ++d;
                if (d > best_deg) {
                    best_deg = d;
                    best = v;
                }
            }
            if (best < 0) return count;
            covered[best] = 1;
            ++count;
        }
    }

    bool edge_uncovered(const std::vector<char>& in_cover, int u, int v) {
        return !in_cover[u] && !in_cover[v];
    }

    bool solve(std::vector<char> in_cover, const std::vector<char>& excluded, int budget) {
        // Reductions to fixpoint: excluded endpoints force neighbors; degree-1
        // vertices let us take the neighbor.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int u = 0; u < g_.n && budget >= 0; ++u) {
                if (in_cover[u]) continue;
                int live_deg = 0, last = -1;
                for (int v : g_.out[u])
                    if (edge_uncovered(in_cover, u, v)) {
                        ++live_deg;
                        last = v;
                    }
                if (live_deg == 0) continue;
                if (excluded[u]) {
                    // All live neighbors of an excluded vertex are forced.
                    for (int v : g_.out[u])
                        if (edge_uncovered(in_cover, u, v)) {
                            if (excluded[v]) return false;
                            in_cover[v] = 1;
                            --budget;
                        }
                    changed = true;
                } else if (live_deg == 1) {
                    if (excluded[last]) {
                        in_cover[u] = 1;
                    } else {
                        in_cover[last] = 1;
                    }
                    --budget;
                    changed = true;
                }
            }
        }
        if (budget < 0) return false;

        // Collect live edges once; done if none remain.
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < g_.n; ++u)
            for (int v : g_.out[u])
                if (u < v && edge_uncovered(in_cover, u, v)) edges.emplace_back(u, v);
        if (edges.empty()) return true;

        // Greedy matching lower bound.
        std::vector<char> matched(g_.n, 0);
        int lb = 0;
        for (auto [u, v] : edges)
            if (!matched[u] && !matched[v]) {
                matched[u] = matched[v] = 1;
                ++lb;
            }
        if (lb > budget) return false;

        // Branch on a max-degree endpoint.
        std::vector<int> deg(g_.n, 0);
        for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        int pick = -1;
        for (int v = 0; v < g_.n; ++v)
            if (deg[v] > 0 && (pick < 0 || deg[v] > deg[pick])) pick = v;

        if (!excluded[pick]) {
            auto with_pick = in_cover;
            with_pick[pick] = 1;
            if (solve(std::move(with_pick), excluded, budget - 1)) return true;
        }
        // Otherwise every live neighbor of pick goes in.
        auto with_nbrs = in_cover;
        int cost = 0;
        bool ok = true;
        for (int v : g_.out[pick])
            if (edge_uncovered(in_cover, pick, v)) {
                if (excluded[v]) {
                    ok = false;
                    break;
                }
                with_nbrs[v] = 1;
                ++cost;
            }
        if (ok && cost <= budget)
            return solve(std::move(with_nbrs), excluded, budget - cost);
        return false;
    }
};

}  // namespace

int min_vertex_cover_size(const Graph& g) {
    if (g.directed) throw InputError("vertex cover requires an undirected graph");
    if (g.edge_count() == 0) return 0;
    VcSearch search(g);
    return search.minimum();
}

VertexCoverResult vertex_cover(const Graph& g) {
    int k = min_vertex_cover_size(g);
    VcSearch search(g);

    // Lexicographically smallest k-cover: grow the set in increasing vertex
    // order, keeping each prefix extendable using only larger vertices.
    VertexSet chosen;
    std::vector<char> excluded(g.n, 0);
    int next = 0;
    while (static_cast<int>(chosen.size()) < k) {
        bool advanced = false;
        for (int v = next; v < g.n; ++v) {
            VertexSet candidate = chosen;
            candidate.push_back(v);
            std::vector<char> excl = excluded;
            // Vertices between the previous pick and v can no longer be used.
            for (int u = next; u < v; ++u) excl[u] = 1;
            if (search.feasible(candidate, excl, k - static_cast<int>(candidate.size()))) {
                chosen = std::move(candidate);
                excluded = std::move(excl);
                next = v + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw InputError("internal error: vertex cover search failed");
    }
    return {chosen, k};
}

}  // namespace ndmc
