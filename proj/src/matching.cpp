#include "ndmc/matching.hpp"

#include <queue>

namespace ndmc {

VertexSet Matching::covered() const {
    VertexSet out;
    for (auto [u, v] : edges) {
        vs_insert(out, u);
        vs_insert(out, v);
    }
    return out;
}

namespace {

// Standard blossom-contraction maximum matching on a compact adjacency list.
class Blossom {
public:
    explicit Blossom(std::vector<std::vector<int>> adj)
        : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())),
          match_(n_, -1), parent_(n_, -1), base_(n_, 0) {}

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0) try_augment(v);
        return match_;
    }

private:
    std::vector<std::vector<int>> adj_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;

    int lowest_common_ancestor(int a, int b) {
        std::vector<char> visited(n_, 0);
        while (true) {
            a = base_[a];
            visited[a] = 1;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (visited[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        used_.assign(n_, 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int v = 0; v < n_; ++v) base_[v] = v;
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    int cur_base = lowest_common_ancestor(v, to);
                    blossom_.assign(n_, 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    void try_augment(int root) {
        int v = find_path(root);
        if (v < 0) return;
        while (v >= 0) {
            int pv = parent_[v], ppv = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = ppv;
        }
    }
};

}  // namespace

Matching max_matching(const Graph& g, const VertexSet& subset) {
    if (g.directed) throw InputError("matching requires an undirected graph");
    for (int v : subset) g.check_vertex(v);

    std::vector<int> id(g.n, -1);
    for (size_t i = 0; i < subset.size(); ++i) id[subset[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(subset.size());
    for (size_t i = 0; i < subset.size(); ++i)
        for (int u : g.out[subset[i]])
            if (id[u] >= 0) adj[i].push_back(id[u]);

    Blossom solver(std::move(adj));
    std::vector<int> match = solver.solve();
    Matching out;
    for (size_t i = 0; i < subset.size(); ++i) {
        int j = match[i];
        if (j >= 0 && static_cast<int>(i) < j)
            out.edges.emplace_back(subset[i], subset[j]);
    }
    return out;
}

}  // namespace ndmc
