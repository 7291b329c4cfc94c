#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <random>

#include "ndmc/graph.hpp"
#include "ndmc/logic.hpp"
#include "ndmc/partition.hpp"

namespace ndmc::test {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool rand_chance(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// ---------------------------------------------------------------------------
// Random structures

struct GraphGenOptions {
    int min_n = 1;
    int max_n = 5;
    bool directed = false;
    double edge_prob = 0.5;
    int max_colors = 2;
    int max_labels = 2;
};

inline Graph random_graph(Rng& rng, const GraphGenOptions& o) {
    int n = rand_int(rng, o.min_n, o.max_n);
    Graph g = o.directed ? Graph::digraph(n) : Graph::undirected(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || (!o.directed && u > v)) continue;
            if (rand_chance(rng, o.edge_prob)) g.add_edge(u, v);
        }
    int colors = rand_int(rng, 0, o.max_colors);
    for (int c = 0; c < colors; ++c) {
        VertexSet members;
        for (int v = 0; v < n; ++v)
            if (rand_chance(rng, 0.5)) members.push_back(v);
        g.add_color("c" + std::to_string(c), members);
    }
    if (n > 0) {
        int labels = rand_int(rng, 0, o.max_labels);
        for (int l = 0; l < labels; ++l) g.add_label("l" + std::to_string(l), rand_int(rng, 0, n - 1));
    }
    return g;
}

struct FormulaGenOptions {
    int max_depth = 3;     // quantifier nesting
    int max_q_v = 3;
    int max_q_s = 0;
    double atom_prob = 0.4;
};

// Random closed formula compatible with g (colors/labels drawn from it,
// E vs D matching its directedness).
inline FormulaPtr random_sentence(Rng& rng, const Graph& g, const FormulaGenOptions& o) {
    std::vector<std::string> v_scope, s_scope;
    int q_v_left = o.max_q_v, q_s_left = o.max_q_s;
    int counter = 0;

    std::function<Term()> term = [&]() -> Term {
        bool label = !g.labels.empty() && (v_scope.empty() || rand_chance(rng, 0.25));
        if (label) {
            auto it = g.labels.begin();
            std::advance(it, rand_int(rng, 0, static_cast<int>(g.labels.size()) - 1));
            return Term::label(it->first);
        }
        return Term::var(v_scope[rand_int(rng, 0, static_cast<int>(v_scope.size()) - 1)]);
    };

    std::function<FormulaPtr()> atom = [&]() -> FormulaPtr {
        for (int attempt = 0; attempt < 8; ++attempt) {
            switch (rand_int(rng, 0, 4)) {
                case 0:
                    if (v_scope.empty() && g.labels.empty()) continue;
                    return g.directed ? f::arc(term(), term()) : f::edge(term(), term());
                case 1:
                    if (v_scope.empty() && g.labels.empty()) continue;
                    return f::eq(term(), term());
                case 2: {
                    if ((v_scope.empty() && g.labels.empty()) || g.colors.empty()) continue;
                    auto it = g.colors.begin();
                    std::advance(it, rand_int(rng, 0, static_cast<int>(g.colors.size()) - 1));
                    return f::in_color(term(), it->first);
                }
                case 3: {
                    if ((v_scope.empty() && g.labels.empty()) || s_scope.empty()) continue;
                    return f::in_set(term(),
                                     s_scope[rand_int(rng, 0, static_cast<int>(s_scope.size()) - 1)]);
                }
                default:
                    return f::truth(rand_chance(rng, 0.5));
            }
        }
        return f::truth(rand_chance(rng, 0.5));
    };

    int budget = 40;
    std::function<FormulaPtr(int)> build = [&](int depth) -> FormulaPtr {
        --budget;
        bool want_atom = budget <= 0 || depth >= o.max_depth ||
                         (depth > 0 && rand_chance(rng, o.atom_prob));
        if (want_atom) return atom();
        int choice = rand_int(rng, 0, 6);
        if (choice <= 2 || (q_v_left == 0 && q_s_left == 0 && choice >= 5)) {
            switch (rand_int(rng, 0, 4)) {
                case 0:
                    return f::not_(build(depth));
                case 1:
                    return f::and_(build(depth), build(depth));
                case 2:
                    return f::or_(build(depth), build(depth));
                case 3:
                    return f::implies(build(depth), build(depth));
                default:
                    return f::iff(build(depth), build(depth));
            }
        }
        bool set_q = q_s_left > 0 && (q_v_left == 0 || rand_chance(rng, 0.4));
        if (set_q) {
            --q_s_left;
            std::string var = "X" + std::to_string(counter++);
            s_scope.push_back(var);
            FormulaPtr body = build(depth + 1);
            s_scope.pop_back();
            return rand_chance(rng, 0.5) ? f::exists_s(var, body) : f::forall_s(var, body);
        }
        if (q_v_left == 0) return atom();
        --q_v_left;
        std::string var = "x" + std::to_string(counter++);
        v_scope.push_back(var);
        FormulaPtr body = build(depth + 1);
        v_scope.pop_back();
        return rand_chance(rng, 0.5) ? f::exists_v(var, body) : f::forall_v(var, body);
    };

    return build(0);
}

// ---------------------------------------------------------------------------
// Independent oracles (deliberately separate code paths from the library)

// Same-type test straight from the definition, via adjacency matrix lookups.
inline bool oracle_same_type(const Graph& g, int u, int v) {
    if (u == v) return true;
    for (const auto& [name, members] : g.colors)
        if (vs_contains(members, u) != vs_contains(members, v)) return false;
    for (int w = 0; w < g.n; ++w) {
        if (w == u || w == v) continue;
        if (g.has_arc(u, w) != g.has_arc(v, w)) return false;
        if (g.has_arc(w, u) != g.has_arc(w, v)) return false;
    }
    return true;
}

// Minimum width over all partitions of V into same-type classes, by
// exhausting set partitions (restricted growth strings).
inline int oracle_min_partition_width(const Graph& g) {
    if (g.n == 0) return 0;
    std::vector<std::vector<char>> compatible(g.n, std::vector<char>(g.n));
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v) compatible[u][v] = oracle_same_type(g, u, v);
    int best = g.n;
    std::vector<int> block(g.n, 0);
    std::function<void(int, int)> go = [&](int idx, int blocks) {
        if (blocks >= best) return;
        if (idx == g.n) {
            best = std::min(best, blocks);
            return;
        }
        for (int b = 0; b <= blocks && b < g.n; ++b) {
            bool ok = true;
            for (int prev = 0; prev < idx && ok; ++prev)
                if (block[prev] == b && !compatible[prev][idx]) ok = false;
            if (!ok) continue;
            block[idx] = b;
            go(idx + 1, std::max(blocks, b + 1));
        }
    };
    go(0, 0);
    return best;
}

inline int oracle_vertex_cover_size(const Graph& g) {
    int best = g.n;
    for (uint32_t mask = 0; mask < (1u << g.n); ++mask) {
        bool covers = true;
        for (int u = 0; u < g.n && covers; ++u)
            for (int v : g.out[u])
                if (u < v && !(mask & (1u << u)) && !(mask & (1u << v))) {
                    covers = false;
                    break;
                }
        if (covers) best = std::min(best, __builtin_popcount(mask));
    }
    return best;
}

inline bool oracle_hamiltonian(const Graph& g) {
    if (g.n < 3) return false;
    std::vector<int> perm(g.n - 1);
    for (int i = 0; i < g.n - 1; ++i) perm[i] = i + 1;
    do {
        bool ok = g.has_arc(0, perm.front()) && g.has_arc(perm.back(), 0);
        for (size_t i = 0; i + 1 < perm.size() && ok; ++i)
            ok = g.has_arc(perm[i], perm[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline int oracle_chromatic(const Graph& g) {
    if (g.n == 0) return 0;
    for (int k = 1; k <= g.n; ++k) {
        std::vector<int> color(g.n, -1);
        std::function<bool(int)> go = [&](int v) -> bool {
            if (v == g.n) return true;
            for (int c = 0; c < k; ++c) {
                bool ok = true;
                for (int u : g.out[v])
                    if (u < v && color[u] == c) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                color[v] = c;
                if (go(v + 1)) return true;
                color[v] = -1;
            }
            return false;
        };
        if (go(0)) return k;
    }
    return g.n;
}

inline std::vector<std::pair<int, int>> graph_edges(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.out[u])
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

// Minimum edge dominating set via subset enumeration by increasing size.
inline int oracle_eds(const Graph& g) {
    auto edges = graph_edges(g);
    int m = static_cast<int>(edges.size());
    if (m == 0) return 0;
    for (int k = 1; k <= m; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<char> touched(g.n, 0);
            for (int i : idx) {
                touched[edges[i].first] = 1;
                touched[edges[i].second] = 1;
            }
            bool dominates = true;
            for (const auto& [u, v] : edges)
                if (!touched[u] && !touched[v]) {
                    dominates = false;
                    break;
                }
            if (dominates) return k;
            int i = k - 1;
            while (i >= 0 && idx[i] == m - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return m;
}

// Minimum maximal matching size, same enumeration with a matching filter.
inline int oracle_min_maximal_matching(const Graph& g) {
    auto edges = graph_edges(g);
    int m = static_cast<int>(edges.size());
    if (m == 0) return 0;
    for (int k = 1; k <= m; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<char> touched(g.n, 0);
            bool matching = true;
            for (int i : idx) {
                auto [u, v] = edges[i];
                if (touched[u] || touched[v]) {
                    matching = false;
                    break;
                }
                touched[u] = touched[v] = 1;
            }
            if (matching) {
                bool maximal = true;
                for (const auto& [u, v] : edges)
                    if (!touched[u] && !touched[v]) {
                        maximal = false;
                        break;
                    }
                if (maximal) return k;
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == m - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return m;
}

inline int oracle_max_matching(const Graph& g, const VertexSet& subset) {
    auto all = graph_edges(g);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : all)
        if (vs_contains(subset, u) && vs_contains(subset, v)) edges.emplace_back(u, v);
    int best = 0;
    std::function<void(size_t, std::vector<char>&, int)> go = [&](size_t i,
                                                                  std::vector<char>& used, int size) {
        best = std::max(best, size);
        if (i == edges.size()) return;
        go(i + 1, used, size);
        auto [u, v] = edges[i];
        if (!used[u] && !used[v]) {
            used[u] = used[v] = 1;
            go(i + 1, used, size + 1);
            used[u] = used[v] = 0;
        }
    };
    std::vector<char> used(g.n, 0);
    go(0, used, 0);
    return best;
}

// Exhaustive SAT check.
struct SimpleCnf {
    int variables = 0;
    std::vector<std::array<int, 3>> clauses;
};

inline bool oracle_sat(int variables, const std::vector<std::array<int, 3>>& clauses) {
    for (uint32_t mask = 0; mask < (1u << variables); ++mask) {
        bool ok = true;
        for (const auto& cl : clauses) {
            bool clause_ok = false;
            for (int lit : cl) {
                int var = std::abs(lit) - 1;
                bool val = mask & (1u << var);
                if ((lit > 0) == val) {
                    clause_ok = true;
                    break;
                }
            }
            if (!clause_ok) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Canonical forms for small-n isomorphism checks

inline uint64_t adjacency_bits(const Graph& g, const std::vector<int>& perm) {
    uint64_t bits = 0;
    int idx = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v, ++idx)
            if (g.has_arc(perm[u], perm[v])) bits |= uint64_t{1} << idx;
    return bits;
}

/// Minimum adjacency encoding over all vertex permutations (n <= 8).
inline uint64_t canonical_form(const Graph& g) {
    if (g.n > 8) throw InputError("canonical_form supports n <= 8 only");
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = i;
    uint64_t best = ~uint64_t{0};
    do {
        best = std::min(best, adjacency_bits(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// All undirected graphs on n vertices (every edge subset).
inline std::vector<Graph> all_graphs(int n) {
    int slots = n * (n - 1) / 2;
    std::vector<Graph> out;
    for (uint32_t mask = 0; mask < (1u << slots); ++mask) {
        Graph g = Graph::undirected(n);
        int idx = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++idx)
                if (mask & (1u << idx)) g.add_edge(u, v);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace ndmc::test
