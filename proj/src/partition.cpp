#include "ndmc/partition.hpp"

namespace ndmc {

namespace {

// N(u) \ {v} == N(v) \ {u} over sorted neighbor lists, without materializing.
bool neighborhoods_match(const VertexSet& nu, const VertexSet& nv, int u, int v) {
    size_t i = 0, j = 0;
    while (true) {
        while (i < nu.size() && nu[i] == v) ++i;
        while (j < nv.size() && nv[j] == u) ++j;
        if (i == nu.size() || j == nv.size()) break;
        if (nu[i] != nv[j]) return false;
        ++i;
        ++j;
    }
    while (i < nu.size() && nu[i] == v) ++i;
    while (j < nv.size() && nv[j] == u) ++j;
    return i == nu.size() && j == nv.size();
}

}  // namespace

bool same_type(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) return true;
    for (const auto& [name, members] : g.colors)
        if (vs_contains(members, u) != vs_contains(members, v)) return false;
    if (!neighborhoods_match(g.out[u], g.out[v], u, v)) return false;
    if (g.directed) {
        if (!neighborhoods_match(g.in[u], g.in[v], u, v)) return false;
        // Swapping u and v must also preserve arcs inside the pair, so a
        // one-way arc between them disqualifies the exchange.
        if (g.has_arc(u, v) != g.has_arc(v, u)) return false;
    }
    return true;
}

ClassKind classify(const Graph& g, const VertexSet& members) {
    if (members.size() <= 1) return ClassKind::independent;
    // Type-uniform classes are internally all-or-none, so one pair decides.
    return g.has_arc(members[0], members[1]) || g.has_arc(members[1], members[0])
               ? ClassKind::clique
               : ClassKind::independent;
}

NeighborhoodPartition neighborhood_partition(const Graph& g) {
    NeighborhoodPartition p;
    for (int v = 0; v < g.n; ++v) {
        bool placed = false;
        for (auto& cls : p.classes) {
            if (same_type(g, cls.front(), v)) {
                cls.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) p.classes.push_back({v});
    }
    for (const auto& cls : p.classes) p.kinds.push_back(classify(g, cls));
    return p;
}

int nd(const Graph& g) { return neighborhood_partition(g).width(); }

NeighborhoodPartition partition_from_vertex_cover(const Graph& g, const VertexSet& cover) {
    for (int v : cover) g.check_vertex(v);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.out[u])
            if (!vs_contains(cover, u) && !vs_contains(cover, v))
                throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                 " is not covered");

    // Group non-cover vertices by (cover neighborhood, color signature).
    std::map<std::pair<std::vector<int>, std::vector<int>>, VertexSet> groups;
    for (int v = 0; v < g.n; ++v) {
        if (vs_contains(cover, v)) continue;
        std::vector<int> nbhd = vs_intersect(g.out[v], cover);
        if (g.directed) {
            nbhd.push_back(-1);
            for (int w : vs_intersect(g.in[v], cover)) nbhd.push_back(w);
        }
        std::vector<int> sig;
        int idx = 0;
        for (const auto& [name, members] : g.colors) {
            if (vs_contains(members, v)) sig.push_back(idx);
            ++idx;
        }
        groups[{std::move(nbhd), std::move(sig)}].push_back(v);
    }

    NeighborhoodPartition p;
    for (int v : cover) p.classes.push_back({v});
    for (auto& [key, members] : groups) p.classes.push_back(std::move(members));
    std::sort(p.classes.begin(), p.classes.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    for (const auto& cls : p.classes) p.kinds.push_back(classify(g, cls));
    return p;
}

std::vector<VertexSet> split_classes(const std::vector<VertexSet>& classes, const VertexSet& s) {
    std::vector<VertexSet> out;
    for (const auto& cls : classes) {
        VertexSet inside = vs_intersect(cls, s);
        VertexSet outside = vs_subtract(cls, s);
        if (!inside.empty()) out.push_back(std::move(inside));
        if (!outside.empty()) out.push_back(std::move(outside));
    }
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return out;
}

NeighborhoodPartition refine_with_set(const NeighborhoodPartition& p, const VertexSet& s) {
    NeighborhoodPartition out;
    for (size_t i = 0; i < p.classes.size(); ++i) {
        VertexSet inside = vs_intersect(p.classes[i], s);
        VertexSet outside = vs_subtract(p.classes[i], s);
        for (VertexSet* part : {&inside, &outside}) {
            if (part->empty()) continue;
            ClassKind kind = part->size() == 1 ? ClassKind::independent : p.kinds[i];
            out.classes.push_back(std::move(*part));
            out.kinds.push_back(kind);
        }
    }
    std::vector<size_t> order(out.classes.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return out.classes[a].front() < out.classes[b].front();
    });
    NeighborhoodPartition sorted;
    for (size_t i : order) {
        sorted.classes.push_back(std::move(out.classes[i]));
        sorted.kinds.push_back(out.kinds[i]);
    }
    return sorted;
}

void validate_partition(const Graph& g, const NeighborhoodPartition& p) {
    if (p.classes.size() != p.kinds.size())
        throw InputError("partition kinds do not match classes");
    std::vector<char> seen(g.n, 0);
    for (const auto& cls : p.classes) {
        if (cls.empty()) throw InputError("partition contains an empty class");
        for (int v : cls) {
            g.check_vertex(v);
            if (seen[v]) throw InputError("vertex " + std::to_string(v) + " appears twice");
            seen[v] = 1;
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (!seen[v]) throw InputError("vertex " + std::to_string(v) + " missing from partition");

    for (size_t i = 0; i < p.classes.size(); ++i) {
        const auto& cls = p.classes[i];
        bool any = false, all = true;
        for (size_t a = 0; a < cls.size(); ++a)
            for (size_t b = a + 1; b < cls.size(); ++b) {
                bool e = g.has_arc(cls[a], cls[b]) || g.has_arc(cls[b], cls[a]);
                any |= e;
                all &= e;
            }
        if (cls.size() >= 2 && any != all)
            throw InputError("class " + std::to_string(i) + " is neither clique nor independent");
        ClassKind expected = cls.size() == 1   ? ClassKind::independent
                             : any             ? ClassKind::clique
                                               : ClassKind::independent;
        if (p.kinds[i] != expected)
            throw InputError("class " + std::to_string(i) + " has wrong kind");
    }
    for (size_t i = 0; i < p.classes.size(); ++i)
        for (size_t j = i + 1; j < p.classes.size(); ++j) {
            bool any = false, all = true;
            for (int u : p.classes[i])
                for (int v : p.classes[j]) {
                    bool e = g.has_arc(u, v) || g.has_arc(v, u);
                    any |= e;
                    all &= e;
                }
            if (any != all)
                throw InputError("classes " + std::to_string(i) + "," + std::to_string(j) +
                                 " are not fully joined or fully separated");
        }
}

}  // namespace ndmc
