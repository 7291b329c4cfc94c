#include "ndmc/cliquewidth.hpp"

#include <set>

namespace ndmc {

namespace {

void collect_labels(const CliquewidthScript& s, std::set<int>& labels) {
    for (const auto& op : s.ops) {
        switch (op.kind) {
            case CwOp::Kind::introduce:
                labels.insert(op.a);
                break;
            case CwOp::Kind::join:
            case CwOp::Kind::rename:
                labels.insert(op.a);
                labels.insert(op.b);
                break;
            case CwOp::Kind::union_with:
                if (op.sub) collect_labels(*op.sub, labels);
                break;
        }
    }
}

void replay_into(const CliquewidthScript& script, Graph& g, std::vector<int>& label_of) {
    for (const auto& op : script.ops) {
        switch (op.kind) {
            case CwOp::Kind::introduce: {
                Graph grown = Graph::undirected(g.n + 1);
                for (int u = 0; u < g.n; ++u)
                    for (int v : g.out[u])
                        if (u < v) grown.add_edge(u, v);
                g = std::move(grown);
                label_of.push_back(op.a);
                break;
            }
            case CwOp::Kind::join:
                for (int u = 0; u < g.n; ++u)
                    for (int v = u + 1; v < g.n; ++v)
                        if (label_of[u] == op.a && label_of[v] == op.b)
                            g.add_edge(u, v);
                for (int u = 0; u < g.n; ++u)
                    for (int v = u + 1; v < g.n; ++v)
                        if (label_of[u] == op.b && label_of[v] == op.a)
                            g.add_edge(u, v);
                break;
            case CwOp::Kind::rename:
                for (int& l : label_of)
                    if (l == op.a) l = op.b;
                break;
            case CwOp::Kind::union_with: {
                if (!op.sub) break;
                Graph sub = Graph::undirected(0);
                std::vector<int> sub_labels;
                replay_into(*op.sub, sub, sub_labels);
                int offset = g.n;
                Graph merged = Graph::undirected(g.n + sub.n);
                for (int u = 0; u < g.n; ++u)
                    for (int v : g.out[u])
                        if (u < v) merged.add_edge(u, v);
                for (int u = 0; u < sub.n; ++u)
                    for (int v : sub.out[u])
                        if (u < v) merged.add_edge(offset + u, offset + v);
                g = std::move(merged);
                for (int l : sub_labels) label_of.push_back(l);
                break;
            }
        }
    }
}

}  // namespace

int CliquewidthScript::used_labels() const {
    std::set<int> labels;
    collect_labels(*this, labels);
    return static_cast<int>(labels.size());
}

CliquewidthScript cliquewidth_expression(const Graph& g, const NeighborhoodPartition& p) {
    if (g.directed) throw InputError("cliquewidth expression requires an undirected graph");
    validate_partition(g, p);
    int w = p.width();
    int spare = w + 1;
    CliquewidthScript script;
    script.label_budget = w + 1;

    for (int i = 0; i < w; ++i) {
        int label = i + 1;
        int size = static_cast<int>(p.classes[i].size());
        if (p.kinds[i] == ClassKind::independent) {
            for (int r = 0; r < size; ++r)
                script.ops.push_back({CwOp::Kind::introduce, label, 0, nullptr});
        } else {
            for (int r = 0; r < size; ++r) {
                script.ops.push_back({CwOp::Kind::introduce, spare, 0, nullptr});
                script.ops.push_back({CwOp::Kind::join, label, spare, nullptr});
                script.ops.push_back({CwOp::Kind::rename, spare, label, nullptr});
            }
        }
    }
    for (int i = 0; i < w; ++i)
        for (int j = i + 1; j < w; ++j)
            if (g.has_arc(p.classes[i].front(), p.classes[j].front()))
                script.ops.push_back({CwOp::Kind::join, i + 1, j + 1, nullptr});
    return script;
}

Graph replay_cliquewidth(const CliquewidthScript& script) {
    Graph g = Graph::undirected(0);
    std::vector<int> label_of;
    replay_into(script, g, label_of);
    return g;
}

}  // namespace ndmc
