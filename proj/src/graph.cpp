#include "ndmc/graph.hpp"

#include <sstream>

namespace ndmc {

Graph Graph::undirected(int n) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    Graph g;
    g.directed = false;
    g.n = n;
    g.out.resize(n);
    g.in.resize(n);
    return g;
}

Graph Graph::digraph(int n) {
    Graph g = undirected(n);
    g.directed = true;
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n)
        throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loops are not allowed");
    vs_insert(out[u], v);
    vs_insert(in[v], u);
    if (!directed) {
        vs_insert(out[v], u);
        vs_insert(in[u], v);
    }
}

void Graph::add_color(const std::string& name, VertexSet vertices) {
    if (name.empty()) throw InputError("color name must be nonempty");
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices) check_vertex(v);
    auto it = colors.find(name);
    if (it == colors.end())
        colors.emplace(name, std::move(vertices));
    else
        it->second = vs_union(it->second, vertices);
}

void Graph::add_label(const std::string& name, int vertex) {
    if (name.empty()) throw InputError("label name must be nonempty");
    check_vertex(vertex);
    if (labels.count(name)) throw InputError("duplicate label name '" + name + "'");
    labels.emplace(name, vertex);
}

bool Graph::has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return vs_contains(out[u], v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    if (!directed) return static_cast<int>(out[v].size());
    return static_cast<int>(out[v].size() + in[v].size());
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& nb : out) total += static_cast<int>(nb.size());
    return directed ? total : total / 2;
}

Graph Graph::underlying_undirected() const {
    if (!directed) return *this;
    Graph g = Graph::undirected(n);
    for (int u = 0; u < n; ++u)
        for (int v : out[u])
            if (!g.has_arc(u, v)) g.add_edge(u, v);
    g.colors = colors;
    g.labels = labels;
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream input(text);
    std::string line;
    Graph g;
    bool have_header = false;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        auto fail = [&](const std::string& msg) -> InputError {
            return InputError("line " + std::to_string(line_no) + ": " + msg);
        };
        if (!have_header) {
            int n = -1;
            if ((head != "graph" && head != "digraph") || !(ls >> n) || n < 0)
                throw fail("expected header 'graph <n>' or 'digraph <n>'");
            g = head == "graph" ? Graph::undirected(n) : Graph::digraph(n);
            have_header = true;
            continue;
        }
        try {
            if (head == "e") {
                int u, v;
                if (!(ls >> u >> v)) throw fail("expected 'e <u> <v>'");
                g.add_edge(u, v);
            } else if (head == "c") {
                std::string name;
                if (!(ls >> name)) throw fail("expected 'c <name> <v...>'");
                VertexSet vs;
                int v;
                while (ls >> v) vs.push_back(v);
                g.add_color(name, std::move(vs));
            } else if (head == "l") {
                std::string name;
                int v;
                if (!(ls >> name >> v)) throw fail("expected 'l <name> <v>'");
                g.add_label(name, v);
            } else {
                throw fail("unknown directive '" + head + "'");
            }
        } catch (const InputError& e) {
            std::string what = e.what();
            if (what.rfind("line ", 0) == 0) throw;
            throw fail(what);
        }
    }
    if (!have_header) throw InputError("empty graph file: missing header");
    return g;
}

std::string render_graph(const Graph& g) {
    std::ostringstream os;
    os << (g.directed ? "digraph " : "graph ") << g.n << "\n";
    for (int u = 0; u < g.n; ++u)
        for (int v : g.out[u])
            if (g.directed || u < v) os << "e " << u << " " << v << "\n";
    for (const auto& [name, vs] : g.colors) {
        os << "c " << name;
        for (int v : vs) os << " " << v;
        os << "\n";
    }
    for (const auto& [name, v] : g.labels) os << "l " << name << " " << v << "\n";
    return os.str();
}

Graph complete_graph(int n) {
    Graph g = Graph::undirected(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g = Graph::undirected(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph path_graph(int n) {
    Graph g = Graph::undirected(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves) {
    Graph g = Graph::undirected(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph edgeless_graph(int n) { return Graph::undirected(n); }

Graph clique_join_independent(int clique, int independent) {
    int n = clique + independent;
    Graph out = Graph::undirected(n);
    for (int u = 0; u < clique; ++u)
        for (int v = u + 1; v < clique; ++v) out.add_edge(u, v);
    for (int u = 0; u < clique; ++u)
        for (int v = clique; v < n; ++v) out.add_edge(u, v);
    return out;
}

}  // namespace ndmc
