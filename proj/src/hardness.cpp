#include "ndmc/hardness.hpp"

#include <functional>
#include <sstream>

#include "ndmc/vertex_cover.hpp"

namespace ndmc {

uint64_t tow(int h) {
    if (h < 0) throw InputError("tow requires h >= 0");
    if (h >= 6) throw std::overflow_error("tow(" + std::to_string(h) + ") is not representable");
    uint64_t v = 0;
    for (int i = 0; i < h; ++i) v = v == 0 ? 1 : (uint64_t{1} << v);
    return v;
}

int log_star(uint64_t n) {
    if (n < 1) throw InputError("log_star requires n >= 1");
    for (int h = 0; h <= 5; ++h)
        if (tow(h) >= n) return h;
    throw std::overflow_error("log_star argument exceeds tow(5)");
}

Graph number_encoding_dag(int k) {
    if (k < 0) throw InputError("number_encoding_dag requires k >= 0");
    Graph g = Graph::digraph(k + 1);
    for (int i = 1; i <= k; ++i)
        for (int j = 0; j < 31; ++j)
            if (i & (1 << j)) g.add_edge(i, j);
    return g;
}

namespace {

FormulaPtr out_neighbor_in(const Term& x, const std::string& var, const std::string& color) {
    return f::and_(f::arc(x, Term::var(var)), f::in_color(Term::var(var), color));
}

}  // namespace

FormulaPtr eq_formula(int h, const Term& x, const Term& y, const std::string& c1,
                      const std::string& c2) {
    if (h < 0) throw InputError("eq_formula requires h >= 0");
    if (h == 0) return f::truth(true);

    std::string lv = std::to_string(h);
    std::string w = "ew" + lv, z = "ez" + lv, zp = "ezp" + lv, wp = "ewp" + lv;
    std::string u = "eu" + lv, v = "ev" + lv;

    // Both out-neighborhoods empty or both nonempty.
    FormulaPtr both_or_neither =
        f::iff(f::exists_v(w, out_neighbor_in(x, w, c1)), f::exists_v(z, out_neighbor_in(y, z, c2)));

    // One shared recursive call covers both matched pairs.
    FormulaPtr pairs = f::or_(
        f::and_(f::eq(Term::var(u), Term::var(w)), f::eq(Term::var(v), Term::var(z))),
        f::and_(f::eq(Term::var(u), Term::var(wp)), f::eq(Term::var(v), Term::var(zp))));
    FormulaPtr shared = f::forall_v(
        u, f::forall_v(v, f::implies(pairs, eq_formula(h - 1, Term::var(u), Term::var(v), c1, c2))));

    FormulaPtr body = f::forall_v(
        w, f::implies(out_neighbor_in(x, w, c1),
                      f::exists_v(z, f::and_(out_neighbor_in(y, z, c2),
                                             f::forall_v(zp, f::implies(out_neighbor_in(y, zp, c2),
                                                                        f::exists_v(wp,
                                                                                    f::and_(out_neighbor_in(x, wp, c1),
                                                                                            shared))))))));
    return f::and_(both_or_neither, body);
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream input(text);
    std::string line;
    CnfFormula cnf;
    bool have_header = false;
    int declared_clauses = 0;
    std::vector<int> pending;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c" || first[0] == 'c') continue;
        if (first == "p") {
            std::string fmt;
            if (have_header || !(ls >> fmt >> cnf.variable_count >> declared_clauses) ||
                fmt != "cnf" || cnf.variable_count < 0)
                throw InputError("line " + std::to_string(line_no) + ": bad DIMACS header");
            have_header = true;
            continue;
        }
        if (!have_header)
            throw InputError("line " + std::to_string(line_no) + ": clause before 'p cnf' header");
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw InputError("line " + std::to_string(line_no) + ": clause has " +
                                     std::to_string(pending.size()) +
                                     " literals; exactly 3 required");
                CnfFormula::Clause cl;
                for (int i = 0; i < 3; ++i) cl.literals[i] = pending[i];
                cnf.clauses.push_back(cl);
                pending.clear();
            } else {
                int var = std::abs(lit);
                if (var < 1 || var > cnf.variable_count)
                    throw InputError("line " + std::to_string(line_no) + ": variable " +
                                     std::to_string(var) + " out of range");
                pending.push_back(lit);
            }
        }
    }
    if (!have_header) throw InputError("missing DIMACS 'p cnf' header");
    if (!pending.empty()) throw InputError("unterminated clause at end of input");
    if (static_cast<int>(cnf.clauses.size()) != declared_clauses)
        throw InputError("clause count mismatch: header says " + std::to_string(declared_clauses) +
                         ", found " + std::to_string(cnf.clauses.size()));
    return cnf;
}

std::string render_dimacs(const CnfFormula& cnf) {
    std::ostringstream os;
    os << "p cnf " << cnf.variable_count << " " << cnf.clauses.size() << "\n";
    for (const auto& cl : cnf.clauses)
        os << cl.literals[0] << " " << cl.literals[1] << " " << cl.literals[2] << " 0\n";
    return os.str();
}

std::string stage_name(Stage s) {
    switch (s) {
        case Stage::directed: return "directed";
        case Stage::undirected: return "undirected";
        case Stage::uncolored: return "uncolored";
        case Stage::unlabeled: return "unlabeled";
    }
    return "?";
}

namespace {

void validate_cnf(const CnfFormula& cnf) {
    if (cnf.variable_count < 1) throw InputError("CNF needs at least one variable");
    if (cnf.clauses.empty()) throw InputError("CNF needs at least one clause");
    for (const auto& cl : cnf.clauses)
        for (int lit : cl.literals) {
            int var = std::abs(lit);
            if (lit == 0 || var > cnf.variable_count)
                throw InputError("clause literal " + std::to_string(lit) + " out of range");
        }
}

int bit_width_for(int n) {
    int b = 0;
    while ((1 << b) < n + 1) ++b;
    return b;
}

int measured_vertex_cover(const Graph& g, const GenOptions& opts) {
    if (!opts.compute_vertex_cover) return -1;
    return min_vertex_cover_size(g.underlying_undirected());
}

}  // namespace

HardnessInstance sat_to_directed(const CnfFormula& cnf, const GenOptions& opts) {
    validate_cnf(cnf);
    int n = cnf.variable_count;
    int m = static_cast<int>(cnf.clauses.size());
    int b = bit_width_for(n);
    int copy_size = b + 1;

    HardnessInstance inst;
    inst.stage = Stage::directed;
    inst.metadata.bit_width = b;

    Graph g = Graph::digraph(6 * copy_size + n + m);
    auto copy_vertex = [&](int copy, int j) { return copy * copy_size + j; };
    int v1_base = 6 * copy_size;
    int m_base = v1_base + n;

    Graph gadget = number_encoding_dag(b);
    for (int copy = 0; copy < 6; ++copy) {
        VertexSet members;
        for (int j = 0; j <= b; ++j) members.push_back(copy_vertex(copy, j));
        g.add_color("N" + std::to_string(copy + 1), members);
        for (int i = 0; i <= b; ++i)
            for (int j : gadget.out[i]) g.add_edge(copy_vertex(copy, i), copy_vertex(copy, j));
    }

    VertexSet variable_vertices;
    for (int i = 1; i <= n; ++i) {
        int v = v1_base + (i - 1);
        variable_vertices.push_back(v);
        for (int j = 0; j < b; ++j)
            if (i & (1 << j)) g.add_edge(v, copy_vertex(0, j));
    }
    g.add_color("V1", variable_vertices);

    VertexSet clause_vertices;
    for (int c = 0; c < m; ++c) {
        int u = m_base + c;
        clause_vertices.push_back(u);
        for (int slot = 0; slot < 3; ++slot) {
            int lit = cnf.clauses[c].literals[slot];
            int copy = 2 * slot + (lit > 0 ? 0 : 1);
            int var = std::abs(lit);
            for (int j = 0; j < b; ++j)
                if (var & (1 << j)) g.add_edge(u, copy_vertex(copy, j));
        }
    }
    g.add_color("M", clause_vertices);

    int h = log_star(static_cast<uint64_t>(n));
    Term cx = Term::var("cx"), vy = Term::var("vy");
    auto eq_against = [&](int copy) {
        return eq_formula(h, cx, vy, "N" + std::to_string(copy), "N1");
    };
    FormulaPtr positive_match = f::disj({eq_against(1), eq_against(3), eq_against(5)});
    FormulaPtr negative_match = f::disj({eq_against(2), eq_against(4), eq_against(6)});
    FormulaPtr chosen = f::and_(f::in_set(vy, "S"), positive_match);
    FormulaPtr unchosen = f::and_(f::not_(f::in_set(vy, "S")), negative_match);
    FormulaPtr witness =
        f::exists_v("vy", f::and_(f::in_color(vy, "V1"), f::or_(chosen, unchosen)));
    FormulaPtr sentence = f::exists_s(
        "S", f::forall_v("cx", f::implies(f::in_color(cx, "M"), witness)));

    inst.graph = std::move(g);
    inst.sentence = sentence;
    inst.metadata.sentence_metrics = metrics(sentence, inst.graph);
    inst.metadata.vertex_cover_size = measured_vertex_cover(inst.graph, opts);
    return inst;
}

namespace {

// Fresh-name dispenser that avoids every identifier already in a formula.
class NameGen {
public:
    explicit NameGen(const FormulaPtr& f) {
        std::function<void(const FormulaPtr&)> walk = [&](const FormulaPtr& node) {
            if (!node) return;
            if (!node->name.empty()) used_.insert(node->name);
            if (!node->lhs.name.empty()) used_.insert(node->lhs.name);
            if (!node->rhs.name.empty()) used_.insert(node->rhs.name);
            walk(node->a);
            walk(node->b);
        };
        walk(f);
    }

    std::string fresh(const std::string& base) {
        std::string name = base;
        int k = 1;
        while (used_.count(name)) name = base + std::to_string(k++);
        used_.insert(name);
        return name;
    }

private:
    std::set<std::string> used_;
};

// Rebuilds a formula, relativizing every vertex quantifier with a guard and
// rewriting atoms through `atom_fn`.
FormulaPtr transform_sentence(const FormulaPtr& node,
                              const std::function<FormulaPtr(const Term&)>& guard_fn,
                              const std::function<FormulaPtr(const Formula&)>& atom_fn) {
    if (!node) return node;
    if (is_atom(node->kind)) return atom_fn(*node);
    switch (node->kind) {
        case FormKind::not_:
            return f::not_(transform_sentence(node->a, guard_fn, atom_fn));
        case FormKind::and_:
        case FormKind::or_:
        case FormKind::implies:
        case FormKind::iff: {
            FormulaPtr a = transform_sentence(node->a, guard_fn, atom_fn);
            FormulaPtr b = transform_sentence(node->b, guard_fn, atom_fn);
            Formula out;
            out.kind = node->kind;
            out.a = std::move(a);
            out.b = std::move(b);
            return std::make_shared<const Formula>(std::move(out));
        }
        case FormKind::exists_v: {
            FormulaPtr body = transform_sentence(node->a, guard_fn, atom_fn);
            FormulaPtr guard = guard_fn(Term::var(node->name));
            return f::exists_v(node->name, guard ? f::and_(guard, body) : body);
        }
        case FormKind::forall_v: {
            FormulaPtr body = transform_sentence(node->a, guard_fn, atom_fn);
            FormulaPtr guard = guard_fn(Term::var(node->name));
            return f::forall_v(node->name, guard ? f::implies(guard, body) : body);
        }
        case FormKind::exists_s:
            return f::exists_s(node->name, transform_sentence(node->a, guard_fn, atom_fn));
        case FormKind::forall_s:
            return f::forall_s(node->name, transform_sentence(node->a, guard_fn, atom_fn));
        default:
            throw InputError("corrupt formula node");
    }
}

FormulaPtr same_atom(const Formula& atom) {
    return std::make_shared<const Formula>(atom);
}

// "S is a set of path vertices reaching l_s from v": endpoints free, interior
// members need two distinct neighbors inside S. On a simple path this pins S
// inside the segment below v, which is all the level comparison needs.
FormulaPtr path_segment_mso(const Term& v, const std::string& set_name,
                            const std::string& path_color, const std::string& sink_label,
                            NameGen& names) {
    std::string y = names.fresh("py");
    std::string z1 = names.fresh("pz");
    std::string z2 = names.fresh("pz");
    Term ty = Term::var(y), tz1 = Term::var(z1), tz2 = Term::var(z2);
    Term sink = Term::label(sink_label);
    FormulaPtr members_on_path =
        f::forall_v(y, f::implies(f::in_set(ty, set_name), f::in_color(ty, path_color)));
    FormulaPtr interior = f::forall_v(
        y,
        f::implies(f::conj({f::in_set(ty, set_name), f::not_(f::eq(ty, v)), f::not_(f::eq(ty, sink))}),
                   f::exists_v(z1, f::exists_v(z2, f::conj({f::in_set(tz1, set_name),
                                                            f::in_set(tz2, set_name),
                                                            f::not_(f::eq(tz1, tz2)),
                                                            f::edge(ty, tz1), f::edge(ty, tz2)})))));
    return f::conj({f::in_color(v, path_color), f::in_set(v, set_name),
                    f::in_set(sink, set_name), members_on_path, interior});
}

// FO rendition of the same segment, as `length` not-necessarily-distinct
// vertex picks.
FormulaPtr path_segment_fo(const Term& v, const std::vector<Term>& picks,
                           const std::string& path_color, const std::string& sink_label) {
    Term sink = Term::label(sink_label);
    std::vector<FormulaPtr> parts;
    parts.push_back(f::in_color(v, path_color));
    {
        std::vector<FormulaPtr> any_is_v, any_is_sink;
        for (const Term& p : picks) any_is_v.push_back(f::eq(p, v));
        for (const Term& p : picks) any_is_sink.push_back(f::eq(p, sink));
        parts.push_back(f::disj(any_is_v));
        parts.push_back(f::disj(any_is_sink));
    }
    for (const Term& p : picks) parts.push_back(f::in_color(p, path_color));
    for (const Term& p : picks) {
        std::vector<FormulaPtr> pairs;
        for (size_t a = 0; a < picks.size(); ++a)
            for (size_t bdx = a + 1; bdx < picks.size(); ++bdx)
                pairs.push_back(f::conj({f::not_(f::eq(picks[a], picks[bdx])),
                                         f::edge(p, picks[a]), f::edge(p, picks[bdx])}));
        parts.push_back(
            f::implies(f::and_(f::not_(f::eq(p, v)), f::not_(f::eq(p, sink))), f::disj(pairs)));
    }
    return f::conj(parts);
}

}  // namespace

HardnessInstance directed_to_undirected(const HardnessInstance& inst, const GenOptions& opts) {
    if (inst.stage != Stage::directed)
        throw InputError("directed_to_undirected expects a directed-stage instance");
    const Graph& g = inst.graph;
    if (!g.directed) throw InputError("directed_to_undirected expects a digraph");
    if (g.colors.count("P")) throw InputError("input already uses the reserved color 'P'");
    if (g.labels.count("l_s")) throw InputError("input already uses the reserved label 'l_s'");

    // Longest-path levels; rejects non-DAGs.
    std::vector<int> level(g.n, 0);
    {
        std::vector<int> state(g.n, 0);  // 0 unseen, 1 active, 2 done
        std::function<int(int)> depth = [&](int v) -> int {
            if (state[v] == 1) throw InputError("input digraph has a cycle");
            if (state[v] == 2) return level[v];
            state[v] = 1;
            int best = 1;
            for (int u : g.out[v]) best = std::max(best, 1 + depth(u));
            state[v] = 2;
            level[v] = best;
            return best;
        };
        for (int v = 0; v < g.n; ++v) depth(v);
    }
    int max_level = 0;
    for (int v = 0; v < g.n; ++v) max_level = std::max(max_level, level[v]);
    if (g.n == 0) max_level = 1;

    Graph out = Graph::undirected(g.n + max_level);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.out[u])
            if (!out.has_arc(u, v)) out.add_edge(u, v);
    auto path_vertex = [&](int lvl) { return g.n + (lvl - 1); };  // path vertex for level lvl
    for (int lvl = 1; lvl < max_level; ++lvl) out.add_edge(path_vertex(lvl), path_vertex(lvl + 1));
    for (int v = 0; v < g.n; ++v) out.add_edge(v, path_vertex(level[v]));
    out.colors = g.colors;
    out.labels = g.labels;
    VertexSet path_members;
    for (int lvl = 1; lvl <= max_level; ++lvl) path_members.push_back(path_vertex(lvl));
    out.add_color("P", path_members);
    out.add_label("l_s", path_vertex(1));

    NameGen names(inst.sentence);
    // D(a,b) becomes E(a,b) plus "a's level is at least b's": project both
    // endpoints onto the path and compare the reached segments by inclusion.
    auto rewrite_arc = [&](const Term& a, const Term& b) -> FormulaPtr {
        std::string xa = names.fresh("pa");
        std::string xb = names.fresh("pb");
        Term ta = Term::var(xa), tb = Term::var(xb);
        FormulaPtr anchors = f::and_(f::edge(a, ta), f::edge(b, tb));
        if (!opts.fo_path_encoding) {
            std::string sx = names.fresh("SA");
            std::string sy = names.fresh("SB");
            std::string z = names.fresh("pc");
            FormulaPtr seg_a = path_segment_mso(ta, sx, "P", "l_s", names);
            FormulaPtr seg_b = path_segment_mso(tb, sy, "P", "l_s", names);
            FormulaPtr subset = f::forall_v(
                z, f::implies(f::in_set(Term::var(z), sy), f::in_set(Term::var(z), sx)));
            FormulaPtr cmp = f::exists_s(sx, f::exists_s(sy, f::conj({seg_a, seg_b, subset})));
            return f::and_(f::edge(a, b),
                           f::exists_v(xa, f::exists_v(xb, f::and_(anchors, cmp))));
        }
        std::vector<Term> picks_a, picks_b;
        std::vector<std::string> names_a, names_b;
        for (int i = 0; i < max_level; ++i) {
            names_a.push_back(names.fresh("qa"));
            picks_a.push_back(Term::var(names_a.back()));
        }
        for (int i = 0; i < max_level; ++i) {
            names_b.push_back(names.fresh("qb"));
            picks_b.push_back(Term::var(names_b.back()));
        }
        FormulaPtr seg_a = path_segment_fo(ta, picks_a, "P", "l_s");
        FormulaPtr seg_b = path_segment_fo(tb, picks_b, "P", "l_s");
        std::vector<FormulaPtr> inclusion;
        for (const Term& pb : picks_b) {
            std::vector<FormulaPtr> hit;
            for (const Term& pa : picks_a) hit.push_back(f::eq(pb, pa));
            inclusion.push_back(f::disj(hit));
        }
        FormulaPtr cmp = f::conj({seg_a, seg_b, f::conj(inclusion)});
        FormulaPtr inner = cmp;
        for (auto it = names_b.rbegin(); it != names_b.rend(); ++it)
            inner = f::exists_v(*it, inner);
        for (auto it = names_a.rbegin(); it != names_a.rend(); ++it)
            inner = f::exists_v(*it, inner);
        return f::and_(f::edge(a, b),
                       f::exists_v(xa, f::exists_v(xb, f::and_(anchors, inner))));
    };

    auto guard = [&](const Term& t) -> FormulaPtr { return f::not_(f::in_color(t, "P")); };
    auto atom = [&](const Formula& a) -> FormulaPtr {
        if (a.kind == FormKind::arc) return rewrite_arc(a.lhs, a.rhs);
        return same_atom(a);
    };

    HardnessInstance result;
    result.stage = Stage::undirected;
    result.graph = std::move(out);
    result.sentence = transform_sentence(inst.sentence, guard, atom);
    result.metadata = inst.metadata;
    result.metadata.levels.assign(level.begin(), level.end());
    result.metadata.sentence_metrics = metrics(result.sentence, result.graph);
    result.metadata.vertex_cover_size = measured_vertex_cover(result.graph, opts);
    return result;
}

HardnessInstance decolor(const HardnessInstance& inst) {
    if (inst.stage != Stage::undirected)
        throw InputError("decolor expects an undirected-stage instance");
    const Graph& g = inst.graph;
    if (g.directed) throw InputError("decolor expects an undirected graph");
    for (const auto& [name, members] : g.colors)
        if (g.labels.count(name))
            throw InputError("label '" + name + "' collides with a color name");

    Graph out = Graph::undirected(g.n + static_cast<int>(g.colors.size()));
    for (int u = 0; u < g.n; ++u)
        for (int v : g.out[u])
            if (u < v) out.add_edge(u, v);
    out.labels = g.labels;
    int apex = g.n;
    std::vector<std::string> color_names;
    for (const auto& [name, members] : g.colors) {
        for (int v : members) out.add_edge(apex, v);
        out.add_label(name, apex);
        color_names.push_back(name);
        ++apex;
    }

    auto guard = [&](const Term& t) -> FormulaPtr {
        std::vector<FormulaPtr> parts;
        for (const auto& name : color_names)
            parts.push_back(f::not_(f::eq(t, Term::label(name))));
        return parts.empty() ? nullptr : f::conj(parts);
    };
    auto atom = [&](const Formula& a) -> FormulaPtr {
        if (a.kind == FormKind::in_color) return f::edge(a.lhs, Term::label(a.name));
        return same_atom(a);
    };

    HardnessInstance result;
    result.stage = Stage::uncolored;
    result.graph = std::move(out);
    result.sentence = transform_sentence(inst.sentence, guard, atom);
    result.metadata = inst.metadata;
    result.metadata.sentence_metrics = metrics(result.sentence, result.graph);
    GenOptions opts;
    opts.compute_vertex_cover = inst.metadata.vertex_cover_size >= 0;
    result.metadata.vertex_cover_size = measured_vertex_cover(result.graph, opts);
    return result;
}

namespace {

// "e is a leaf": it has a neighbor and all its neighbors coincide.
FormulaPtr leaf_formula(const Term& e, NameGen& names) {
    std::string u = names.fresh("lu");
    std::string v = names.fresh("lv");
    Term tu = Term::var(u), tv = Term::var(v);
    return f::exists_v(
        u, f::and_(f::edge(e, tu),
                   f::forall_v(v, f::implies(f::edge(e, tv), f::eq(tv, tu)))));
}

// "t has at least `count` pendant leaves", by distinctness.
FormulaPtr at_least_leaves(const Term& t, int count, NameGen& names) {
    std::vector<std::string> es;
    std::vector<FormulaPtr> parts;
    for (int i = 0; i < count; ++i) {
        es.push_back(names.fresh("le"));
        Term te = Term::var(es.back());
        parts.push_back(f::edge(t, te));
        parts.push_back(leaf_formula(te, names));
    }
    for (size_t a = 0; a < es.size(); ++a)
        for (size_t b = a + 1; b < es.size(); ++b)
            parts.push_back(f::not_(f::eq(Term::var(es[a]), Term::var(es[b]))));
    FormulaPtr body = f::conj(parts);
    for (auto it = es.rbegin(); it != es.rend(); ++it) body = f::exists_v(*it, body);
    return body;
}

FormulaPtr exactly_leaves(const Term& t, int count, NameGen& names) {
    return f::and_(at_least_leaves(t, count, names),
                   f::not_(at_least_leaves(t, count + 1, names)));
}

}  // namespace

HardnessInstance delabel(const HardnessInstance& inst) {
    if (inst.stage != Stage::uncolored)
        throw InputError("delabel expects an uncolored-stage instance");
    const Graph& g = inst.graph;
    if (!g.colors.empty()) throw InputError("delabel expects a graph without colors");
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1)
            throw InputError("graph has a pre-existing leaf (vertex " + std::to_string(v) +
                             "); leaf counts would be ambiguous");

    // Distinct labeled vertices receive distinct pendant-leaf counts, walking
    // labels in name order; labels sharing a vertex share its count. Counts
    // start at 1, but an isolated labeled vertex must not receive exactly one
    // leaf or it would become a leaf itself and slip out of the relativized
    // universe, so count 1 goes to a positive-degree vertex (or is skipped).
    NameGen names(inst.sentence);
    std::vector<int> ordered_vertices;
    std::map<std::string, std::string> pin;  // label name -> pin variable
    std::map<int, size_t> vertex_slot;
    for (const auto& [label, vertex] : g.labels) {
        if (!vertex_slot.count(vertex)) {
            vertex_slot[vertex] = ordered_vertices.size();
            ordered_vertices.push_back(vertex);
        }
    }
    size_t k = ordered_vertices.size();
    std::vector<int> counts(k);
    for (size_t i = 0; i < k; ++i) counts[i] = static_cast<int>(i) + 1;
    if (k > 0 && g.degree(ordered_vertices[0]) == 0) {
        size_t swap_with = k;
        for (size_t j = 1; j < k; ++j)
            if (g.degree(ordered_vertices[j]) >= 1) {
                swap_with = j;
                break;
            }
        if (swap_with < k)
            std::swap(counts[0], counts[swap_with]);
        else
            for (size_t i = 0; i < k; ++i) counts[i] += 1;  // everyone isolated
    }
    std::vector<std::pair<std::string, int>> pins;  // (pin variable, leaf count)
    for (size_t i = 0; i < k; ++i)
        pins.emplace_back(names.fresh("t" + std::to_string(i + 1)), counts[i]);
    for (const auto& [label, vertex] : g.labels) pin[label] = pins[vertex_slot[vertex]].first;

    int extra = 0;
    for (const auto& [var, count] : pins) extra += count;
    Graph out = Graph::undirected(g.n + extra);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.out[u])
            if (u < v) out.add_edge(u, v);
    int next_leaf = g.n;
    for (size_t i = 0; i < k; ++i)
        for (int leaf = 0; leaf < pins[i].second; ++leaf)
            out.add_edge(ordered_vertices[i], next_leaf++);

    auto substitute_term = [&](const Term& t) -> Term {
        if (t.kind == Term::Kind::label) return Term::var(pin.at(t.name));
        return t;
    };
    auto guard = [&](const Term& t) -> FormulaPtr { return f::not_(leaf_formula(t, names)); };
    auto atom = [&](const Formula& a) -> FormulaPtr {
        Formula out_atom = a;
        out_atom.lhs = substitute_term(a.lhs);
        out_atom.rhs = substitute_term(a.rhs);
        return std::make_shared<const Formula>(std::move(out_atom));
    };

    FormulaPtr body = transform_sentence(inst.sentence, guard, atom);
    for (size_t idx = pins.size(); idx-- > 0;) {
        const auto& [var, count] = pins[idx];
        FormulaPtr pin_formula = exactly_leaves(Term::var(var), count, names);
        body = f::exists_v(var, f::and_(pin_formula, body));
    }

    HardnessInstance result;
    result.stage = Stage::unlabeled;
    result.graph = std::move(out);
    result.sentence = body;
    result.metadata = inst.metadata;
    result.metadata.sentence_metrics = metrics(result.sentence, result.graph);
    GenOptions opts;
    opts.compute_vertex_cover = inst.metadata.vertex_cover_size >= 0;
    result.metadata.vertex_cover_size = measured_vertex_cover(result.graph, opts);
    return result;
}

FormulaPtr weighted_variant(const CnfFormula& cnf, int weight) {
    validate_cnf(cnf);
    if (weight < 0 || weight > cnf.variable_count)
        throw InputError("weight must lie in [0, n]");
    int n = cnf.variable_count;
    int h = log_star(static_cast<uint64_t>(n));

    std::vector<std::string> picks;
    for (int i = 1; i <= weight; ++i) picks.push_back("w" + std::to_string(i));

    Term cx = Term::var("cx"), vy = Term::var("vy");
    auto eq_against = [&](int copy) {
        return eq_formula(h, cx, vy, "N" + std::to_string(copy), "N1");
    };
    std::vector<FormulaPtr> member_parts;
    for (const auto& p : picks) member_parts.push_back(f::eq(vy, Term::var(p)));
    FormulaPtr member = f::disj(member_parts);
    FormulaPtr chosen = f::and_(member, f::disj({eq_against(1), eq_against(3), eq_against(5)}));
    FormulaPtr unchosen =
        f::and_(f::not_(member), f::disj({eq_against(2), eq_against(4), eq_against(6)}));
    FormulaPtr witness =
        f::exists_v("vy", f::and_(f::in_color(vy, "V1"), f::or_(chosen, unchosen)));
    FormulaPtr core = f::forall_v("cx", f::implies(f::in_color(cx, "M"), witness));

    std::vector<FormulaPtr> constraints;
    for (size_t a = 0; a < picks.size(); ++a)
        for (size_t b = a + 1; b < picks.size(); ++b)
            constraints.push_back(f::not_(f::eq(Term::var(picks[a]), Term::var(picks[b]))));
    for (const auto& p : picks) constraints.push_back(f::in_color(Term::var(p), "V1"));
    constraints.push_back(core);
    FormulaPtr body = f::conj(constraints);
    for (auto it = picks.rbegin(); it != picks.rend(); ++it) body = f::exists_v(*it, body);
    return body;
}

}  // namespace ndmc
