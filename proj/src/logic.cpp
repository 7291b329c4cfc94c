#include "ndmc/logic.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "ndmc/graph.hpp"

namespace ndmc {

namespace f {

namespace {
FormulaPtr make(Formula node) { return std::make_shared<const Formula>(std::move(node)); }
}  // namespace

FormulaPtr truth(bool value) {
    Formula n;
    n.kind = FormKind::truth;
    n.value = value;
    return make(std::move(n));
}

FormulaPtr edge(Term a, Term b) {
    Formula n;
    n.kind = FormKind::edge;
    n.lhs = std::move(a);
    n.rhs = std::move(b);
    return make(std::move(n));
}

FormulaPtr arc(Term a, Term b) {
    Formula n;
    n.kind = FormKind::arc;
    n.lhs = std::move(a);
    n.rhs = std::move(b);
    return make(std::move(n));
}

FormulaPtr eq(Term a, Term b) {
    Formula n;
    n.kind = FormKind::eq;
    n.lhs = std::move(a);
    n.rhs = std::move(b);
    return make(std::move(n));
}

FormulaPtr in_color(Term t, std::string color) {
    Formula n;
    n.kind = FormKind::in_color;
    n.lhs = std::move(t);
    n.name = std::move(color);
    return make(std::move(n));
}

FormulaPtr in_set(Term t, std::string set_var) {
    Formula n;
    n.kind = FormKind::in_set;
    n.lhs = std::move(t);
    n.name = std::move(set_var);
    return make(std::move(n));
}

FormulaPtr not_(FormulaPtr a) {
    Formula n;
    n.kind = FormKind::not_;
    n.a = std::move(a);
    return make(std::move(n));
}

namespace {
FormulaPtr binary(FormKind kind, FormulaPtr a, FormulaPtr b) {
    Formula n;
    n.kind = kind;
    n.a = std::move(a);
    n.b = std::move(b);
    return make(std::move(n));
}

FormulaPtr quant(FormKind kind, std::string var, FormulaPtr body) {
    Formula n;
    n.kind = kind;
    n.name = std::move(var);
    n.a = std::move(body);
    return make(std::move(n));
}
}  // namespace

FormulaPtr and_(FormulaPtr a, FormulaPtr b) { return binary(FormKind::and_, std::move(a), std::move(b)); }
FormulaPtr or_(FormulaPtr a, FormulaPtr b) { return binary(FormKind::or_, std::move(a), std::move(b)); }
FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return binary(FormKind::implies, std::move(a), std::move(b)); }
FormulaPtr iff(FormulaPtr a, FormulaPtr b) { return binary(FormKind::iff, std::move(a), std::move(b)); }
FormulaPtr exists_v(std::string var, FormulaPtr body) { return quant(FormKind::exists_v, std::move(var), std::move(body)); }
FormulaPtr forall_v(std::string var, FormulaPtr body) { return quant(FormKind::forall_v, std::move(var), std::move(body)); }
FormulaPtr exists_s(std::string var, FormulaPtr body) { return quant(FormKind::exists_s, std::move(var), std::move(body)); }
FormulaPtr forall_s(std::string var, FormulaPtr body) { return quant(FormKind::forall_s, std::move(var), std::move(body)); }

FormulaPtr conj(std::vector<FormulaPtr> parts) {
    if (parts.empty()) return truth(true);
    FormulaPtr out = parts.front();
    for (size_t i = 1; i < parts.size(); ++i) out = and_(out, parts[i]);
    return out;
}

FormulaPtr disj(std::vector<FormulaPtr> parts) {
    if (parts.empty()) return truth(false);
    FormulaPtr out = parts.front();
    for (size_t i = 1; i < parts.size(); ++i) out = or_(out, parts[i]);
    return out;
}

}  // namespace f

bool is_quantifier(FormKind k) {
    return k == FormKind::exists_v || k == FormKind::forall_v || k == FormKind::exists_s ||
           k == FormKind::forall_s;
}

bool is_atom(FormKind k) {
    switch (k) {
        case FormKind::truth:
        case FormKind::edge:
        case FormKind::arc:
        case FormKind::eq:
        case FormKind::in_color:
        case FormKind::in_set:
            return true;
        default:
            return false;
    }
}

namespace {

void metrics_walk(const FormulaPtr& f, int depth, SentenceMetrics& m) {
    if (!f) return;
    m.size += 1;
    switch (f->kind) {
        case FormKind::exists_v:
        case FormKind::forall_v:
            m.q_v += 1;
            m.depth = std::max(m.depth, depth + 1);
            metrics_walk(f->a, depth + 1, m);
            return;
        case FormKind::exists_s:
        case FormKind::forall_s:
            m.q_s += 1;
            m.depth = std::max(m.depth, depth + 1);
            metrics_walk(f->a, depth + 1, m);
            return;
        default:
            metrics_walk(f->a, depth, m);
            metrics_walk(f->b, depth, m);
            return;
    }
}

void free_vars_walk(const FormulaPtr& f, std::vector<std::string>& v_scope,
                    std::vector<std::string>& s_scope, std::set<std::string>& free_v,
                    std::set<std::string>& free_s) {
    if (!f) return;
    auto check_term = [&](const Term& t) {
        if (t.kind != Term::Kind::variable) return;
        if (std::find(v_scope.rbegin(), v_scope.rend(), t.name) == v_scope.rend())
            free_v.insert(t.name);
    };
    switch (f->kind) {
        case FormKind::edge:
        case FormKind::arc:
        case FormKind::eq:
            check_term(f->lhs);
            check_term(f->rhs);
            return;
        case FormKind::in_color:
            check_term(f->lhs);
            return;
        case FormKind::in_set:
            check_term(f->lhs);
            if (std::find(s_scope.rbegin(), s_scope.rend(), f->name) == s_scope.rend())
                free_s.insert(f->name);
            return;
        case FormKind::exists_v:
        case FormKind::forall_v:
            v_scope.push_back(f->name);
            free_vars_walk(f->a, v_scope, s_scope, free_v, free_s);
            v_scope.pop_back();
            return;
        case FormKind::exists_s:
        case FormKind::forall_s:
            s_scope.push_back(f->name);
            free_vars_walk(f->a, v_scope, s_scope, free_v, free_s);
            s_scope.pop_back();
            return;
        default:
            free_vars_walk(f->a, v_scope, s_scope, free_v, free_s);
            free_vars_walk(f->b, v_scope, s_scope, free_v, free_s);
            return;
    }
}

}  // namespace

SentenceMetrics metrics(const FormulaPtr& f) {
    SentenceMetrics m;
    metrics_walk(f, 0, m);
    return m;
}

SentenceMetrics metrics(const FormulaPtr& f, const Graph& g) {
    SentenceMetrics m = metrics(f);
    m.label_count = static_cast<int>(g.labels.size());
    return m;
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->value != b->value || a->name != b->name) return false;
    if (!(a->lhs == b->lhs) || !(a->rhs == b->rhs)) return false;
    return structurally_equal(a->a, b->a) && structurally_equal(a->b, b->b);
}

std::vector<std::string> free_vertex_vars(const FormulaPtr& f) {
    std::vector<std::string> vs, ss;
    std::set<std::string> fv, fs;
    free_vars_walk(f, vs, ss, fv, fs);
    return {fv.begin(), fv.end()};
}

std::vector<std::string> free_set_vars(const FormulaPtr& f) {
    std::vector<std::string> vs, ss;
    std::set<std::string> fv, fs;
    free_vars_walk(f, vs, ss, fv, fs);
    return {fs.begin(), fs.end()};
}

bool is_sentence(const FormulaPtr& f) {
    return free_vertex_vars(f).empty() && free_set_vars(f).empty();
}

namespace {
void collect(const FormulaPtr& f, std::set<std::string>* colors, std::set<std::string>* labels,
             bool* edges, bool* arcs, std::vector<std::string>* s_scope) {
    if (!f) return;
    auto term = [&](const Term& t) {
        if (labels && t.kind == Term::Kind::label) labels->insert(t.name);
    };
    switch (f->kind) {
        case FormKind::edge:
            if (edges) *edges = true;
            term(f->lhs);
            term(f->rhs);
            return;
        case FormKind::arc:
            if (arcs) *arcs = true;
            term(f->lhs);
            term(f->rhs);
            return;
        case FormKind::eq:
            term(f->lhs);
            term(f->rhs);
            return;
        case FormKind::in_color:
            if (colors) colors->insert(f->name);
            term(f->lhs);
            return;
        case FormKind::in_set:
            term(f->lhs);
            return;
        case FormKind::exists_s:
        case FormKind::forall_s:
            s_scope->push_back(f->name);
            collect(f->a, colors, labels, edges, arcs, s_scope);
            s_scope->pop_back();
            return;
        default:
            collect(f->a, colors, labels, edges, arcs, s_scope);
            collect(f->b, colors, labels, edges, arcs, s_scope);
            return;
    }
}
}  // namespace

std::set<std::string> mentioned_colors(const FormulaPtr& f) {
    std::set<std::string> out;
    std::vector<std::string> scope;
    collect(f, &out, nullptr, nullptr, nullptr, &scope);
    return out;
}

std::set<std::string> mentioned_labels(const FormulaPtr& f) {
    std::set<std::string> out;
    std::vector<std::string> scope;
    collect(f, nullptr, &out, nullptr, nullptr, &scope);
    return out;
}

bool uses_edge_atoms(const FormulaPtr& f) {
    bool edges = false;
    std::vector<std::string> scope;
    collect(f, nullptr, nullptr, &edges, nullptr, &scope);
    return edges;
}

bool uses_arc_atoms(const FormulaPtr& f) {
    bool arcs = false;
    std::vector<std::string> scope;
    collect(f, nullptr, nullptr, nullptr, &arcs, &scope);
    return arcs;
}

namespace {

FormulaPtr nnf_walk(const FormulaPtr& f, bool neg) {
    switch (f->kind) {
        case FormKind::truth:
            return f::truth(f->value != neg);
        case FormKind::edge:
        case FormKind::arc:
        case FormKind::eq:
        case FormKind::in_color:
        case FormKind::in_set:
            return neg ? f::not_(f) : f;
        case FormKind::not_:
            return nnf_walk(f->a, !neg);
        case FormKind::and_:
            return neg ? f::or_(nnf_walk(f->a, true), nnf_walk(f->b, true))
                       : f::and_(nnf_walk(f->a, false), nnf_walk(f->b, false));
        case FormKind::or_:
            return neg ? f::and_(nnf_walk(f->a, true), nnf_walk(f->b, true))
                       : f::or_(nnf_walk(f->a, false), nnf_walk(f->b, false));
        case FormKind::implies:
            return neg ? f::and_(nnf_walk(f->a, false), nnf_walk(f->b, true))
                       : f::or_(nnf_walk(f->a, true), nnf_walk(f->b, false));
        case FormKind::iff:
            // (a <-> b) = (!a | b) & (!b | a); negation swaps one side.
            return neg ? f::and_(f::or_(nnf_walk(f->a, false), nnf_walk(f->b, false)),
                                 f::or_(nnf_walk(f->a, true), nnf_walk(f->b, true)))
                       : f::and_(f::or_(nnf_walk(f->a, true), nnf_walk(f->b, false)),
                                 f::or_(nnf_walk(f->b, true), nnf_walk(f->a, false)));
        case FormKind::exists_v:
            return neg ? f::forall_v(f->name, nnf_walk(f->a, true))
                       : f::exists_v(f->name, nnf_walk(f->a, false));
        case FormKind::forall_v:
            return neg ? f::exists_v(f->name, nnf_walk(f->a, true))
                       : f::forall_v(f->name, nnf_walk(f->a, false));
        case FormKind::exists_s:
            return neg ? f::forall_s(f->name, nnf_walk(f->a, true))
                       : f::exists_s(f->name, nnf_walk(f->a, false));
        case FormKind::forall_s:
            return neg ? f::exists_s(f->name, nnf_walk(f->a, true))
                       : f::forall_s(f->name, nnf_walk(f->a, false));
    }
    throw InputError("corrupt formula node");
}

void collect_names(const FormulaPtr& f, std::set<std::string>& names) {
    if (!f) return;
    if (!f->name.empty()) names.insert(f->name);
    if (f->lhs.kind == Term::Kind::variable && !f->lhs.name.empty()) names.insert(f->lhs.name);
    if (f->rhs.kind == Term::Kind::variable && !f->rhs.name.empty()) names.insert(f->rhs.name);
    collect_names(f->a, names);
    collect_names(f->b, names);
}

// Renames binders so every quantifier in the tree binds a distinct name,
// appending primes on clashes. Pre-order, so leftmost binders keep their name.
FormulaPtr rename_apart(const FormulaPtr& f, std::map<std::string, std::string>& v_map,
                        std::map<std::string, std::string>& s_map, std::set<std::string>& used) {
    if (!f) return f;
    auto fresh = [&](const std::string& base) {
        std::string name = base;
        while (used.count(name)) name += "'";
        used.insert(name);
        return name;
    };
    auto map_term = [&](const Term& t) {
        if (t.kind != Term::Kind::variable) return t;
        auto it = v_map.find(t.name);
        return it == v_map.end() ? t : Term::var(it->second);
    };
    switch (f->kind) {
        case FormKind::truth:
            return f;
        case FormKind::edge:
            return f::edge(map_term(f->lhs), map_term(f->rhs));
        case FormKind::arc:
            return f::arc(map_term(f->lhs), map_term(f->rhs));
        case FormKind::eq:
            return f::eq(map_term(f->lhs), map_term(f->rhs));
        case FormKind::in_color:
            return f::in_color(map_term(f->lhs), f->name);
        case FormKind::in_set: {
            auto it = s_map.find(f->name);
            return f::in_set(map_term(f->lhs), it == s_map.end() ? f->name : it->second);
        }
        case FormKind::not_:
            return f::not_(rename_apart(f->a, v_map, s_map, used));
        case FormKind::and_:
        case FormKind::or_:
        case FormKind::implies:
        case FormKind::iff: {
            FormulaPtr a = rename_apart(f->a, v_map, s_map, used);
            FormulaPtr b = rename_apart(f->b, v_map, s_map, used);
            Formula n;
            n.kind = f->kind;
            n.a = std::move(a);
            n.b = std::move(b);
            return std::make_shared<const Formula>(std::move(n));
        }
        case FormKind::exists_v:
        case FormKind::forall_v: {
            std::string name = fresh(f->name);
            auto saved = v_map.count(f->name) ? std::optional(v_map[f->name]) : std::nullopt;
            v_map[f->name] = name;
            FormulaPtr body = rename_apart(f->a, v_map, s_map, used);
            if (saved)
                v_map[f->name] = *saved;
            else
                v_map.erase(f->name);
            return f->kind == FormKind::exists_v ? f::exists_v(name, body)
                                                 : f::forall_v(name, body);
        }
        case FormKind::exists_s:
        case FormKind::forall_s: {
            std::string name = fresh(f->name);
            auto saved = s_map.count(f->name) ? std::optional(s_map[f->name]) : std::nullopt;
            s_map[f->name] = name;
            FormulaPtr body = rename_apart(f->a, v_map, s_map, used);
            if (saved)
                s_map[f->name] = *saved;
            else
                s_map.erase(f->name);
            return f->kind == FormKind::exists_s ? f::exists_s(name, body)
                                                 : f::forall_s(name, body);
        }
    }
    throw InputError("corrupt formula node");
}

struct PrefixEntry {
    FormKind kind;
    std::string var;
};

// Pulls quantifiers of an NNF, renamed-apart formula to the front.
FormulaPtr pull_quantifiers(const FormulaPtr& f, std::vector<PrefixEntry>& prefix) {
    switch (f->kind) {
        case FormKind::exists_v:
        case FormKind::forall_v:
        case FormKind::exists_s:
        case FormKind::forall_s: {
            prefix.push_back({f->kind, f->name});
            return pull_quantifiers(f->a, prefix);
        }
        case FormKind::and_:
        case FormKind::or_: {
            FormulaPtr a = pull_quantifiers(f->a, prefix);
            FormulaPtr b = pull_quantifiers(f->b, prefix);
            Formula n;
            n.kind = f->kind;
            n.a = std::move(a);
            n.b = std::move(b);
            return std::make_shared<const Formula>(std::move(n));
        }
        default:
            return f;
    }
}

}  // namespace

FormulaPtr to_nnf(const FormulaPtr& f) { return nnf_walk(f, false); }

FormulaPtr to_prenex(const FormulaPtr& f) {
    FormulaPtr nnf = to_nnf(f);
    std::set<std::string> used;
    collect_names(nnf, used);
    // Reserve every mentioned name, then rename binders apart.
    std::map<std::string, std::string> v_map, s_map;
    std::set<std::string> taken;
    for (const auto& n : used) taken.insert(n);
    // Binder names themselves are claimed as they are visited, so remove them
    // from the reserved pool first: a binder may keep its own name.
    struct Claim {
        static void binders(const FormulaPtr& f, std::set<std::string>& out) {
            if (!f) return;
            if (is_quantifier(f->kind)) out.insert(f->name);
            binders(f->a, out);
            binders(f->b, out);
        }
    };
    std::set<std::string> binder_names;
    Claim::binders(nnf, binder_names);
    for (const auto& n : binder_names) taken.erase(n);
    FormulaPtr renamed = rename_apart(nnf, v_map, s_map, taken);

    std::vector<PrefixEntry> prefix;
    FormulaPtr matrix = pull_quantifiers(renamed, prefix);
    FormulaPtr out = matrix;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
        Formula n;
        n.kind = it->kind;
        n.name = it->var;
        n.a = std::move(out);
        out = std::make_shared<const Formula>(std::move(n));
    }
    return out;
}

namespace {

std::string render_term(const Term& t) {
    return t.kind == Term::Kind::label ? "@" + t.name : t.name;
}

void render_walk(const FormulaPtr& f, std::ostringstream& os) {
    switch (f->kind) {
        case FormKind::truth:
            os << (f->value ? "true" : "false");
            return;
        case FormKind::edge:
            os << "E(" << render_term(f->lhs) << "," << render_term(f->rhs) << ")";
            return;
        case FormKind::arc:
            os << "D(" << render_term(f->lhs) << "," << render_term(f->rhs) << ")";
            return;
        case FormKind::eq:
            os << render_term(f->lhs) << " = " << render_term(f->rhs);
            return;
        case FormKind::in_color:
        case FormKind::in_set:
            os << render_term(f->lhs) << " in " << f->name;
            return;
        case FormKind::not_:
            os << "!";
            if (is_atom(f->a->kind) && f->a->kind != FormKind::eq && f->a->kind != FormKind::in_color &&
                f->a->kind != FormKind::in_set) {
                render_walk(f->a, os);
            } else {
                os << "(";
                render_walk(f->a, os);
                os << ")";
            }
            return;
        case FormKind::and_:
        case FormKind::or_:
        case FormKind::implies:
        case FormKind::iff: {
            const char* op = f->kind == FormKind::and_      ? " & "
                             : f->kind == FormKind::or_     ? " | "
                             : f->kind == FormKind::implies ? " -> "
                                                            : " <-> ";
            os << "(";
            // A left-operand quantifier needs parentheses or its body would
            // swallow the operator on the way back in.
            if (is_quantifier(f->a->kind)) {
                os << "(";
                render_walk(f->a, os);
                os << ")";
            } else {
                render_walk(f->a, os);
            }
            os << op;
            render_walk(f->b, os);
            os << ")";
            return;
        }
        case FormKind::exists_v:
        case FormKind::forall_v:
        case FormKind::exists_s:
        case FormKind::forall_s: {
            const char* kw = f->kind == FormKind::exists_v   ? "exists"
                             : f->kind == FormKind::forall_v ? "forall"
                             : f->kind == FormKind::exists_s ? "existsS"
                                                             : "forallS";
            os << kw << " " << f->name << ". ";
            render_walk(f->a, os);
            return;
        }
    }
}

}  // namespace

std::string render(const FormulaPtr& f) {
    std::ostringstream os;
    render_walk(f, os);
    return os.str();
}

}  // namespace ndmc
