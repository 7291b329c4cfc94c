#include "ndmc/naive.hpp"

#include <optional>

namespace ndmc {

bool check_well_formed(const Graph& g, const FormulaPtr& f, const EvalOptions& opts) {
    if (!is_sentence(f)) {
        auto fv = free_vertex_vars(f);
        auto fs = free_set_vars(f);
        std::string name = !fv.empty() ? fv.front() : fs.front();
        throw InputError("not a sentence: free variable '" + name + "'");
    }
    if (uses_edge_atoms(f) && g.directed)
        throw InputError("E(...) atoms cannot be checked against a digraph; use D(...)");
    if (uses_arc_atoms(f) && !g.directed)
        throw InputError("D(...) atoms cannot be checked against an undirected graph");
    for (const auto& name : mentioned_labels(f)) {
        if (g.labels.count(name)) continue;
        if (opts.missing_symbols_false) return false;
        throw InputError("label '@" + name + "' does not exist in the graph");
    }
    for (const auto& name : mentioned_colors(f)) {
        if (g.colors.count(name)) continue;
        if (opts.missing_symbols_false) return false;
        throw InputError("color '" + name + "' does not exist in the graph");
    }
    return true;
}

namespace {

class NaiveEval {
public:
    NaiveEval(const Graph& g, const EvalOptions& opts, EvalStats* stats)
        : g_(g), opts_(opts), stats_(stats) {}

    bool eval(const Formula* f) {
        visit();
        switch (f->kind) {
            case FormKind::truth:
                return f->value;
            case FormKind::edge:
            case FormKind::arc: {
                int u = resolve(f->lhs), v = resolve(f->rhs);
                return g_.has_arc(u, v) || (f->kind == FormKind::edge && g_.has_arc(v, u));
            }
            case FormKind::eq:
                return resolve(f->lhs) == resolve(f->rhs);
            case FormKind::in_color:
                return vs_contains(g_.colors.at(f->name), resolve(f->lhs));
            case FormKind::in_set:
                return vs_contains(env_.sets.at(f->name), resolve(f->lhs));
            case FormKind::not_:
                return !eval(f->a.get());
            case FormKind::and_:
                return eval(f->a.get()) && eval(f->b.get());
            case FormKind::or_:
                return eval(f->a.get()) || eval(f->b.get());
            case FormKind::implies:
                return !eval(f->a.get()) || eval(f->b.get());
            case FormKind::iff:
                return eval(f->a.get()) == eval(f->b.get());
            case FormKind::exists_v:
            case FormKind::forall_v: {
                bool exists = f->kind == FormKind::exists_v;
                auto saved = save(env_.vertex, f->name);
                for (int v = 0; v < g_.n; ++v) {
                    env_.vertex[f->name] = v;
                    bool r = eval(f->a.get());
                    if (r == exists) {
                        restore(env_.vertex, f->name, saved);
                        return exists;
                    }
                }
                restore(env_.vertex, f->name, saved);
                return !exists;
            }
            case FormKind::exists_s:
            case FormKind::forall_s: {
                bool exists = f->kind == FormKind::exists_s;
                auto saved = save(env_.sets, f->name);
                // Subsets ordered by cardinality, then lexicographically, so
                // short-circuiting hits small witnesses first.
                for (int k = 0; k <= g_.n; ++k) {
                    VertexSet subset(k);
                    for (int i = 0; i < k; ++i) subset[i] = i;
                    while (true) {
                        env_.sets[f->name] = subset;
                        bool r = eval(f->a.get());
                        if (r == exists) {
                            restore(env_.sets, f->name, saved);
                            return exists;
                        }
                        if (!next_combination(subset, g_.n)) break;
                    }
                }
                restore(env_.sets, f->name, saved);
                return !exists;
            }
        }
        throw InputError("corrupt formula node");
    }

private:
    const Graph& g_;
    const EvalOptions& opts_;
    EvalStats* stats_;
    Environment env_;
    uint64_t visits_ = 0;

    void visit() {
        ++visits_;
        if (stats_) stats_->visits = visits_;
        if (opts_.budget && visits_ > opts_.budget)
            throw ResourceError("node-visit budget of " + std::to_string(opts_.budget) +
                                " exceeded");
    }

    int resolve(const Term& t) const {
        if (t.kind == Term::Kind::label) return g_.labels.at(t.name);
        return env_.vertex.at(t.name);
    }

    template <typename M>
    std::optional<typename M::mapped_type> save(M& m, const std::string& key) {
        auto it = m.find(key);
        if (it == m.end()) return std::nullopt;
        return it->second;
    }

    template <typename M>
    void restore(M& m, const std::string& key, const std::optional<typename M::mapped_type>& v) {
        if (v)
            m[key] = *v;
        else
            m.erase(key);
    }

    static bool next_combination(VertexSet& c, int n) {
        int k = static_cast<int>(c.size());
        if (k == 0) return false;
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) return false;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        return true;
    }
};

}  // namespace

bool eval_naive(const Graph& g, const FormulaPtr& f, const EvalOptions& opts, EvalStats* stats) {
    if (!check_well_formed(g, f, opts)) return false;
    NaiveEval evaluator(g, opts, stats);
    return evaluator.eval(f.get());
}

}  // namespace ndmc
