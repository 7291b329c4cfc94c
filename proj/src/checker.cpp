#include "ndmc/checker.hpp"

#include <unordered_map>

namespace ndmc {

std::vector<int> mso_size_candidates(int class_size, int bound) {
    VertexSet out;
    for (int s = 0; s <= bound && s <= class_size; ++s) vs_insert(out, s);
    for (int s = std::max(0, class_size - bound); s <= class_size; ++s) vs_insert(out, s);
    return out;
}

std::vector<int> representatives(const CheckerState& state) {
    const Graph& g = *state.graph;
    std::vector<int> reps;
    std::vector<char> listed(g.n, 0);
    auto push = [&](int v) {
        if (!listed[v]) {
            listed[v] = 1;
            reps.push_back(v);
        }
    };
    std::vector<char> special(g.n, 0);
    for (const auto& [name, v] : g.labels) {
        special[v] = 1;
        push(v);
    }
    for (int v : state.bound_vertices) {
        special[v] = 1;
        push(v);
    }
    for (const auto& cls : state.partition.classes)
        for (int v : cls)
            if (!special[v]) {
                push(v);
                break;
            }
    return reps;
}

namespace {

struct NodeInfo {
    std::vector<std::string> free_v;  // sorted
    bool has_free_set = false;
    bool has_quantifier = false;
    int set_quantifiers = 0;  // in the subtree, including this node
    int vertex_quantifiers = 0;
};

struct MemoKey {
    const Formula* node;
    std::vector<int> values;  // bindings of the node's free vertex variables

    bool operator==(const MemoKey& o) const { return node == o.node && values == o.values; }
};

struct MemoKeyHash {
    size_t operator()(const MemoKey& k) const {
        size_t h = std::hash<const void*>()(k.node);
        for (int v : k.values) h = h * 1000003u + static_cast<size_t>(v) + 0x9e3779b9;
        return h;
    }
};

class FastChecker {
public:
    FastChecker(const Graph& g, const CheckerOptions& opts, CheckStats* stats)
        : g_(g), opts_(opts), stats_(stats) {}

    bool run(const FormulaPtr& sentence) {
        root_ = to_nnf(sentence);
        analyze(root_.get());
        const NodeInfo& top = info_.at(root_.get());
        qv_total_ = top.vertex_quantifiers;
        qs_total_ = top.set_quantifiers;

        classes_.push_back(neighborhood_partition(g_).classes);
        for (const auto& [name, v] : g_.labels) vs_insert(labeled_, v);
        if (stats_) {
            stats_->quantifiers = qv_total_;
            stats_->width = static_cast<int>(classes_.back().size());
            stats_->labels = static_cast<int>(g_.labels.size());
        }
        return eval(root_.get());
    }

private:
    const Graph& g_;
    const CheckerOptions& opts_;
    CheckStats* stats_;
    FormulaPtr root_;
    std::unordered_map<const Formula*, NodeInfo> info_;
    int qv_total_ = 0;
    int qs_total_ = 0;

    std::vector<std::vector<VertexSet>> classes_;  // refinement stack; back() is current
    VertexSet labeled_;
    std::vector<int> pinned_;  // bound vertices, binding order
    std::vector<std::pair<std::string, int>> venv_;
    std::vector<std::pair<std::string, VertexSet>> senv_;
    std::unordered_map<MemoKey, bool, MemoKeyHash> memo_;
    uint64_t visits_ = 0;

    const NodeInfo& analyze(const Formula* f) {
        auto it = info_.find(f);
        if (it != info_.end()) return it->second;
        NodeInfo ni;
        switch (f->kind) {
            case FormKind::truth:
                break;
            case FormKind::edge:
            case FormKind::arc:
            case FormKind::eq: {
                if (f->lhs.kind == Term::Kind::variable) ni.free_v.push_back(f->lhs.name);
                if (f->rhs.kind == Term::Kind::variable) ni.free_v.push_back(f->rhs.name);
                break;
            }
            case FormKind::in_color:
                if (f->lhs.kind == Term::Kind::variable) ni.free_v.push_back(f->lhs.name);
                break;
            case FormKind::in_set:
                if (f->lhs.kind == Term::Kind::variable) ni.free_v.push_back(f->lhs.name);
                ni.has_free_set = true;
                break;
            default: {
                for (const Formula* child : {f->a.get(), f->b.get()}) {
                    if (!child) continue;
                    const NodeInfo& ci = analyze(child);
                    for (const auto& v : ci.free_v) ni.free_v.push_back(v);
                    ni.has_free_set |= ci.has_free_set;
                    ni.has_quantifier |= ci.has_quantifier;
                    ni.set_quantifiers += ci.set_quantifiers;
                    ni.vertex_quantifiers += ci.vertex_quantifiers;
                }
                if (is_quantifier(f->kind)) {
                    ni.has_quantifier = true;
                    if (f->kind == FormKind::exists_v || f->kind == FormKind::forall_v) {
                        ni.vertex_quantifiers += 1;
                        std::erase(ni.free_v, f->name);
                    } else {
                        ni.set_quantifiers += 1;
                        // A set binder hides its own uses; recompute from body.
                        ni.has_free_set = body_has_other_free_set(f);
                    }
                }
                break;
            }
        }
        std::sort(ni.free_v.begin(), ni.free_v.end());
        ni.free_v.erase(std::unique(ni.free_v.begin(), ni.free_v.end()), ni.free_v.end());
        return info_.emplace(f, std::move(ni)).first->second;
    }

    // Whether the body of a set quantifier mentions a set variable other than
    // the one it binds (scope-aware walk).
    bool body_has_other_free_set(const Formula* q) {
        std::vector<std::string> scope{q->name};
        return free_set_walk(q->a.get(), scope);
    }

    bool free_set_walk(const Formula* f, std::vector<std::string>& scope) {
        if (!f) return false;
        if (f->kind == FormKind::in_set)
            return std::find(scope.begin(), scope.end(), f->name) == scope.end();
        if (f->kind == FormKind::exists_s || f->kind == FormKind::forall_s) {
            scope.push_back(f->name);
            bool r = free_set_walk(f->a.get(), scope);
            scope.pop_back();
            return r;
        }
        return free_set_walk(f->a.get(), scope) || free_set_walk(f->b.get(), scope);
    }

    void visit() {
        ++visits_;
        if (stats_) stats_->visits = visits_;
        if (opts_.budget && visits_ > opts_.budget)
            throw ResourceError("node-visit budget of " + std::to_string(opts_.budget) +
                                " exceeded");
    }

    int lookup_vertex(const std::string& name) const {
        for (auto it = venv_.rbegin(); it != venv_.rend(); ++it)
            if (it->first == name) return it->second;
        throw InputError("unbound vertex variable '" + name + "'");
    }

    const VertexSet& lookup_set(const std::string& name) const {
        for (auto it = senv_.rbegin(); it != senv_.rend(); ++it)
            if (it->first == name) return it->second;
        throw InputError("unbound set variable '" + name + "'");
    }

    int resolve(const Term& t) const {
        return t.kind == Term::Kind::label ? g_.labels.at(t.name) : lookup_vertex(t.name);
    }

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
                return vs_contains(lookup_set(f->name), resolve(f->lhs));
            case FormKind::not_:
                return !eval(f->a.get());
            case FormKind::and_:
                return eval(f->a.get()) && eval(f->b.get());
            case FormKind::or_:
                return eval(f->a.get()) || eval(f->b.get());
            case FormKind::exists_v:
            case FormKind::forall_v:
                return memoized(f, [&] { return eval_vertex_quantifier(f); });
            case FormKind::exists_s:
            case FormKind::forall_s:
                return memoized(f, [&] { return eval_set_quantifier(f); });
            default:
                throw InputError("normalized formula contains " +
                                 std::string(f->kind == FormKind::implies ? "->" : "<->"));
        }
    }

    template <typename Fn>
    bool memoized(const Formula* f, Fn&& compute) {
        if (!opts_.memoize) return compute();
        const NodeInfo& ni = info_.at(f);
        // Results of subformulas with free set variables are not cached: their
        // keys would have to embed whole sets, which costs more than it saves.
        if (ni.has_free_set) return compute();
        MemoKey key{f, {}};
        key.values.reserve(ni.free_v.size());
        for (const auto& name : ni.free_v) key.values.push_back(lookup_vertex(name));
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool result = compute();
        memo_.emplace(std::move(key), result);
        return result;
    }

    std::vector<int> current_representatives() const {
        const Graph& g = g_;
        std::vector<int> reps;
        std::vector<char> listed(g.n, 0), special(g.n, 0);
        auto push = [&](int v) {
            if (!listed[v]) {
                listed[v] = 1;
                reps.push_back(v);
            }
        };
        for (const auto& [name, v] : g.labels) {
            special[v] = 1;
            push(v);
        }
        for (int v : pinned_) {
            special[v] = 1;
            push(v);
        }
        for (const auto& cls : classes_.back())
            for (int v : cls)
                if (!special[v]) {
                    push(v);
                    break;
                }
        return reps;
    }

    bool eval_vertex_quantifier(const Formula* f) {
        bool exists = f->kind == FormKind::exists_v;
        bool innermost = !info_.at(f->a.get()).has_quantifier;
        std::vector<int> reps = current_representatives();
        venv_.emplace_back(f->name, -1);
        pinned_.push_back(-1);
        bool result = !exists;
        for (int v : reps) {
            if (innermost && stats_) stats_->branches += 1;
            venv_.back().second = v;
            pinned_.back() = v;
            if (eval(f->a.get()) == exists) {
                result = exists;
                break;
            }
        }
        pinned_.pop_back();
        venv_.pop_back();
        return result;
    }

    bool eval_set_quantifier(const Formula* f) {
        bool exists = f->kind == FormKind::exists_s;
        const NodeInfo& body = info_.at(f->a.get());
        int qs_below = opts_.conservative_set_bound ? qs_total_ : body.set_quantifiers;
        long long bound = (1LL << std::min(qs_below, 30)) *
                          std::max<long long>(qv_total_, 1);

        // Labeled and bound vertices are special: their membership is decided
        // one by one. Everything else only matters through per-class counts.
        VertexSet special = labeled_;
        for (int v : pinned_) vs_insert(special, v);

        const std::vector<VertexSet>& current = classes_.back();
        std::vector<VertexSet> pools;
        std::vector<std::vector<int>> candidates;
        for (const auto& cls : current) {
            VertexSet pool = vs_subtract(cls, special);
            int limit = static_cast<int>(std::min<long long>(bound, g_.n));
            candidates.push_back(mso_size_candidates(static_cast<int>(pool.size()), limit));
            pools.push_back(std::move(pool));
        }

        senv_.emplace_back(f->name, VertexSet{});
        bool result = !exists;
        bool done = false;
        size_t n_special = special.size();
        for (uint64_t mask = 0; mask < (1ull << n_special) && !done; ++mask) {
            VertexSet fixed;
            for (size_t i = 0; i < n_special; ++i)
                if (mask & (1ull << i)) fixed.push_back(special[i]);

            std::vector<size_t> pick(pools.size(), 0);
            while (true) {
                VertexSet sample = fixed;
                for (size_t c = 0; c < pools.size(); ++c) {
                    int take = candidates[c][pick[c]];
                    for (int i = 0; i < take; ++i) vs_insert(sample, pools[c][i]);
                }
                if (stats_) stats_->set_choices += 1;
                senv_.back().second = sample;
                classes_.push_back(split_classes(classes_.back(), sample));
                bool r = eval(f->a.get());
                classes_.pop_back();
                if (r == exists) {
                    result = exists;
                    done = true;
                    break;
                }
                // Odometer over per-class size candidates.
                size_t c = 0;
                while (c < pick.size() && pick[c] + 1 == candidates[c].size()) {
                    pick[c] = 0;
                    ++c;
                }
                if (c == pick.size()) break;
                pick[c] += 1;
            }
        }
        senv_.pop_back();
        return result;
    }
};

void check_common(const FormulaPtr& f) {
    if (!f) throw InputError("null formula");
}

}  // namespace

bool check_mso(const Graph& g, const FormulaPtr& f, const CheckerOptions& opts,
               CheckStats* stats) {
    check_common(f);
    EvalOptions eopts;
    eopts.missing_symbols_false = opts.missing_symbols_false;
    if (!check_well_formed(g, f, eopts)) return false;
    FastChecker checker(g, opts, stats);
    return checker.run(f);
}

bool check_fo(const Graph& g, const FormulaPtr& f, const CheckerOptions& opts,
              CheckStats* stats) {
    check_common(f);
    if (metrics(f).q_s > 0)
        throw InputError("sentence has set quantifiers; use check_mso");
    return check_mso(g, f, opts, stats);
}

}  // namespace ndmc
