#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ndmc/common.hpp"

namespace ndmc {

/// A term is either a quantified vertex variable or a graph label (written
/// `@name` in the concrete syntax).
struct Term {
    enum class Kind { variable, label };
    Kind kind = Kind::variable;
    std::string name;

    static Term var(std::string n) { return {Kind::variable, std::move(n)}; }
    static Term label(std::string n) { return {Kind::label, std::move(n)}; }

    bool operator==(const Term& o) const { return kind == o.kind && name == o.name; }
};

enum class FormKind : uint8_t {
    truth,     // constant true/false
    edge,      // E(t1,t2), undirected graphs
    arc,       // D(t1,t2), digraphs
    eq,        // t1 = t2
    in_color,  // t in <color>
    in_set,    // t in <set variable>
    not_,
    and_,
    or_,
    implies,
    iff,
    exists_v,
    forall_v,
    exists_s,
    forall_s,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable AST node. Which fields are meaningful depends on `kind`:
/// atoms use `lhs`/`rhs`/`name`, connectives use `a`/`b`, quantifiers use
/// `name` (the bound variable) and `a` (the body).
struct Formula {
    FormKind kind = FormKind::truth;
    bool value = false;
    Term lhs, rhs;
    std::string name;
    FormulaPtr a, b;
};

namespace f {
FormulaPtr truth(bool value);
FormulaPtr edge(Term a, Term b);
FormulaPtr arc(Term a, Term b);
FormulaPtr eq(Term a, Term b);
FormulaPtr in_color(Term t, std::string color);
FormulaPtr in_set(Term t, std::string set_var);
FormulaPtr not_(FormulaPtr a);
FormulaPtr and_(FormulaPtr a, FormulaPtr b);
FormulaPtr or_(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);
FormulaPtr exists_v(std::string var, FormulaPtr body);
FormulaPtr forall_v(std::string var, FormulaPtr body);
FormulaPtr exists_s(std::string var, FormulaPtr body);
FormulaPtr forall_s(std::string var, FormulaPtr body);
/// Conjunction of a list; empty list is the constant true.
FormulaPtr conj(std::vector<FormulaPtr> parts);
/// Disjunction of a list; empty list is the constant false.
FormulaPtr disj(std::vector<FormulaPtr> parts);
}  // namespace f

struct SentenceMetrics {
    int q_v = 0;     ///< vertex quantifier count
    int q_s = 0;     ///< set quantifier count
    int depth = 0;   ///< quantifier nesting depth
    int size = 0;    ///< AST node count
    int label_count = 0;  ///< labels of the paired graph, when provided
};

struct Graph;
SentenceMetrics metrics(const FormulaPtr& f);
SentenceMetrics metrics(const FormulaPtr& f, const Graph& g);

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);

bool is_quantifier(FormKind k);
bool is_atom(FormKind k);

/// Free vertex variables (sorted, unique).
std::vector<std::string> free_vertex_vars(const FormulaPtr& f);
/// Free set variables (sorted, unique).
std::vector<std::string> free_set_vars(const FormulaPtr& f);
bool is_sentence(const FormulaPtr& f);

std::set<std::string> mentioned_colors(const FormulaPtr& f);
std::set<std::string> mentioned_labels(const FormulaPtr& f);
bool uses_edge_atoms(const FormulaPtr& f);
bool uses_arc_atoms(const FormulaPtr& f);

/// Negation normal form: implications and equivalences expanded (equivalences
/// by duplication), negations pushed down to atoms, double negations removed.
FormulaPtr to_nnf(const FormulaPtr& f);

/// Logically equivalent prenex sentence: connective elimination, NNF,
/// capture-free renaming (clashing binders get primes), then quantifier
/// extraction front-to-back.
FormulaPtr to_prenex(const FormulaPtr& f);

/// Concrete syntax, re-parseable by `parse_formula`.
std::string render(const FormulaPtr& f);

}  // namespace ndmc
