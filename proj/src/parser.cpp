#include "ndmc/parser.hpp"

#include <cctype>
#include <optional>

namespace ndmc {

namespace {

enum class Tok {
    kw_exists, kw_forall, kw_exists_s, kw_forall_s, kw_in, kw_true, kw_false,
    kw_edge, kw_arc,
    ident, at_ident,
    lparen, rparen, comma, dot,
    bang, amp, pipe, arrow, darrow, eq, neq,
    end,
};

struct Token {
    Tok kind;
    std::string text;
    int line, column;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, current_.line, current_.column);
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token current_{Tok::end, "", 1, 1};

    int look(size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? static_cast<unsigned char>(text_[pos_ + ahead]) : -1;
    }

    void bump() {
        if (look() == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void advance() {
        while (true) {
            while (std::isspace(look())) bump();
            if (look() == '#') {
                while (look() != -1 && look() != '\n') bump();
                continue;
            }
            break;
        }
        int line = line_, col = col_;
        auto emit = [&](Tok k, std::string s) { current_ = {k, std::move(s), line, col}; };
        int c = look();
        if (c == -1) return emit(Tok::end, "");
        if (std::isalpha(c) || c == '_') {
            std::string word;
            while (std::isalnum(look()) || look() == '_') {
                word.push_back(static_cast<char>(look()));
                bump();
            }
            while (look() == '\'') {
                word.push_back('\'');
                bump();
            }
            if (word == "exists") return emit(Tok::kw_exists, word);
            if (word == "forall") return emit(Tok::kw_forall, word);
            if (word == "existsS") return emit(Tok::kw_exists_s, word);
            if (word == "forallS") return emit(Tok::kw_forall_s, word);
            if (word == "in") return emit(Tok::kw_in, word);
            if (word == "true") return emit(Tok::kw_true, word);
            if (word == "false") return emit(Tok::kw_false, word);
            if (word == "E") return emit(Tok::kw_edge, word);
            if (word == "D") return emit(Tok::kw_arc, word);
            return emit(Tok::ident, word);
        }
        switch (c) {
            case '@': {
                bump();
                if (!std::isalpha(look()) && look() != '_')
                    throw ParseError("expected label name after '@'", line_, col_);
                std::string word;
                while (std::isalnum(look()) || look() == '_') {
                    word.push_back(static_cast<char>(look()));
                    bump();
                }
                while (look() == '\'') {
                    word.push_back('\'');
                    bump();
                }
                return emit(Tok::at_ident, word);
            }
            case '(': bump(); return emit(Tok::lparen, "(");
            case ')': bump(); return emit(Tok::rparen, ")");
            case ',': bump(); return emit(Tok::comma, ",");
            case '.': bump(); return emit(Tok::dot, ".");
            case '&': bump(); return emit(Tok::amp, "&");
            case '|': bump(); return emit(Tok::pipe, "|");
            case '=': bump(); return emit(Tok::eq, "=");
            case '!':
                bump();
                if (look() == '=') {
                    bump();
                    return emit(Tok::neq, "!=");
                }
                return emit(Tok::bang, "!");
            case '-':
                bump();
                if (look() == '>') {
                    bump();
                    return emit(Tok::arrow, "->");
                }
                throw ParseError("expected '->'", line, col);
            case '<':
                bump();
                if (look() == '-' && look(1) == '>') {
                    bump();
                    bump();
                    return emit(Tok::darrow, "<->");
                }
                throw ParseError("expected '<->'", line, col);
            default:
                throw ParseError(std::string("unexpected character '") +
                                     static_cast<char>(c) + "'",
                                 line, col);
        }
    }
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    FormulaPtr parse() {
        FormulaPtr f = expr();
        if (lex_.peek().kind != Tok::end) lex_.fail("trailing input after formula");
        // Unbound-variable complaints wait until the structure is known, so a
        // malformed tail is reported as the syntax error it is.
        if (unbound_) throw *unbound_;
        return f;
    }

private:
    Lexer lex_;
    std::vector<std::string> v_scope_, s_scope_;
    std::optional<ParseError> unbound_;

    bool at(Tok k) const { return lex_.peek().kind == k; }

    Token expect(Tok k, const std::string& what) {
        if (!at(k)) lex_.fail("expected " + what);
        return lex_.take();
    }

    FormulaPtr expr() {
        switch (lex_.peek().kind) {
            case Tok::kw_exists:
            case Tok::kw_forall:
            case Tok::kw_exists_s:
            case Tok::kw_forall_s:
                return quantifier();
            default:
                return iff();
        }
    }

    FormulaPtr quantifier() {
        Token kw = lex_.take();
        Token var = expect(Tok::ident, "a variable name");
        expect(Tok::dot, "'.' after the bound variable");
        bool set_q = kw.kind == Tok::kw_exists_s || kw.kind == Tok::kw_forall_s;
        auto& scope = set_q ? s_scope_ : v_scope_;
        scope.push_back(var.text);
        FormulaPtr body = expr();
        scope.pop_back();
        switch (kw.kind) {
            case Tok::kw_exists: return f::exists_v(var.text, body);
            case Tok::kw_forall: return f::forall_v(var.text, body);
            case Tok::kw_exists_s: return f::exists_s(var.text, body);
            default: return f::forall_s(var.text, body);
        }
    }

    FormulaPtr iff() {
        FormulaPtr lhs = imp();
        while (at(Tok::darrow)) {
            lex_.take();
            lhs = f::iff(lhs, imp());
        }
        return lhs;
    }

    FormulaPtr imp() {
        FormulaPtr lhs = disj();
        if (at(Tok::arrow)) {
            lex_.take();
            return f::implies(lhs, imp());
        }
        return lhs;
    }

    FormulaPtr disj() {
        FormulaPtr lhs = conj();
        while (at(Tok::pipe)) {
            lex_.take();
            lhs = f::or_(lhs, conj());
        }
        return lhs;
    }

    FormulaPtr conj() {
        FormulaPtr lhs = unary();
        while (at(Tok::amp)) {
            lex_.take();
            lhs = f::and_(lhs, unary());
        }
        return lhs;
    }

    FormulaPtr unary() {
        if (at(Tok::bang)) {
            lex_.take();
            return f::not_(unary());
        }
        switch (lex_.peek().kind) {
            case Tok::kw_exists:
            case Tok::kw_forall:
            case Tok::kw_exists_s:
            case Tok::kw_forall_s:
                // A quantifier body extends as far right as possible.
                return quantifier();
            default:
                return primary();
        }
    }

    FormulaPtr primary() {
        switch (lex_.peek().kind) {
            case Tok::lparen: {
                lex_.take();
                FormulaPtr inner = expr();
                expect(Tok::rparen, "')'");
                return inner;
            }
            case Tok::kw_true:
                lex_.take();
                return f::truth(true);
            case Tok::kw_false:
                lex_.take();
                return f::truth(false);
            case Tok::kw_edge:
            case Tok::kw_arc: {
                Token kw = lex_.take();
                expect(Tok::lparen, "'(' after " + kw.text);
                Term a = term();
                expect(Tok::comma, "','");
                Term b = term();
                expect(Tok::rparen, "')'");
                return kw.kind == Tok::kw_edge ? f::edge(a, b) : f::arc(a, b);
            }
            case Tok::ident:
            case Tok::at_ident: {
                Term a = term();
                if (at(Tok::eq)) {
                    lex_.take();
                    return f::eq(a, term());
                }
                if (at(Tok::neq)) {
                    lex_.take();
                    return f::not_(f::eq(a, term()));
                }
                if (at(Tok::kw_in)) {
                    lex_.take();
                    Token name = expect(Tok::ident, "a set or color name after 'in'");
                    bool is_set = std::find(s_scope_.rbegin(), s_scope_.rend(), name.text) !=
                                  s_scope_.rend();
                    if (!is_set && std::find(v_scope_.rbegin(), v_scope_.rend(), name.text) !=
                                       v_scope_.rend())
                        throw ParseError("'" + name.text + "' is a vertex variable, not a set",
                                         name.line, name.column);
                    return is_set ? f::in_set(a, name.text) : f::in_color(a, name.text);
                }
                lex_.fail("expected '=', '!=' or 'in' after term");
            }
            default:
                lex_.fail("expected a formula");
        }
    }

    Term term() {
        switch (lex_.peek().kind) {
            case Tok::at_ident:
                return Term::label(lex_.take().text);
            case Tok::ident: {
                Token t = lex_.take();
                if (!unbound_ &&
                    std::find(v_scope_.rbegin(), v_scope_.rend(), t.text) == v_scope_.rend())
                    unbound_ = ParseError("unbound variable '" + t.text + "'", t.line, t.column);
                return Term::var(t.text);
            }
            default:
                lex_.fail("expected a term");
        }
    }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) { return Parser(text).parse(); }

}  // namespace ndmc
