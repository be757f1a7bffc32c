#include "pga/syntax.hpp"

#include "pga/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace pga {

// -- built-ins --

std::string_view builtin_name(BuiltinKind k) {
    switch (k) {
        case BuiltinKind::UnifyEq: return "=";
        case BuiltinKind::Lt: return "<";
        case BuiltinKind::Gt: return ">";
        case BuiltinKind::Le: return "=<";
        case BuiltinKind::Ge: return ">=";
        case BuiltinKind::ArithEq: return "=:=";
        case BuiltinKind::ArithNe: return "=\\=";
        case BuiltinKind::Is: return "is";
        case BuiltinKind::True: return "true";
        case BuiltinKind::Fail: return "fail";
    }
    return "?";
}

std::size_t builtin_arity(BuiltinKind k) {
    return (k == BuiltinKind::True || k == BuiltinKind::Fail) ? 0 : 2;
}

Literal Literal::call(Atom atom) {
    Literal l;
    l.atom_ = std::move(atom);
    return l;
}

Literal Literal::builtin(BuiltinKind kind, std::vector<Term> args) {
    if (args.size() != builtin_arity(kind))
        throw std::invalid_argument("wrong number of arguments for built-in " + std::string(builtin_name(kind)));
    Literal l;
    l.kind_ = kind;
    l.args_ = std::move(args);
    return l;
}

std::vector<Var> Literal::vars() const {
    if (is_call()) return atom_.vars();
    std::vector<Var> out;
    for (const auto& a : args_) collect_vars(a, out);
    return out;
}

Clause::Clause(std::size_t id, Atom head, std::vector<Literal> body)
    : id_(id), head_(std::move(head)), body_(std::move(body)) {
    collect_vars(head_.as_term(), vars_);
    for (const auto& l : body_) {
        if (l.is_call()) {
            collect_vars(l.atom().as_term(), vars_);
        } else {
            for (const auto& a : l.args()) collect_vars(a, vars_);
        }
    }
}

ParamTable Directive::params() const {
    ParamTable t;
    for (const auto& [v, b] : bindings)
        if (const auto* p = std::get_if<Symbol>(&b)) t.add(*p);
    return t;
}

const ParamOrMode* Directive::binding_of(const Var& v) const {
    for (const auto& [x, b] : bindings)
        if (x == v) return &b;
    return nullptr;
}

Program::Program(std::vector<Clause> clauses, Directive directive)
    : clauses_(std::move(clauses)), directive_(std::move(directive)) {
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
        if (clauses_[i].id() != i) throw std::invalid_argument("clause ids must follow program order");
        by_pred_[key_of(clauses_[i].head())].push_back(i);
    }
}

std::span<const std::size_t> Program::clauses_for(const PredKey& key) const {
    auto it = by_pred_.find(key);
    if (it == by_pred_.end()) return {};
    return it->second;
}

std::vector<PredKey> Program::undefined_calls() const {
    std::vector<PredKey> out;
    auto note = [&](const Atom& a) {
        auto k = key_of(a);
        if (!defines(k) && std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    };
    note(directive_.goal);
    for (const auto& c : clauses_)
        for (const auto& l : c.body())
            if (l.is_call()) note(l.atom());
    return out;
}

// -- lexer --

namespace {

enum class Tok { Var, Name, Number, Quoted, Punct, Op, End, Eof };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

bool is_symbol_char(char c) {
    return std::string_view("+-*/\\^<>=~:.?@#&$").find(c) != std::string_view::npos;
}

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_layout();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::Eof, "", line_, col_});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    char peek(std::size_t k = 0) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_layout() {
        while (pos_ < src_.size()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '%') {
                while (pos_ < src_.size() && peek() != '\n') advance();
            } else if (c == '/' && peek(1) == '*') {
                advance();
                advance();
                while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) advance();
                if (pos_ >= src_.size()) throw SyntaxError("unterminated block comment", line_, col_);
                advance();
                advance();
            } else {
                break;
            }
        }
    }

    bool layout_follows(std::size_t at) const {
        if (at >= src_.size()) return true;
        char c = src_[at];
        return std::isspace(static_cast<unsigned char>(c)) || c == '%';
    }

    Token next() {
        const std::size_t line = line_, col = col_;
        const char c = peek();
        std::string text;
        if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
            while (is_alnum(peek())) {
                text += peek();
                advance();
            }
            return {Tok::Var, text, line, col};
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            while (is_alnum(peek())) {
                text += peek();
                advance();
            }
            return {Tok::Name, text, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                text += peek();
                advance();
            }
            return {Tok::Number, text, line, col};
        }
        if (c == '\'') {
            advance();
            for (;;) {
                if (pos_ >= src_.size() || peek() == '\n') throw SyntaxError("unterminated quoted atom", line, col);
                if (peek() == '\'') {
                    if (peek(1) == '\'') {
                        text += '\'';
                        advance();
                        advance();
                        continue;
                    }
                    advance();
                    break;
                }
                text += peek();
                advance();
            }
            return {Tok::Quoted, text, line, col};
        }
        if (std::string_view("()[],|").find(c) != std::string_view::npos) {
            advance();
            return {Tok::Punct, std::string(1, c), line, col};
        }
        if (c == '!') throw SyntaxError("cut is not supported", line, col);
        if (c == ';') throw SyntaxError("disjunction is not supported", line, col);
        if (is_symbol_char(c)) {
            std::size_t end = pos_;
            while (end < src_.size() && is_symbol_char(src_[end])) ++end;
            // a trailing '.' before layout is the clause terminator
            if (end - pos_ > 1 && src_[end - 1] == '.' && layout_follows(end)) --end;
            while (pos_ < end) {
                text += peek();
                advance();
            }
            if (text == "." ) {
                if (!layout_follows(pos_)) throw SyntaxError("unexpected '.'", line, col);
                return {Tok::End, text, line, col};
            }
            return {Tok::Op, text, line, col};
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

// -- parser --

std::optional<BuiltinKind> relational_op(std::string_view op) {
    if (op == "=") return BuiltinKind::UnifyEq;
    if (op == "<") return BuiltinKind::Lt;
    if (op == ">") return BuiltinKind::Gt;
    if (op == "=<") return BuiltinKind::Le;
    if (op == ">=") return BuiltinKind::Ge;
    if (op == "=:=") return BuiltinKind::ArithEq;
    if (op == "=\\=") return BuiltinKind::ArithNe;
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {
        for (const auto& t : toks_)
            if (t.kind == Tok::Var) used_names_.insert(t.text);
    }

    Program program() {
        std::vector<Clause> clauses;
        std::optional<Directive> directive;
        while (peek().kind != Tok::Eof) {
            if (peek().kind == Tok::Op && peek().text == ":-") {
                const Token at = take();
                if (directive) throw DirectiveError(loc(at) + "more than one analyze directive");
                directive = parse_directive();
            } else {
                clauses.push_back(parse_clause(clauses.size()));
            }
        }
        if (!directive) throw DirectiveError("missing ':- analyze(Goal, Bindings).' directive");
        return Program(std::move(clauses), std::move(*directive));
    }

    Term single_term() {
        Term t = expr();
        if (peek().kind == Tok::End) take();
        expect_kind(Tok::Eof, "end of input");
        return t;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    static std::string loc(const Token& t) {
        return std::to_string(t.line) + ":" + std::to_string(t.col) + ": ";
    }

    [[noreturn]] void fail(const Token& t, const std::string& msg) const {
        throw SyntaxError(msg + (t.kind == Tok::Eof ? " at end of input" : " near '" + t.text + "'"), t.line, t.col);
    }

    bool at_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }

    void expect_punct(char c) {
        if (!at_punct(c)) fail(peek(), std::string("expected '") + c + "'");
        take();
    }

    void expect_kind(Tok k, const char* what) {
        if (peek().kind != k) fail(peek(), std::string("expected ") + what);
        take();
    }

    Var fresh_anonymous() {
        std::string name;
        do {
            name = "_G" + std::to_string(++anon_);
        } while (used_names_.count(name));
        return Var::named(name);
    }

    // Arithmetic expressions: additive over multiplicative over primaries.
    Term expr() {
        Term left = mul_expr();
        while (peek().kind == Tok::Op && (peek().text == "+" || peek().text == "-")) {
            Symbol op = Symbol::intern(take().text);
            left = Term::compound(op, {left, mul_expr()});
        }
        return left;
    }

    Term mul_expr() {
        Term left = primary();
        while (peek().kind == Tok::Op && (peek().text == "*" || peek().text == "/")) {
            Symbol op = Symbol::intern(take().text);
            left = Term::compound(op, {left, primary()});
        }
        return left;
    }

    Term primary() {
        const Token t = peek();
        switch (t.kind) {
            case Tok::Var:
                take();
                if (t.text == "_") return Term::variable(fresh_anonymous());
                return Term::variable(t.text);
            case Tok::Number:
                take();
                return Term::compound(t.text);
            case Tok::Name:
            case Tok::Quoted: {
                take();
                if (t.kind == Tok::Name && t.text == "is") fail(t, "unexpected operator");
                if (at_punct('(') ) {
                    take();
                    std::vector<Term> args{expr()};
                    while (at_punct(',')) {
                        take();
                        args.push_back(expr());
                    }
                    expect_punct(')');
                    return Term::compound(t.text, std::move(args));
                }
                return Term::compound(t.text);
            }
            case Tok::Punct:
                if (t.text == "(") {
                    take();
                    Term inner = expr();
                    expect_punct(')');
                    return inner;
                }
                if (t.text == "[") return list();
                break;
            case Tok::Op:
                if (t.text == "\\+") fail(t, "negation is not supported");
                if (t.text == "->") fail(t, "if-then-else is not supported");
                break;
            default:
                break;
        }
        fail(t, "expected a term");
    }

    Term list() {
        expect_punct('[');
        if (at_punct(']')) {
            take();
            return Term::compound("[]");
        }
        std::vector<Term> items{expr()};
        while (at_punct(',')) {
            take();
            items.push_back(expr());
        }
        Term tail = Term::compound("[]");
        if (at_punct('|')) {
            take();
            tail = expr();
        }
        expect_punct(']');
        for (auto it = items.rbegin(); it != items.rend(); ++it) tail = Term::compound(".", {*it, tail});
        return tail;
    }

    Atom head_atom(const Token& at, const Term& t) {
        if (t.is_var()) fail(at, "a variable cannot be used as a clause head or goal");
        const std::string& n = t.functor().str();
        if (!n.empty() && std::isdigit(static_cast<unsigned char>(n[0]))) fail(at, "a number cannot be used as a predicate");
        return Atom::from_term(t);
    }

    Literal literal() {
        const Token at = peek();
        if (at.kind == Tok::Name && at.text == "is") fail(at, "unexpected operator");
        Term left = expr();
        if (peek().kind == Tok::Name && peek().text == "is") {
            take();
            return Literal::builtin(BuiltinKind::Is, {left, expr()});
        }
        if (peek().kind == Tok::Op) {
            const Token op = take();
            auto kind = relational_op(op.text);
            if (!kind) fail(op, "unsupported operator");
            return Literal::builtin(*kind, {left, expr()});
        }
        if (!left.is_var() && left.arity() == 0) {
            if (left.functor().str() == "true") return Literal::builtin(BuiltinKind::True, {});
            if (left.functor().str() == "fail") return Literal::builtin(BuiltinKind::Fail, {});
        }
        return Literal::call(head_atom(at, left));
    }

    Clause parse_clause(std::size_t id) {
        const Token at = peek();
        Atom head = head_atom(at, expr());
        std::vector<Literal> body;
        if (peek().kind == Tok::Op && peek().text == ":-") {
            take();
            body.push_back(literal());
            while (at_punct(',')) {
                take();
                body.push_back(literal());
            }
        }
        if (peek().kind != Tok::End) fail(peek(), "expected '.' at end of clause");
        take();
        return Clause(id, std::move(head), std::move(body));
    }

    Directive parse_directive() {
        const Token name = peek();
        if (name.kind != Tok::Name || name.text != "analyze")
            throw DirectiveError(loc(name) + "only the analyze/2 directive is supported");
        take();
        expect_punct('(');
        const Token goal_at = peek();
        Term goal_term = primary();
        Atom goal = head_atom(goal_at, goal_term);
        expect_punct(',');
        expect_punct('[');
        Directive d{goal, {}};
        const std::vector<Var> goal_vars = goal.vars();
        if (!at_punct(']')) {
            for (;;) {
                const Token v = peek();
                if (v.kind != Tok::Var || v.text == "_") fail(v, "expected a goal variable");
                take();
                if (!(peek().kind == Tok::Op && peek().text == "=")) fail(peek(), "expected '='");
                take();
                const Token p = peek();
                if (p.kind != Tok::Name) fail(p, "expected a parameter name or g/u");
                take();
                Var var = Var::named(v.text);
                if (std::find(goal_vars.begin(), goal_vars.end(), var) == goal_vars.end())
                    throw DirectiveError(loc(v) + "variable " + v.text + " does not occur in the goal");
                if (d.binding_of(var)) throw DirectiveError(loc(v) + "variable " + v.text + " is bound twice");
                if (auto m = parse_mode(p.text)) {
                    d.bindings.emplace_back(var, *m);
                } else {
                    d.bindings.emplace_back(var, Symbol::intern(p.text));
                }
                if (!at_punct(',')) break;
                take();
            }
        }
        expect_punct(']');
        expect_punct(')');
        if (peek().kind != Tok::End) fail(peek(), "expected '.' after directive");
        take();
        for (const auto& v : goal_vars)
            if (!d.binding_of(v)) throw DirectiveError(loc(goal_at) + "goal variable " + v.str() + " has no binding");
        return d;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::set<std::string> used_names_;
    std::size_t anon_ = 0;
};

// -- rendering --

bool is_plain_name(const std::string& n) {
    if (n == "[]") return true;
    if (n.empty()) return false;
    if (std::all_of(n.begin(), n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) return true;
    if (!std::islower(static_cast<unsigned char>(n[0]))) return false;
    return std::all_of(n.begin(), n.end(), is_alnum);
}

std::string quote_name(const std::string& n) {
    if (is_plain_name(n)) return n;
    std::string q = "'";
    for (char c : n) {
        if (c == '\'') q += '\'';
        q += c;
    }
    return q + "'";
}

int op_priority(const Term& t) {
    if (t.is_var() || t.arity() != 2) return 0;
    const std::string& f = t.functor().str();
    if (f == "+" || f == "-") return 500;
    if (f == "*" || f == "/") return 400;
    return 0;
}

void render_into(const Term& t, std::string& out);

void render_operand(const Term& t, bool parens, std::string& out) {
    if (parens) out += "(";
    render_into(t, out);
    if (parens) out += ")";
}

void render_into(const Term& t, std::string& out) {
    if (t.is_var()) {
        out += t.var().str();
        return;
    }
    const std::string& f = t.functor().str();
    if (f == "." && t.arity() == 2) {
        out += "[";
        Term cur = t;
        bool first = true;
        while (!cur.is_var() && cur.functor().str() == "." && cur.arity() == 2) {
            if (!first) out += ",";
            first = false;
            render_into(cur.arg(0), out);
            cur = cur.arg(1);
        }
        if (cur.is_var() || cur.functor().str() != "[]" || cur.arity() != 0) {
            out += "|";
            render_into(cur, out);
        }
        out += "]";
        return;
    }
    if (int p = op_priority(t)) {
        render_operand(t.arg(0), op_priority(t.arg(0)) > p, out);
        out += f;
        render_operand(t.arg(1), op_priority(t.arg(1)) >= p, out);
        return;
    }
    out += quote_name(f);
    if (t.arity() == 0) return;
    out += "(";
    for (std::size_t i = 0; i < t.arity(); ++i) {
        if (i) out += ",";
        render_into(t.arg(i), out);
    }
    out += ")";
}

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

Term parse_term(std::string_view text) { return Parser(text).single_term(); }

Atom parse_atom(std::string_view text) {
    Term t = parse_term(text);
    if (t.is_var()) throw SyntaxError("expected an atom", 1, 1);
    return Atom::from_term(t);
}

std::string render(const Term& t) {
    std::string out;
    render_into(t, out);
    return out;
}

std::string render(const Atom& a) { return render(a.as_term()); }

std::string render(const Literal& l) {
    if (l.is_call()) return render(l.atom());
    if (l.args().empty()) return std::string(builtin_name(l.kind()));
    return render(l.args()[0]) + " " + std::string(builtin_name(l.kind())) + " " + render(l.args()[1]);
}

std::string render(const Clause& c) {
    std::string out = render(c.head());
    for (std::size_t i = 0; i < c.body().size(); ++i) {
        out += i ? ", " : " :- ";
        out += render(c.body()[i]);
    }
    return out + ".";
}

std::string render(const Directive& d) {
    std::string out = ":- analyze(" + render(d.goal) + ", [";
    for (std::size_t i = 0; i < d.bindings.size(); ++i) {
        if (i) out += ", ";
        out += d.bindings[i].first.str() + " = ";
        const auto& b = d.bindings[i].second;
        out += std::holds_alternative<Mode>(b) ? std::string(to_string(std::get<Mode>(b))) : std::get<Symbol>(b).str();
    }
    return out + "]).";
}

std::string render(const Program& p) {
    std::string out = render(p.directive()) + "\n";
    for (const auto& c : p.clauses()) out += render(c) + "\n";
    return out;
}

}  // namespace pga
