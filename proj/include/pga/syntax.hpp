#pragma once

#include "pga/mode.hpp"
#include "pga/poly.hpp"
#include "pga/term.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pga {

enum class BuiltinKind { UnifyEq, Lt, Gt, Le, Ge, ArithEq, ArithNe, Is, True, Fail };

std::string_view builtin_name(BuiltinKind k);
std::size_t builtin_arity(BuiltinKind k);

/// A body goal: a call to a user predicate or one of the recognized built-ins.
class Literal {
public:
    static Literal call(Atom atom);
    /// Throws std::invalid_argument if the argument count does not match.
    static Literal builtin(BuiltinKind kind, std::vector<Term> args);

    bool is_call() const { return !kind_.has_value(); }
    const Atom& atom() const { return atom_; }
    BuiltinKind kind() const { return *kind_; }
    std::span<const Term> args() const { return args_; }
    std::vector<Var> vars() const;

    friend bool operator==(const Literal&, const Literal&) = default;

private:
    std::optional<BuiltinKind> kind_;
    Atom atom_;
    std::vector<Term> args_;
};

class Clause {
public:
    Clause(std::size_t id, Atom head, std::vector<Literal> body);

    std::size_t id() const { return id_; }
    const Atom& head() const { return head_; }
    std::span<const Literal> body() const { return body_; }
    /// Variables of head and body in first-occurrence order.
    std::span<const Var> vars() const { return vars_; }

    friend bool operator==(const Clause& a, const Clause& b) {
        return a.id_ == b.id_ && a.head_ == b.head_ && a.body_ == b.body_;
    }

private:
    std::size_t id_;
    Atom head_;
    std::vector<Literal> body_;
    std::vector<Var> vars_;
};

/// A goal variable is bound either to a mode parameter or to a literal mode.
using ParamOrMode = std::variant<Symbol, Mode>;

struct Directive {
    Atom goal;
    std::vector<std::pair<Var, ParamOrMode>> bindings;

    /// Parameters in order of first use.
    ParamTable params() const;
    const ParamOrMode* binding_of(const Var& v) const;

    friend bool operator==(const Directive&, const Directive&) = default;
};

class Program {
public:
    Program(std::vector<Clause> clauses, Directive directive);

    std::span<const Clause> clauses() const { return clauses_; }
    const Clause& clause(std::size_t id) const { return clauses_.at(id); }
    const Directive& directive() const { return directive_; }

    /// Clause ids defining `key`, in program order.
    std::span<const std::size_t> clauses_for(const PredKey& key) const;
    bool defines(const PredKey& key) const { return by_pred_.count(key) != 0; }
    /// Called predicates with no defining clause, in order of first call.
    std::vector<PredKey> undefined_calls() const;

    friend bool operator==(const Program& a, const Program& b) {
        return a.clauses_ == b.clauses_ && a.directive_ == b.directive_;
    }

private:
    std::vector<Clause> clauses_;
    Directive directive_;
    std::map<PredKey, std::vector<std::size_t>> by_pred_;
};

/// Parses the analyzed Prolog subset. Throws SyntaxError for malformed input
/// and DirectiveError when the `:- analyze(Goal, Bindings).` directive is
/// missing, repeated, or inconsistent with the goal.
Program parse_program(std::string_view text);
/// Parses a single term, e.g. `f(X,[a|T])`.
Term parse_term(std::string_view text);
Atom parse_atom(std::string_view text);

std::string render(const Term& t);
std::string render(const Atom& a);
std::string render(const Literal& l);
std::string render(const Clause& c);
std::string render(const Directive& d);
std::string render(const Program& p);

}  // namespace pga
