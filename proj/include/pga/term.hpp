#pragma once

#include "pga/symbol.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pga {

/// Immutable first-order term with structural sharing. A constant is a
/// compound of arity zero.
class Term {
public:
    Term() = default;

    static Term variable(Var v);
    static Term variable(std::string_view name) { return variable(Var::named(name)); }
    static Term compound(Symbol functor, std::vector<Term> args = {});
    static Term compound(std::string_view functor, std::vector<Term> args = {}) {
        return compound(Symbol::intern(functor), std::move(args));
    }

    bool valid() const { return node_ != nullptr; }
    bool is_var() const;
    Var var() const;
    Symbol functor() const;
    std::size_t arity() const;
    std::span<const Term> args() const;
    const Term& arg(std::size_t i) const { return args()[i]; }
    bool is_ground() const;

    /// Same underlying node; a cheap sufficient test for equality.
    bool same_node(const Term& other) const { return node_ == other.node_; }

    friend bool operator==(const Term& a, const Term& b);
    friend std::strong_ordering operator<=>(const Term& a, const Term& b);

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Appends the variables of `t` not already in `out`, in first-occurrence order.
void collect_vars(const Term& t, std::vector<Var>& out);
std::vector<Var> vars_of(const Term& t);
bool occurs_in(const Var& v, const Term& t);
std::size_t depth(const Term& t);

/// A predicate applied to arguments. Kept distinct from Term so that terms and
/// atoms cannot be unified with one another by accident.
class Atom {
public:
    Atom() = default;
    Atom(Symbol predicate, std::vector<Term> args)
        : term_(Term::compound(predicate, std::move(args))) {}
    Atom(std::string_view predicate, std::vector<Term> args)
        : term_(Term::compound(predicate, std::move(args))) {}
    static Atom from_term(Term t);

    Symbol predicate() const { return term_.functor(); }
    std::size_t arity() const { return term_.arity(); }
    std::span<const Term> args() const { return term_.args(); }
    const Term& as_term() const { return term_; }
    std::vector<Var> vars() const { return vars_of(term_); }

    friend bool operator==(const Atom&, const Atom&) = default;
    friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
        return a.term_ <=> b.term_;
    }

private:
    Term term_;
};

/// predicate/arity key.
struct PredKey {
    Symbol name;
    std::size_t arity = 0;

    std::string str() const { return name.str() + "/" + std::to_string(arity); }
    friend auto operator<=>(const PredKey&, const PredKey&) = default;
};

inline PredKey key_of(const Atom& a) { return {a.predicate(), a.arity()}; }

}  // namespace pga
