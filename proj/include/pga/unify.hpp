#pragma once

#include "pga/term.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pga {

using Binding = std::pair<Var, Term>;

/// Finite map from variables to terms. Bindings are kept in insertion order so
/// that printed equation sets follow the order in which unification produced
/// them; equality ignores that order.
class Substitution {
public:
    Substitution() = default;
    explicit Substitution(std::vector<Binding> bindings);

    const Term* find(const Var& v) const;
    std::span<const Binding> bindings() const { return bindings_; }
    bool empty() const { return bindings_.empty(); }
    std::size_t size() const { return bindings_.size(); }

    std::vector<Var> domain() const;
    /// Union of the variables of the bound terms.
    std::vector<Var> range() const;
    /// No domain variable occurs in any bound term.
    bool is_idempotent() const;

    friend bool operator==(const Substitution& a, const Substitution& b);

private:
    std::vector<Binding> bindings_;
};

/// Result of unification; `std::nullopt` is the distinguished `fail` value.
using MaybeSubst = std::optional<Substitution>;

struct Equation {
    Var lhs;
    Term rhs;

    friend bool operator==(const Equation&, const Equation&) = default;
};

/// Equations `X = t` in solved form: each left side is a variable that occurs
/// on no right side.
class EqSet {
public:
    EqSet() = default;
    /// Throws std::invalid_argument if the equations are not in solved form.
    explicit EqSet(std::vector<Equation> equations);

    std::span<const Equation> equations() const { return equations_; }
    bool empty() const { return equations_.empty(); }
    std::size_t size() const { return equations_.size(); }

    const Term* rhs_of(const Var& v) const;
    bool in_domain(const Var& v) const { return rhs_of(v) != nullptr; }
    /// True if `v` occurs in some right-hand side.
    bool in_range(const Var& v) const;
    std::vector<Var> domain() const;
    std::vector<Var> range() const;
    /// Every variable mentioned on either side.
    std::vector<Var> vars() const;

    static bool is_solved_form(std::span<const Equation> equations);

    friend bool operator==(const EqSet& a, const EqSet& b);

private:
    std::vector<Equation> equations_;
};

/// eq(fail) = fail.
std::optional<EqSet> eq_of(const MaybeSubst& theta);
Substitution solve(const EqSet& e);

Term apply(const Substitution& theta, const Term& t);
Atom apply(const Substitution& theta, const Atom& a);

/// apply(compose(outer, inner), t) == apply(outer, apply(inner, t)); fail absorbs.
MaybeSubst compose(const MaybeSubst& outer, const MaybeSubst& inner);
Substitution restrict(const Substitution& theta, std::span<const Var> keep);

/// Triangular binding store used to run unification. `solved()` turns the
/// current bindings into an idempotent substitution. Reusable after clear().
class BindingStore {
public:
    /// Unifies under the current bindings. On failure the store is left in an
    /// unspecified state and should be cleared.
    bool unify(const Term& a, const Term& b);
    bool is_ground(const Term& t) const;
    Term resolve(const Term& t) const;
    Substitution solved() const;
    void clear() { bindings_.clear(); }

private:
    const Term* lookup(const Var& v) const;
    Term deref(Term t) const;
    bool occurs(const Var& v, const Term& t) const;

    std::vector<Binding> bindings_;
    std::vector<std::pair<Term, Term>> stack_;
};

/// Most general unifier with occurs check. When two variables meet, the one
/// from the right operand is bound to the one from the left.
MaybeSubst mgu(const Term& a, const Term& b);
MaybeSubst mgu(const Atom& a, const Atom& b);
MaybeSubst mgu(std::span<const std::pair<Term, Term>> equations);

/// A single application of the renaming Ψ. Every variable is mapped to a
/// variable carrying this renaming's generation, which no other renaming and
/// no program variable uses.
class Renaming {
public:
    explicit Renaming(std::uint32_t generation) : gen_(generation) {}

    std::uint32_t generation() const { return gen_; }
    Var operator()(const Var& v) const;
    Term operator()(const Term& t) const;
    Atom operator()(const Atom& a) const;

private:
    std::uint32_t gen_;
};

/// Source of fresh renamings. One per analysis run; not thread-safe.
class Renamer {
public:
    Renaming fresh() { return Renaming(next_++); }
    std::uint32_t counter() const { return next_; }

private:
    std::uint32_t next_ = 1;
};

}  // namespace pga
