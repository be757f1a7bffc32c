#pragma once

// Shared skeleton of the abstract unification operator. The monomorphic and
// polymorphic operators differ only in the lattice supplying glb/lub/bottom.

#include "pga/abs_map.hpp"
#include "pga/unify.hpp"

#include <optional>

namespace pga {

template <class L>
concept ModeLattice = requires(const typename L::Value& a) {
    { L::glb(a, a) } -> std::same_as<typename L::Value>;
    { L::lub(a, a) } -> std::same_as<typename L::Value>;
    { L::bottom() } -> std::same_as<typename L::Value>;
};

template <class Value>
void require_covers(const AbsMap<Value>& a, const EqSet& e) {
    for (const auto& v : e.vars())
        if (!a.contains(v)) throw ScopeMismatch("equation variable " + v.str() + " is outside the abstraction's scope");
}

/// Downward pass: a variable occurring in the right side of `Y = t` is at
/// least as ground as Y.
template <ModeLattice L>
AbsMap<typename L::Value> propagate_down(const EqSet& e, const AbsMap<typename L::Value>& zeta) {
    require_covers(zeta, e);
    std::vector<std::pair<Var, typename L::Value>> out;
    out.reserve(zeta.size());
    for (const auto& [x, value] : zeta) {
        auto acc = value;
        for (const auto& eq : e.equations())
            if (occurs_in(x, eq.rhs)) acc = L::glb(acc, zeta.at(eq.lhs));
        out.emplace_back(x, std::move(acc));
    }
    return AbsMap<typename L::Value>(std::move(out));
}

/// Upward pass: the left side of `X = t` is ground once every variable of t is.
/// Reads the downward result for both X and the variables of t.
template <ModeLattice L>
AbsMap<typename L::Value> propagate_up(const EqSet& e, const AbsMap<typename L::Value>& eta) {
    require_covers(eta, e);
    AbsMap<typename L::Value> beta = eta;
    for (const auto& eq : e.equations()) {
        auto rhs = L::bottom();
        for (const auto& y : vars_of(eq.rhs)) rhs = L::lub(rhs, eta.at(y));
        beta.set(eq.lhs, L::glb(eta.at(eq.lhs), rhs));
    }
    return beta;
}

/// Intermediate values of one abstract unification, for inspection in tests.
template <class Value>
struct UnifyTrace {
    Atom renamed_a;
    AbsMap<Value> zeta;
    std::optional<EqSet> e0;
    AbsMap<Value> eta;
    AbsMap<Value> beta;
};

/// Abstract unification of A under theta against B under sigma. The result is
/// scoped like sigma. If the atoms do not unify, every variable of sigma's
/// scope is mapped to the lattice bottom.
template <ModeLattice L>
AbsMap<typename L::Value> abstract_unify(const Atom& a, const AbsMap<typename L::Value>& theta,
                                         const Atom& b, const AbsMap<typename L::Value>& sigma,
                                         Renamer& renamer,
                                         UnifyTrace<typename L::Value>* trace = nullptr) {
    using Abs = AbsMap<typename L::Value>;
    const Renaming psi = renamer.fresh();
    const Atom renamed_a = psi(a);
    const Abs zeta = disjoint_union(rename(psi, theta), sigma);
    const std::vector<Var> sigma_scope = sigma.scope();
    std::optional<EqSet> e0 = eq_of(mgu(renamed_a, b));
    if (trace) {
        trace->renamed_a = renamed_a;
        trace->zeta = zeta;
        trace->e0 = e0;
    }
    if (!e0) return Abs::uniform(sigma_scope, L::bottom());
    Abs eta = propagate_down<L>(*e0, zeta);
    Abs beta = propagate_up<L>(*e0, eta);
    if (trace) {
        trace->eta = eta;
        trace->beta = beta;
    }
    return restrict(beta, sigma_scope);
}

}  // namespace pga
