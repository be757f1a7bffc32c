#pragma once

#include "pga/engine.hpp"
#include "pga/oracle.hpp"
#include "pga/syntax.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

namespace pga::test {

inline Var v(std::string_view name) { return Var::named(name); }
inline Term t(std::string_view text) { return parse_term(text); }
inline Atom at(std::string_view text) { return parse_atom(text); }

inline MonoAbs mabs(std::initializer_list<std::pair<const char*, Mode>> xs) {
    std::vector<std::pair<Var, Mode>> e;
    for (const auto& [n, m] : xs) e.emplace_back(v(n), m);
    return MonoAbs(std::move(e));
}

/// Parameter sets written as lists of parameter indices.
inline PMode pm(std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<ParamMask> raw;
    for (const auto& s : sets) {
        ParamMask m = 0;
        for (int i : s) m |= ParamMask{1} << i;
        raw.push_back(m);
    }
    return PMode::from_sets(std::move(raw));
}

inline PolyAbs pabs(std::initializer_list<std::pair<const char*, PMode>> xs) {
    std::vector<std::pair<Var, PMode>> e;
    for (const auto& [n, s] : xs) e.emplace_back(v(n), s);
    return PolyAbs(std::move(e));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

inline Program corpus(const std::string& name) { return parse_program(read_file(std::string(PGA_CORPUS_DIR) + "/" + name)); }

inline PolyResult analyze_poly(const Program& p) {
    const auto params = p.directive().params();
    return pga::analyze_poly(p, p.directive().goal, poly_input(p.directive(), params));
}

constexpr Mode g = Mode::g;
constexpr Mode u = Mode::u;

/// Most precise mono description of a concrete set over `scope`.
inline MonoAbs best_mono(const ConcreteSet& s, std::span<const Var> scope) {
    std::vector<std::pair<Var, Mode>> e;
    for (const auto& x : scope) {
        Mode m = Mode::g;
        for (const auto& th : s)
            if (!apply(th, Term::variable(x)).is_ground()) m = Mode::u;
        e.emplace_back(x, m);
    }
    return MonoAbs(std::move(e));
}

/// Best description of { mgu(Eθ)∘θ | θ ∈ γ(zeta) } by enumeration.
inline MonoAbs best_after_solving(const EqSet& e, const MonoAbs& zeta, const Universe& un) {
    const auto scope = zeta.scope();
    ConcreteSet out;
    for (const auto& th : gamma_filter(enumerate_subs(scope, un), zeta)) {
        std::vector<std::pair<Term, Term>> eqs;
        for (const auto& q : e.equations()) eqs.emplace_back(apply(th, Term::variable(q.lhs)), apply(th, q.rhs));
        if (auto s = mgu(eqs)) out.push_back(*compose(*s, th));
    }
    return best_mono(out, scope);
}

/// Best description of the collecting unification of A under γ(theta) with B under γ(sigma).
inline MonoAbs best_unify(const Atom& a, const MonoAbs& theta, const Atom& b, const MonoAbs& sigma,
                          const Universe& un) {
    Renamer rn;
    const auto s1 = gamma_filter(enumerate_subs(theta.scope(), un), theta);
    const auto s2 = gamma_filter(enumerate_subs(sigma.scope(), un), sigma);
    return best_mono(cunify(a, s1, b, s2, sigma.scope(), rn), sigma.scope());
}

}  // namespace pga::test
