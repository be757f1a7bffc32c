#pragma once

#include "pga/abs_map.hpp"
#include "pga/mode.hpp"
#include "pga/propagate.hpp"
#include "pga/unify.hpp"

#include <span>
#include <string>

namespace pga {

/// Monomorphic abstract substitution: each variable of the scope mapped to g or u.
using MonoAbs = AbsMap<Mode>;

struct MonoLattice {
    using Value = Mode;
    static Mode glb(Mode a, Mode b) { return mode_glb(a, b); }
    static Mode lub(Mode a, Mode b) { return mode_lub(a, b); }
    static Mode bottom() { return Mode::g; }
    static Mode top() { return Mode::u; }
    static bool leq(Mode a, Mode b) { return mode_leq(a, b); }
};

inline MonoAbs mono_bottom(std::span<const Var> scope) { return MonoAbs::uniform(scope, Mode::g); }
inline MonoAbs mono_top(std::span<const Var> scope) { return MonoAbs::uniform(scope, Mode::u); }

bool mabs_leq(const MonoAbs& a, const MonoAbs& b);
MonoAbs mabs_lub(const MonoAbs& a, const MonoAbs& b);
MonoAbs mabs_glb(const MonoAbs& a, const MonoAbs& b);

MonoAbs mdown(const EqSet& e, const MonoAbs& zeta);
MonoAbs mup(const EqSet& e, const MonoAbs& eta);

MonoAbs munify(const Atom& a, const MonoAbs& theta, const Atom& b, const MonoAbs& sigma,
               Renamer& renamer, UnifyTrace<Mode>* trace = nullptr);

/// θ ∈ γ(a): every variable described as g is bound to a ground term.
/// Variables not bound by θ stand for themselves.
bool gamma_member(const Substitution& theta, const MonoAbs& a);

std::string render(const MonoAbs& a, std::span<const Var> order = {});

}  // namespace pga
