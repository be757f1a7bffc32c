#include "pga/mono.hpp"

namespace pga {

bool mabs_leq(const MonoAbs& a, const MonoAbs& b) { return pointwise_leq(a, b, mode_leq); }

MonoAbs mabs_lub(const MonoAbs& a, const MonoAbs& b) { return pointwise(a, b, mode_lub); }

MonoAbs mabs_glb(const MonoAbs& a, const MonoAbs& b) { return pointwise(a, b, mode_glb); }

MonoAbs mdown(const EqSet& e, const MonoAbs& zeta) { return propagate_down<MonoLattice>(e, zeta); }

MonoAbs mup(const EqSet& e, const MonoAbs& eta) { return propagate_up<MonoLattice>(e, eta); }

MonoAbs munify(const Atom& a, const MonoAbs& theta, const Atom& b, const MonoAbs& sigma,
               Renamer& renamer, UnifyTrace<Mode>* trace) {
    return abstract_unify<MonoLattice>(a, theta, b, sigma, renamer, trace);
}

bool gamma_member(const Substitution& theta, const MonoAbs& a) {
    for (const auto& [x, m] : a) {
        if (m == Mode::u) continue;
        const Term* t = theta.find(x);
        if (!t || !t->is_ground()) return false;
    }
    return true;
}

std::string render(const MonoAbs& a, std::span<const Var> order) {
    return render_abs(a, order, [](Mode m) { return std::string(to_string(m)); });
}

}  // namespace pga
