#include "pga/poly.hpp"

#include <algorithm>
#include <bit>

namespace pga {

// -- ParamTable --

ParamTable::ParamTable(std::vector<Symbol> names) {
    for (auto n : names) add(n);
}

std::size_t ParamTable::add(Symbol name) {
    if (auto i = index_of(name)) return *i;
    if (names_.size() == kMaxParams)
        throw Error("too many mode parameters (at most " + std::to_string(kMaxParams) + ")");
    names_.push_back(name);
    return names_.size() - 1;
}

std::optional<std::size_t> ParamTable::index_of(Symbol name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

ParamMask ParamTable::all_mask() const {
    return names_.size() == kMaxParams ? ~ParamMask{0} : (ParamMask{1} << names_.size()) - 1;
}

// -- PMode --

PMode PMode::from_sets(std::vector<ParamMask> raw) {
    std::sort(raw.begin(), raw.end(), [](ParamMask a, ParamMask b) {
        auto pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<ParamMask> kept;
    for (ParamMask s : raw) {
        bool subsumed = std::any_of(kept.begin(), kept.end(), [s](ParamMask k) { return (k & ~s) == 0; });
        if (!subsumed) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return PMode(std::move(kept));
}

ParamMask PMode::used_params() const {
    ParamMask m = 0;
    for (auto s : sets_) m |= s;
    return m;
}

PMode pm_canon(std::span<const ParamMask> raw, std::size_t param_count) {
    const ParamMask allowed = param_count >= kMaxParams ? ~ParamMask{0} : (ParamMask{1} << param_count) - 1;
    for (auto s : raw)
        if (s & ~allowed) throw UnknownParam("parameter index out of range");
    return PMode::from_sets(std::vector<ParamMask>(raw.begin(), raw.end()));
}

bool pm_leq(const PMode& a, const PMode& b) {
    for (auto s1 : a.sets()) {
        bool covered = std::any_of(b.sets().begin(), b.sets().end(), [s1](ParamMask s2) { return (s2 & ~s1) == 0; });
        if (!covered) return false;
    }
    return true;
}

PMode pm_lub(const PMode& a, const PMode& b) {
    std::vector<ParamMask> raw(a.sets().begin(), a.sets().end());
    raw.insert(raw.end(), b.sets().begin(), b.sets().end());
    return PMode::from_sets(std::move(raw));
}

PMode pm_glb(const PMode& a, const PMode& b) {
    std::vector<ParamMask> raw;
    raw.reserve(a.sets().size() * b.sets().size());
    for (auto s1 : a.sets())
        for (auto s2 : b.sets()) raw.push_back(s1 | s2);
    return PMode::from_sets(std::move(raw));
}

// -- Assignment --

Assignment::Assignment(std::span<const Mode> modes) : count_(modes.size()) {
    if (modes.size() > kMaxParams) throw Error("too many mode parameters");
    for (std::size_t i = 0; i < modes.size(); ++i)
        if (modes[i] == Mode::u) u_mask_ |= ParamMask{1} << i;
}

std::vector<Assignment> Assignment::all(std::size_t count) {
    if (count >= 31) throw Error("too many mode parameters to enumerate assignments");
    std::vector<Assignment> out;
    for (ParamMask m = 0; m < (ParamMask{1} << count); ++m) out.emplace_back(count, m);
    return out;
}

Mode pm_instantiate(const PMode& s, const Assignment& kappa) {
    // A conjunction is u exactly when all its parameters are u.
    for (auto set : s.sets())
        if ((set & ~kappa.u_mask()) == 0) return Mode::u;
    return Mode::g;
}

// -- PolyAbs --

bool pabs_leq(const PolyAbs& a, const PolyAbs& b) { return pointwise_leq(a, b, pm_leq); }

PolyAbs pabs_lub(const PolyAbs& a, const PolyAbs& b) { return pointwise(a, b, pm_lub); }

PolyAbs pabs_glb(const PolyAbs& a, const PolyAbs& b) { return pointwise(a, b, pm_glb); }

PolyAbs pdown(const EqSet& e, const PolyAbs& zeta) { return propagate_down<PolyLattice>(e, zeta); }

PolyAbs pup(const EqSet& e, const PolyAbs& eta) { return propagate_up<PolyLattice>(e, eta); }

PolyAbs punify(const Atom& a, const PolyAbs& theta, const Atom& b, const PolyAbs& sigma,
               Renamer& renamer, UnifyTrace<PMode>* trace) {
    return abstract_unify<PolyLattice>(a, theta, b, sigma, renamer, trace);
}

AbsMap<Mode> pabs_instantiate(const PolyAbs& a, const Assignment& kappa) {
    std::vector<std::pair<Var, Mode>> out;
    out.reserve(a.size());
    for (const auto& [v, s] : a) out.emplace_back(v, pm_instantiate(s, kappa));
    return AbsMap<Mode>(std::move(out));
}

std::vector<std::vector<std::string>> param_names(const PMode& s, const ParamTable& params) {
    std::vector<std::vector<std::string>> out;
    for (auto set : s.sets()) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < kMaxParams; ++i)
            if ((set >> i) & 1u)
                names.push_back(i < params.size() ? params.name(i).str() : "p" + std::to_string(i));
        std::sort(names.begin(), names.end());
        out.push_back(std::move(names));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string render(const PMode& s, const ParamTable& params) {
    std::string out = "[";
    bool first_set = true;
    for (const auto& names : param_names(s, params)) {
        out += first_set ? "[" : ",[";
        first_set = false;
        for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
        out += "]";
    }
    return out + "]";
}

std::string render(const PolyAbs& a, const ParamTable& params, std::span<const Var> order) {
    return render_abs(a, order, [&](const PMode& s) { return render(s, params); });
}

}  // namespace pga
