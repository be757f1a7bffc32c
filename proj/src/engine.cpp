#include "pga/engine.hpp"

namespace pga {

template class Analyzer<MonoLattice>;
template class Analyzer<PolyLattice>;

std::pair<Atom, std::vector<std::pair<Var, Var>>> canonical_atom(const Atom& a) {
    std::vector<std::pair<Var, Var>> map;
    std::vector<Binding> bindings;
    for (const auto& v : a.vars()) {
        Var to = Var::named("@" + std::to_string(map.size() + 1));
        map.emplace_back(v, to);
        bindings.emplace_back(v, Term::variable(to));
    }
    return {apply(Substitution(std::move(bindings)), a), std::move(map)};
}

MonoResult analyze_mono(const Program& p, const Atom& goal, const MonoAbs& input, EngineOptions opts) {
    return Analyzer<MonoLattice>(p, opts).run(goal, input);
}

PolyResult analyze_poly(const Program& p, const Atom& goal, const PolyAbs& input, EngineOptions opts) {
    return Analyzer<PolyLattice>(p, opts).run(goal, input);
}

PolyAbs poly_input(const Directive& d, const ParamTable& params) {
    std::vector<std::pair<Var, PMode>> out;
    for (const auto& [v, b] : d.bindings) {
        if (const auto* m = std::get_if<Mode>(&b)) {
            out.emplace_back(v, *m == Mode::g ? PMode::infimum() : PMode::supremum());
        } else {
            auto i = params.index_of(std::get<Symbol>(b));
            if (!i) throw UnknownParam("unknown parameter " + std::get<Symbol>(b).str());
            out.emplace_back(v, PMode::param(*i));
        }
    }
    return PolyAbs(std::move(out));
}

MonoAbs mono_input(const Directive& d, const ParamTable& params, const Assignment* kappa) {
    if (!kappa) {
        for (const auto& [v, b] : d.bindings)
            if (std::holds_alternative<Symbol>(b))
                throw Error("goal variable " + v.str() + " is bound to parameter " + std::get<Symbol>(b).str() +
                            "; a monomorphic analysis needs an assignment");
        Assignment none(params.size(), 0);
        return pabs_instantiate(poly_input(d, params), none);
    }
    if (kappa->size() != params.size()) throw Error("assignment does not cover every parameter");
    return pabs_instantiate(poly_input(d, params), *kappa);
}

MonoResult instantiate_result(const PolyResult& r, const Assignment& kappa) {
    MonoResult m;
    m.goal = r.goal;
    m.goal_input = pabs_instantiate(r.goal_input, kappa);
    m.goal_output = pabs_instantiate(r.goal_output, kappa);
    m.iterations = r.iterations;
    for (const auto& [p, out] : r.memo) {
        CallPattern<MonoAbs> key{p.atom, pabs_instantiate(p.entry, kappa)};
        MonoAbs value = pabs_instantiate(out, kappa);
        auto [it, fresh] = m.memo.try_emplace(key, value);
        if (!fresh) it->second = mabs_lub(it->second, value);
    }
    for (const auto& [pt, a] : r.points) m.points.emplace(pt, pabs_instantiate(a, kappa));
    return m;
}

MonoResult instantiate_result(const AnyResult& r, const Assignment& kappa) {
    if (const auto* p = std::get_if<PolyResult>(&r)) return instantiate_result(*p, kappa);
    throw DomainMismatch("only polymorphic results can be instantiated");
}

}  // namespace pga
