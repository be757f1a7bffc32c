#include "pga/check.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace pga {

namespace {

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Runs `trial` `count` times, stopping the failure text at the first one.
SuiteReport run_trials(std::string name, std::size_t count,
                       const std::function<std::optional<std::string>(std::size_t)>& trial) {
    Timer t;
    SuiteReport r{std::move(name), 0, 0, std::nullopt, 0};
    for (std::size_t i = 0; i < count; ++i) {
        ++r.trials;
        if (auto bad = trial(i)) {
            ++r.failures;
            if (!r.first_failure) r.first_failure = "trial " + std::to_string(i) + ": " + *bad;
        }
    }
    r.seconds = t.seconds();
    return r;
}

const std::vector<Var>& names() {
    static const std::vector<Var> v = {Var::named("X"), Var::named("Y"), Var::named("Z")};
    return v;
}

std::vector<Var> first(std::size_t n) { return {names().begin(), names().begin() + n}; }

/// Reference evaluation of a raw collection of parameter sets.
Mode eval_raw(std::span<const ParamMask> sets, const Assignment& k) {
    for (ParamMask s : sets) {
        bool all_u = true;
        for (std::size_t i = 0; i < 32; ++i)
            if ((s >> i & 1u) && k[i] == Mode::g) all_u = false;
        if (all_u) return Mode::u;
    }
    return Mode::g;
}

template <class T, class Lub, class Glb, class Leq>
std::optional<std::string> lattice_laws(const std::vector<T>& xs, Lub lub, Glb glb, Leq leq,
                                        const std::function<std::string(const T&)>& show) {
    for (const auto& a : xs) {
        if (!leq(a, a)) return "not reflexive at " + show(a);
        if (!(lub(a, a) == a) || !(glb(a, a) == a)) return "not idempotent at " + show(a);
        for (const auto& b : xs) {
            const std::string ab = show(a) + ", " + show(b);
            const T j = lub(a, b), m = glb(a, b);
            if (!(j == lub(b, a)) || !(m == glb(b, a))) return "not commutative at " + ab;
            if (!(lub(a, m) == a) || !(glb(a, j) == a)) return "not absorptive at " + ab;
            if (leq(a, b) && leq(b, a) && !(a == b)) return "not antisymmetric at " + ab;
            if (leq(a, b) != (j == b)) return "order disagrees with lub at " + ab;
            if (!leq(a, j) || !leq(b, j)) return "lub is not an upper bound at " + ab;
            if (!leq(m, a) || !leq(m, b)) return "glb is not a lower bound at " + ab;
            for (const auto& c : xs) {
                if (!(lub(lub(a, b), c) == lub(a, lub(b, c)))) return "lub not associative at " + ab + ", " + show(c);
                if (!(glb(glb(a, b), c) == glb(a, glb(b, c)))) return "glb not associative at " + ab + ", " + show(c);
                if (leq(a, b) && leq(b, c) && !leq(a, c)) return "not transitive at " + ab + ", " + show(c);
                if (leq(a, c) && leq(b, c) && !leq(j, c)) return "lub is not least at " + ab + ", " + show(c);
                if (leq(c, a) && leq(c, b) && !leq(c, m)) return "glb is not greatest at " + ab + ", " + show(c);
            }
        }
    }
    return std::nullopt;
}

std::string show_pm(const PMode& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.sets().size(); ++i) out += (i ? "," : "") + std::to_string(s.sets()[i]);
    return out + "}";
}

}  // namespace

SuiteReport suite_lattice_laws(std::size_t max_params) {
    Timer t;
    SuiteReport r{"lattice laws", 0, 0, std::nullopt, 0};
    auto note = [&](std::optional<std::string> bad) {
        ++r.trials;
        if (bad) {
            ++r.failures;
            if (!r.first_failure) r.first_failure = *bad;
        }
    };

    const std::vector<Mode> modes = {Mode::g, Mode::u};
    note(lattice_laws<Mode>(modes, mode_lub, mode_glb, mode_leq, [](const Mode& m) { return std::string(to_string(m)); }));

    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<MonoAbs> abs;
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            std::vector<std::pair<Var, Mode>> e;
            for (std::size_t i = 0; i < n; ++i) e.emplace_back(names()[i], (m >> i & 1u) ? Mode::u : Mode::g);
            abs.emplace_back(std::move(e));
        }
        note(lattice_laws<MonoAbs>(abs, mabs_lub, mabs_glb, mabs_leq, [](const MonoAbs& a) { return render(a); }));
    }

    const std::size_t expected[] = {0, 3, 6, 20, 168};
    for (std::size_t n = 1; n <= max_params; ++n) {
        const std::uint32_t masks = 1u << n;
        std::vector<std::vector<ParamMask>> raws;
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << masks); ++c) {
            std::vector<ParamMask> raw;
            for (std::uint32_t m = 0; m < masks; ++m)
                if (c >> m & 1u) raw.push_back(m);
            raws.push_back(std::move(raw));
        }
        std::set<PMode> distinct;
        const auto kappas = Assignment::all(n);
        std::optional<std::string> canon_bad;
        for (const auto& raw : raws) {
            const PMode s = pm_canon(raw, n);
            distinct.insert(s);
            if (PMode::from_sets({s.sets().begin(), s.sets().end()}) != s) canon_bad = "canon not idempotent at " + show_pm(s);
            for (const auto& k : kappas)
                if (pm_instantiate(s, k) != eval_raw(raw, k))
                    canon_bad = "canon changes meaning under kappa " + std::to_string(k.u_mask()) + " at " + show_pm(s);
            for (std::size_t i = 0; i < s.sets().size(); ++i)
                for (std::size_t j = 0; j < s.sets().size(); ++j)
                    if (i != j && (s.sets()[i] & ~s.sets()[j]) == 0) canon_bad = "not an antichain: " + show_pm(s);
        }
        note(canon_bad);
        const std::vector<PMode> xs(distinct.begin(), distinct.end());
        note(n < std::size(expected) && xs.size() != expected[n]
                 ? std::optional<std::string>("expected " + std::to_string(expected[n]) + " antichains over " +
                                              std::to_string(n) + " parameters, found " + std::to_string(xs.size()))
                 : std::nullopt);
        note(lattice_laws<PMode>(xs, pm_lub, pm_glb, pm_leq, show_pm));

        std::optional<std::string> hom_bad;
        for (const auto& a : xs)
            for (const auto& b : xs) {
                bool sem_leq = true;
                for (const auto& k : kappas) {
                    const Mode ia = pm_instantiate(a, k), ib = pm_instantiate(b, k);
                    if (pm_instantiate(pm_glb(a, b), k) != mode_glb(ia, ib))
                        hom_bad = "glb homomorphism fails at " + show_pm(a) + ", " + show_pm(b);
                    if (pm_instantiate(pm_lub(a, b), k) != mode_lub(ia, ib))
                        hom_bad = "lub homomorphism fails at " + show_pm(a) + ", " + show_pm(b);
                    sem_leq = sem_leq && mode_leq(ia, ib);
                }
                if (sem_leq != pm_leq(a, b)) hom_bad = "order is not pointwise over assignments at " + show_pm(a) + ", " + show_pm(b);
            }
        note(hom_bad);
    }
    r.seconds = t.seconds();
    return r;
}

Instance random_instance(Gen& g, std::size_t depth) {
    const std::size_t arity = 1 + g.below(3);
    const Symbol p = Symbol::intern("p");
    for (;;) {
        Instance in;
        in.a = g.atom(p, arity, first(1 + g.below(3)), depth);
        in.b = g.atom(p, arity, first(1 + g.below(3)), depth);
        in.va = in.a.vars();
        in.vb = in.b.vars();
        // Ground atoms carry no information about variables; redraw.
        if (!in.vb.empty()) return in;
    }
}

SuiteReport suite_poly_precision(const CheckOptions& o) {
    Gen g(o.seed);
    SafetyCache unused(Universe::standard(o.depth));
    return run_trials("poly precision", o.trials, [&](std::size_t) {
        const Instance in = random_instance(g, o.depth);
        const std::size_t params = 1 + g.below(3);
        const PolyAbs theta = g.poly(in.va, params), sigma = g.poly(in.vb, params);
        return find_poly_failure(in.a, theta, in.b, sigma, params, unused, false);
    });
}

namespace {

bool claims_more(const MonoAbs& sigma, const MonoAbs& result) {
    for (const auto& [v, m] : result)
        if (m == Mode::g && sigma.at(v) == Mode::u) return true;
    return false;
}

}  // namespace

SuiteReport suite_mono_safety(const CheckOptions& o) {
    Gen g(o.seed + 1);
    const Universe u = Universe::standard(o.depth);
    std::size_t nonvacuous = 0;
    SuiteReport rep = run_trials("mono safety", o.trials, [&](std::size_t) {
        const Instance in = random_instance(g, o.depth);
        const MonoAbs theta = g.mono(in.va), sigma = g.mono(in.vb);
        Renamer r;
        const MonoAbs result = munify(in.a, theta, in.b, sigma, r);
        nonvacuous += claims_more(sigma, result);
        return find_unsafe(in.a, theta, in.b, sigma, result, u);
    });
    rep.nonvacuous = nonvacuous;
    return rep;
}

SuiteReport suite_poly_safety(const CheckOptions& o) {
    Gen g(o.seed + 2);
    SafetyCache cache(Universe::standard(o.depth));
    std::size_t nonvacuous = 0;
    SuiteReport rep = run_trials("poly safety", o.trials, [&](std::size_t) {
        const Instance in = random_instance(g, o.depth);
        const std::size_t params = 1 + g.below(3);
        const PolyAbs theta = g.poly(in.va, params), sigma = g.poly(in.vb, params);
        Renamer r;
        const PolyAbs result = punify(in.a, theta, in.b, sigma, r);
        bool any = false;
        for (const auto& k : Assignment::all(params))
            any = any || claims_more(pabs_instantiate(sigma, k), pabs_instantiate(result, k));
        nonvacuous += any;
        return find_poly_failure(in.a, theta, in.b, sigma, params, cache, true);
    });
    rep.nonvacuous = nonvacuous;
    return rep;
}

SuiteReport suite_cunify_paths(const CheckOptions& o) {
    Gen g(o.seed + 3);
    const Universe u = Universe::standard(o.depth);
    return run_trials("concrete unification paths", o.trials, [&](std::size_t) -> std::optional<std::string> {
        Instance in;
        do {
            in = random_instance(g, o.depth);
        } while (in.va.size() + in.vb.size() > 3);
        const ConcreteSet s1 = enumerate_subs(in.va, u), s2 = enumerate_subs(in.vb, u);
        Renamer r;
        for (int k = 0; k < 40; ++k) {
            const Substitution& t1 = s1[g.below(s1.size())];
            const Substitution& t2 = s2[g.below(s2.size())];
            auto x = concrete_unify(in.a, t1, in.b, t2, in.vb, r);
            auto y = concrete_unify_joint(in.a, t1, in.b, t2, in.vb, r);
            if (x.has_value() != y.has_value() || (x && !same_up_to_renaming(*x, *y, in.vb)))
                return "paths disagree for A=" + render(in.a) + " theta1=" + render(t1) + " B=" + render(in.b) +
                       " theta2=" + render(t2);
        }
        const MonoAbs theta = g.mono(in.va), sigma = g.mono(in.vb);
        Renamer rr;
        const MonoAbs sound = munify(in.a, theta, in.b, sigma, rr);
        const MonoAbs eager = MonoAbs::uniform(in.vb, Mode::g);
        for (const MonoAbs* res : {&sound, &eager}) {
            const bool fast = find_unsafe(in.a, theta, in.b, sigma, *res, u).has_value();
            const bool slow = find_unsafe_materialized(in.a, theta, in.b, sigma, *res, u).has_value();
            if (fast != slow)
                return "fast and materialized safety checks disagree for A=" + render(in.a) + " B=" + render(in.b) +
                       " result=" + render(*res);
        }
        return std::nullopt;
    });
}

SuiteReport suite_concretization(const CheckOptions& o) {
    Gen g(o.seed + 4);
    const Universe u = Universe::standard(o.depth);
    const std::vector<Var> scope = first(2);
    const ConcreteSet all = enumerate_subs(scope, u);
    auto members = [&](const MonoAbs& a) {
        std::vector<bool> in(all.size());
        for (std::size_t i = 0; i < all.size(); ++i) in[i] = gamma_member(all[i], a);
        return in;
    };
    return run_trials("concretization", o.trials, [&](std::size_t) -> std::optional<std::string> {
        const MonoAbs a = g.mono(scope), b = g.mono(scope);
        const auto ga = members(a), gb = members(b), gm = members(mabs_glb(a, b)), gj = members(mabs_lub(a, b));
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (gm[i] != (ga[i] && gb[i])) return "mono meet is not intersection for " + render(a) + ", " + render(b);
            if ((ga[i] || gb[i]) && !gj[i]) return "mono lub loses " + render(all[i]);
        }
        const std::size_t params = 1 + g.below(2);
        const PolyAbs pa = g.poly(scope, params), pb = g.poly(scope, params);
        const PolyAbs pm = pabs_glb(pa, pb), pj = pabs_lub(pa, pb);
        for (const auto& k : Assignment::all(params)) {
            const auto ia = members(pabs_instantiate(pa, k)), ib = members(pabs_instantiate(pb, k));
            const auto im = members(pabs_instantiate(pm, k)), ij = members(pabs_instantiate(pj, k));
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (im[i] != (ia[i] && ib[i])) return "poly meet is not intersection under kappa " + std::to_string(k.u_mask());
                if ((ia[i] || ib[i]) && !ij[i]) return "poly lub loses " + render(all[i]);
            }
        }
        return std::nullopt;
    });
}

namespace {

struct TinyProgram {
    Program program;
    Atom goal;
};

TinyProgram random_program(Gen& g, std::size_t depth) {
    const Symbol p = Symbol::intern("p"), q = Symbol::intern("q");
    const std::size_t ap = 1 + g.below(2), aq = 1 + g.below(2);
    const std::size_t n = 1 + g.below(3);
    std::vector<bool> head_is_p(n);
    head_is_p[0] = true;
    for (std::size_t i = 1; i < n; ++i) head_is_p[i] = g.coin();
    const bool q_defined = std::find(head_is_p.begin(), head_is_p.end(), false) != head_is_p.end();
    const auto vars = first(3);
    std::vector<Clause> clauses;
    for (std::size_t i = 0; i < n; ++i) {
        Atom head = head_is_p[i] ? g.atom(p, ap, vars, depth) : g.atom(q, aq, vars, depth);
        std::vector<Literal> body;
        const std::size_t len = g.below(3);
        for (std::size_t k = 0; k < len; ++k) {
            const std::size_t pick = g.below(q_defined ? 3 : 2);
            if (pick == 0) {
                body.push_back(Literal::builtin(BuiltinKind::UnifyEq, {g.term(vars, depth), g.term(vars, depth)}));
            } else if (pick == 1) {
                body.push_back(Literal::call(g.atom(p, ap, vars, depth)));
            } else {
                body.push_back(Literal::call(g.atom(q, aq, vars, depth)));
            }
        }
        clauses.emplace_back(i, std::move(head), std::move(body));
    }
    const std::vector<Var> gv = {Var::named("A"), Var::named("B")};
    Atom goal;
    do {
        goal = g.atom(p, ap, gv, depth);
    } while (goal.vars().empty());
    Directive d{goal, {}};
    for (const auto& v : goal.vars()) d.bindings.emplace_back(v, Mode::u);
    return {Program(std::move(clauses), d), goal};
}

std::optional<std::string> check_observations(const std::vector<SldObservation>& obs, const MonoResult& r) {
    for (const auto& o : obs) {
        const MonoAbs& a = o.at ? r.points.at(*o.at) : r.goal_output;
        for (const auto& [v, t] : o.bindings)
            if (a.at(v) == Mode::g && !t.is_ground()) {
                std::string where = o.at ? std::to_string(o.at->clause) + ":" + std::to_string(o.at->index) : "goal";
                return "at " + where + " " + v.str() + "=" + render(t) + " but the analysis says g";
            }
    }
    return std::nullopt;
}

}  // namespace

SuiteReport suite_engine_soundness(const CheckOptions& o) {
    Gen g(o.seed + 5);
    const Universe u = Universe::standard(std::min<std::size_t>(o.depth, 2));
    return run_trials("engine soundness and coherence", o.trials, [&](std::size_t) -> std::optional<std::string> {
        const TinyProgram tp = random_program(g, o.depth);
        const auto gv = tp.goal.vars();
        const MonoAbs in = g.mono(gv);
        const MonoResult mr = analyze_mono(tp.program, tp.goal, in);
        ConcreteSet starts = gamma_filter(enumerate_subs(gv, u), in);
        std::shuffle(starts.begin(), starts.end(), g.engine());
        starts.resize(std::min<std::size_t>(starts.size(), 16));
        for (const auto& s : starts) {
            if (auto bad = check_observations(collect_sld(tp.program, tp.goal, s, {4, 3000}), mr))
                return *bad + " starting from " + render(s) + " in\n" + render(tp.program);
        }

        const std::size_t params = 1 + g.below(2);
        const PolyAbs pin = g.poly(gv, params);
        const PolyResult pr = analyze_poly(tp.program, tp.goal, pin);
        for (const auto& k : Assignment::all(params)) {
            const MonoResult inst = instantiate_result(pr, k);
            const MonoResult direct = analyze_mono(tp.program, tp.goal, pabs_instantiate(pin, k));
            if (inst.points != direct.points || inst.goal_output != direct.goal_output)
                return "instantiated poly analysis differs from mono analysis under kappa " +
                       std::to_string(k.u_mask()) + " in\n" + render(tp.program);
        }
        return std::nullopt;
    });
}

std::vector<SuiteReport> run_all_suites(const CheckOptions& o) {
    std::vector<SuiteReport> out{suite_lattice_laws()};
    if (o.trials == 0) return out;
    out.push_back(suite_poly_precision(o));
    out.push_back(suite_mono_safety(o));
    out.push_back(suite_poly_safety(o));
    out.push_back(suite_cunify_paths(o));
    out.push_back(suite_concretization(o));
    out.push_back(suite_engine_soundness(o));
    return out;
}

}  // namespace pga
