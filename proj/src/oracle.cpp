#include "pga/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace pga {

// -- universe --

Universe Universe::standard(std::size_t depth) {
    Universe u;
    u.signature = {{Symbol::intern("a"), 0}, {Symbol::intern("f"), 1}, {Symbol::intern("g"), 2}};
    u.depth = depth;
    return u;
}

std::vector<Term> Universe::terms() const {
    if (std::none_of(signature.begin(), signature.end(), [](const auto& s) { return s.second == 0; }))
        throw std::invalid_argument("a universe needs at least one constant");
    std::vector<Term> level;
    for (const auto& [f, n] : signature)
        if (n == 0) level.push_back(Term::compound(f));
    for (std::size_t i = 1; i <= pool; ++i) level.push_back(Term::variable("?" + std::to_string(i)));
    std::vector<Term> all = level;
    for (std::size_t d = 2; d <= depth; ++d) {
        std::vector<Term> next = all;
        for (const auto& [f, n] : signature) {
            if (n == 0) continue;
            if (std::pow(static_cast<double>(all.size()), static_cast<double>(n)) > 4.0 * kMaxEnumTerms)
                throw BudgetExceeded("universe exceeds " + std::to_string(kMaxEnumTerms) + " terms");
            std::vector<std::size_t> idx(n, 0);
            for (;;) {
                std::vector<Term> args;
                bool has_new = false;
                for (auto i : idx) {
                    args.push_back(all[i]);
                    has_new = has_new || pga::depth(all[i]) == d - 1;
                }
                if (has_new) next.push_back(Term::compound(f, std::move(args)));
                std::size_t k = 0;
                while (k < n && ++idx[k] == all.size()) idx[k++] = 0;
                if (k == n) break;
            }
        }
        all = std::move(next);
    }
    return all;
}

ConcreteSet enumerate_subs(std::span<const Var> scope, const Universe& u) {
    const std::vector<Term> terms = u.terms();
    const std::size_t choices = terms.size() + (u.identity ? 1 : 0);
    if (scope.size() > kMaxEnumScope || terms.size() > kMaxEnumTerms)
        throw BudgetExceeded("enumeration over " + std::to_string(scope.size()) + " variables and " +
                             std::to_string(terms.size()) + " terms (limits " + std::to_string(kMaxEnumScope) +
                             " and " + std::to_string(kMaxEnumTerms) + ")");
    ConcreteSet out;
    std::vector<std::size_t> idx(scope.size(), 0);
    for (;;) {
        std::vector<Binding> b;
        for (std::size_t i = 0; i < scope.size(); ++i)
            if (idx[i] < terms.size()) b.emplace_back(scope[i], terms[idx[i]]);
        out.emplace_back(std::move(b));
        std::size_t k = 0;
        while (k < scope.size() && ++idx[k] == choices) idx[k++] = 0;
        if (k == scope.size()) break;
    }
    return out;
}

ConcreteSet gamma_filter(const ConcreteSet& s, const MonoAbs& a) {
    ConcreteSet out;
    for (const auto& theta : s)
        if (gamma_member(theta, a)) out.push_back(theta);
    return out;
}

// -- concrete unification --

namespace {

Substitution renamed(const Renaming& psi, const Substitution& theta) {
    std::vector<Binding> b;
    for (const auto& [v, t] : theta.bindings()) b.emplace_back(psi(v), psi(t));
    return Substitution(std::move(b));
}

Term tuple_of(std::span<const Term> ts) { return Term::compound("$", std::vector<Term>(ts.begin(), ts.end())); }

Term image(const Substitution& s, std::span<const Var> scope) {
    std::vector<Term> ts;
    for (const auto& v : scope) ts.push_back(apply(s, Term::variable(v)));
    return tuple_of(ts);
}

bool variant_into(const Term& a, const Term& b, std::unordered_map<Var, Var>& fwd, std::unordered_map<Var, Var>& bwd) {
    if (a.is_var() || b.is_var()) {
        if (!a.is_var() || !b.is_var()) return false;
        auto [i, fi] = fwd.try_emplace(a.var(), b.var());
        auto [j, fj] = bwd.try_emplace(b.var(), a.var());
        return i->second == b.var() && j->second == a.var();
    }
    if (a.functor() != b.functor() || a.arity() != b.arity()) return false;
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (!variant_into(a.arg(i), b.arg(i), fwd, bwd)) return false;
    return true;
}

/// Renames the variables of `t` to ?v1, ?v2, ... in first-occurrence order.
Term canonical_variant(const Term& t) {
    std::vector<Binding> b;
    for (const auto& v : vars_of(t)) b.emplace_back(v, Term::variable("?v" + std::to_string(b.size() + 1)));
    return apply(Substitution(std::move(b)), t);
}

}  // namespace

MaybeSubst concrete_unify(const Atom& a1, const Substitution& theta1, const Atom& a2, const Substitution& theta2,
                          std::span<const Var> scope2, Renamer& renamer) {
    const Renaming psi = renamer.fresh();
    const Atom left = apply(renamed(psi, theta1), psi(a1));
    MaybeSubst m = mgu(left, apply(theta2, a2));
    MaybeSubst c = compose(m, theta2);
    if (!c) return std::nullopt;
    std::vector<Binding> out;
    for (const auto& v : scope2) {
        Term t = apply(*c, Term::variable(v));
        if (!(t.is_var() && t.var() == v)) out.emplace_back(v, t);
    }
    return Substitution(std::move(out));
}

MaybeSubst concrete_unify_joint(const Atom& a1, const Substitution& theta1, const Atom& a2,
                                const Substitution& theta2, std::span<const Var> scope2, Renamer& renamer) {
    const Renaming psi = renamer.fresh();
    std::vector<std::pair<Term, Term>> eqs;
    for (const auto& [v, t] : theta1.bindings()) eqs.emplace_back(Term::variable(psi(v)), psi(t));
    eqs.emplace_back(psi(a1).as_term(), a2.as_term());
    for (const auto& [v, t] : theta2.bindings()) eqs.emplace_back(Term::variable(v), t);
    MaybeSubst m = mgu(eqs);
    if (!m) return std::nullopt;
    return restrict(*m, scope2);
}

ConcreteSet cunify(const Atom& a1, const ConcreteSet& s1, const Atom& a2, const ConcreteSet& s2,
                   std::span<const Var> scope2, Renamer& renamer) {
    ConcreteSet out;
    for (const auto& t1 : s1)
        for (const auto& t2 : s2)
            if (auto r = concrete_unify(a1, t1, a2, t2, scope2, renamer)) {
                const Term img = image(*r, scope2);
                bool dup = std::any_of(out.begin(), out.end(),
                                       [&](const Substitution& s) { return image(s, scope2) == img; });
                if (!dup) out.push_back(std::move(*r));
            }
    return out;
}

bool is_variant(const Term& a, const Term& b) {
    std::unordered_map<Var, Var> fwd, bwd;
    return variant_into(a, b, fwd, bwd);
}

bool same_up_to_renaming(const Substitution& a, const Substitution& b, std::span<const Var> scope) {
    return is_variant(image(a, scope), image(b, scope));
}

std::string render(const Substitution& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.bindings().size(); ++i) {
        const auto& [v, t] = s.bindings()[i];
        out += (i ? ", " : "") + v.str() + "=" + render(t);
    }
    return out + "}";
}

// -- safety --

namespace {

std::string describe(const Atom& a, const MonoAbs& theta, const Atom& b, const MonoAbs& sigma, const MonoAbs& result) {
    const auto va = a.vars(), vb = b.vars();
    return "A=" + render(a) + " theta=" + render(theta, va) + " B=" + render(b) + " sigma=" + render(sigma, vb) +
           " result=" + render(result, vb);
}

/// Scope variables that the result claims ground but sigma does not.
std::vector<Var> newly_ground(const MonoAbs& sigma, const MonoAbs& result, const Atom& b) {
    std::vector<Var> out;
    for (const auto& v : b.vars())
        if (result.at(v) == Mode::g && sigma.at(v) == Mode::u) out.push_back(v);
    return out;
}

}  // namespace

std::optional<std::string> find_unsafe(const Atom& a, const MonoAbs& theta, const Atom& b, const MonoAbs& sigma,
                                       const MonoAbs& result, const Universe& u) {
    const std::vector<Var> targets = newly_ground(sigma, result, b);
    if (targets.empty()) return std::nullopt;
    const std::vector<Var> va = a.vars(), vb = b.vars();

    // Left atoms up to variants, renamed apart from everything on the right.
    std::set<Term> lefts;
    for (const auto& t1 : gamma_filter(enumerate_subs(va, u), restrict(theta, va)))
        lefts.insert(canonical_variant(apply(t1, a.as_term())));
    const Renaming apart(0xfffffff0u);

    std::set<Term> seen;
    std::vector<std::pair<Substitution, Term>> rights;
    for (auto& t2 : gamma_filter(enumerate_subs(vb, u), restrict(sigma, vb))) {
        const Term img = image(t2, vb);
        if (seen.insert(canonical_variant(img)).second) rights.emplace_back(std::move(t2), img);
    }

    BindingStore store;
    for (const auto& l : lefts) {
        const Term left = apart(l);
        for (const auto& [t2, img] : rights) {
            store.clear();
            if (!store.unify(left, apply(t2, b.as_term()))) continue;
            for (std::size_t i = 0; i < vb.size(); ++i) {
                if (std::find(targets.begin(), targets.end(), vb[i]) == targets.end()) continue;
                if (!store.is_ground(img.arg(i)))
                    return describe(a, theta, b, sigma, result) + " witness: theta1(A)=" + render(l) +
                           " theta2=" + render(t2) + " leaves " + vb[i].str() + " nonground";
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> find_unsafe_materialized(const Atom& a, const MonoAbs& theta, const Atom& b,
                                                    const MonoAbs& sigma, const MonoAbs& result,
                                                    const Universe& u) {
    const std::vector<Var> va = a.vars(), vb = b.vars();
    const ConcreteSet s1 = gamma_filter(enumerate_subs(va, u), restrict(theta, va));
    const ConcreteSet s2 = gamma_filter(enumerate_subs(vb, u), restrict(sigma, vb));
    Renamer r;
    const MonoAbs target = restrict(result, vb);
    for (const auto& s : cunify(a, s1, b, s2, vb, r))
        if (!gamma_member(s, target))
            return describe(a, theta, b, sigma, result) + " witness: " + render(s);
    return std::nullopt;
}

bool check_mono_safety(const Atom& a, const MonoAbs& theta, const Atom& b, const MonoAbs& sigma,
                       const Universe& u) {
    Renamer r;
    return !find_unsafe(a, theta, b, sigma, munify(a, theta, b, sigma, r), u);
}

std::optional<std::string> SafetyCache::find_unsafe(const Atom& a, const MonoAbs& theta, const Atom& b,
                                                    const MonoAbs& sigma, const MonoAbs& result) {
    auto key = std::make_tuple(theta, sigma, result);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto r = pga::find_unsafe(a, theta, b, sigma, result, u_);
    cache_.emplace(std::move(key), r);
    return r;
}

std::optional<std::string> find_poly_failure(const Atom& a, const PolyAbs& theta, const Atom& b,
                                             const PolyAbs& sigma, std::size_t param_count, SafetyCache& cache,
                                             bool check_safety) {
    Renamer r;
    const PolyAbs poly = punify(a, theta, b, sigma, r);
    for (const auto& kappa : Assignment::all(param_count)) {
        const MonoAbs mt = pabs_instantiate(theta, kappa);
        const MonoAbs ms = pabs_instantiate(sigma, kappa);
        const MonoAbs inst = pabs_instantiate(poly, kappa);
        const MonoAbs mono = munify(a, mt, b, ms, r);
        auto where = [&] { return " under kappa u-mask " + std::to_string(kappa.u_mask()); };
        if (inst != mono)
            return "instantiated punify " + render(inst, b.vars()) + " differs from munify " +
                   render(mono, b.vars()) + where() + " for A=" + render(a) + " B=" + render(b);
        if (check_safety)
            if (auto bad = cache.find_unsafe(a, mt, b, ms, inst)) return *bad + where();
    }
    return std::nullopt;
}

bool check_poly(const Atom& a, const PolyAbs& theta, const Atom& b, const PolyAbs& sigma,
                std::size_t param_count, const Universe& u) {
    SafetyCache cache(u);
    return !find_poly_failure(a, theta, b, sigma, param_count, cache);
}

// -- SLD collector --

namespace {

class Sld {
public:
    Sld(const Program& p, SldLimits limits, std::vector<SldObservation>& out)
        : prog_(p), limits_(limits), out_(out) {}

    void call(const Atom& goal, const BindingStore& s, std::size_t depth,
              const std::function<void(const BindingStore&)>& k) {
        if (depth > limits_.max_depth) return;
        for (std::size_t id : prog_.clauses_for(key_of(goal))) {
            if (++steps_ > limits_.max_steps) return;
            const Clause& c = prog_.clause(id);
            const Renaming rho = renamer_.fresh();
            BindingStore s2 = s;
            if (!s2.unify(goal.as_term(), rho(c.head()).as_term())) continue;
            body(c, rho, 0, s2, depth, k);
        }
    }

private:
    void record(const Clause& c, const Renaming& rho, std::size_t k, const BindingStore& s) {
        SldObservation o{ProgramPoint{c.id(), k}, {}};
        for (const auto& v : c.vars()) o.bindings.emplace_back(v, s.resolve(Term::variable(rho(v))));
        out_.push_back(std::move(o));
    }

    void body(const Clause& c, const Renaming& rho, std::size_t i, const BindingStore& s, std::size_t depth,
              const std::function<void(const BindingStore&)>& k) {
        record(c, rho, i, s);
        if (i == c.body().size()) {
            k(s);
            return;
        }
        const Literal& lit = c.body()[i];
        auto next = [&](const BindingStore& s3) { body(c, rho, i + 1, s3, depth, k); };
        if (lit.is_call()) {
            call(rho(lit.atom()), s, depth + 1, next);
            return;
        }
        switch (lit.kind()) {
            case BuiltinKind::UnifyEq: {
                BindingStore s2 = s;
                if (s2.unify(rho(lit.args()[0]), rho(lit.args()[1]))) next(s2);
                return;
            }
            case BuiltinKind::True:
                next(s);
                return;
            case BuiltinKind::Fail:
                return;
            default:
                throw std::invalid_argument("built-in " + std::string(builtin_name(lit.kind())) +
                                            " is not executed by the collector");
        }
    }

    const Program& prog_;
    SldLimits limits_;
    std::vector<SldObservation>& out_;
    Renamer renamer_;
    std::size_t steps_ = 0;
};

}  // namespace

std::vector<SldObservation> collect_sld(const Program& p, const Atom& goal, const Substitution& initial,
                                        SldLimits limits) {
    std::vector<SldObservation> out;
    Sld sld(p, limits, out);
    BindingStore s;
    for (const auto& [v, t] : initial.bindings()) s.unify(Term::variable(v), t);
    const auto goal_vars = goal.vars();
    sld.call(goal, s, 0, [&](const BindingStore& done) {
        SldObservation o{std::nullopt, {}};
        for (const auto& v : goal_vars) o.bindings.emplace_back(v, done.resolve(Term::variable(v)));
        out.push_back(std::move(o));
    });
    return out;
}

// -- generators --

Term Gen::term(std::span<const Var> vars, std::size_t depth) {
    const bool leaf = depth <= 1;
    const std::size_t pick = below(vars.empty() ? 3 : 5);
    if (!vars.empty() && pick >= 3) return Term::variable(vars[below(vars.size())]);
    if (leaf || pick == 0) return Term::compound("a");
    if (pick == 1) return Term::compound("f", {term(vars, depth - 1)});
    return Term::compound("g", {term(vars, depth - 1), term(vars, depth - 1)});
}

Atom Gen::atom(Symbol pred, std::size_t arity, std::span<const Var> vars, std::size_t depth) {
    std::vector<Term> args;
    for (std::size_t i = 0; i < arity; ++i) args.push_back(term(vars, depth));
    return Atom(pred, std::move(args));
}

MonoAbs Gen::mono(std::span<const Var> scope) {
    std::vector<std::pair<Var, Mode>> e;
    for (const auto& v : scope) e.emplace_back(v, mode());
    return MonoAbs(std::move(e));
}

PMode Gen::pmode(std::size_t param_count) {
    std::vector<ParamMask> sets(below(4));
    for (auto& s : sets) s = static_cast<ParamMask>(below(std::size_t{1} << param_count));
    return PMode::from_sets(std::move(sets));
}

PolyAbs Gen::poly(std::span<const Var> scope, std::size_t param_count) {
    std::vector<std::pair<Var, PMode>> e;
    for (const auto& v : scope) e.emplace_back(v, pmode(param_count));
    return PolyAbs(std::move(e));
}

}  // namespace pga
