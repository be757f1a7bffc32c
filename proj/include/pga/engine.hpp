#pragma once

#include "pga/error.hpp"
#include "pga/mono.hpp"
#include "pga/poly.hpp"
#include "pga/propagate.hpp"
#include "pga/syntax.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <variant>

namespace pga {

/// Lattice operations the engine needs on top of abstract unification.
template <class L>
concept AnalysisLattice = ModeLattice<L> && requires(const typename L::Value& a) {
    { L::top() } -> std::same_as<typename L::Value>;
    { L::leq(a, a) } -> std::same_as<bool>;
};

/// A call with its variables renamed to `@1`, `@2`, ... in first-occurrence
/// order, so that variant calls share one key.
template <class Abs>
struct CallPattern {
    Atom atom;
    Abs entry;

    friend auto operator<=>(const CallPattern&, const CallPattern&) = default;
    friend bool operator==(const CallPattern&, const CallPattern&) = default;
};

/// Point k of a clause lies after its k-th body literal; k = 0 is right after
/// head entry.
struct ProgramPoint {
    std::size_t clause = 0;
    std::size_t index = 0;

    friend auto operator<=>(const ProgramPoint&, const ProgramPoint&) = default;
};

template <class Abs>
struct AnalysisResult {
    using Memo = std::map<CallPattern<Abs>, Abs>;

    Atom goal;
    Abs goal_input;
    Abs goal_output;
    Memo memo;
    std::map<ProgramPoint, Abs> points;
    std::size_t iterations = 0;

    friend bool operator==(const AnalysisResult&, const AnalysisResult&) = default;
};

using MonoResult = AnalysisResult<MonoAbs>;
using PolyResult = AnalysisResult<PolyAbs>;

struct EngineOptions {
    std::size_t max_iterations = 1000;
};

/// Renames the variables of `a` to `@1`, `@2`, ... and returns the renamed atom
/// together with the variable map.
std::pair<Atom, std::vector<std::pair<Var, Var>>> canonical_atom(const Atom& a);

template <AnalysisLattice L>
class Analyzer {
public:
    using Value = typename L::Value;
    using Abs = AbsMap<Value>;
    using Result = AnalysisResult<Abs>;
    using Observer = std::function<void(const typename Result::Memo&)>;

    explicit Analyzer(const Program& program, EngineOptions options = {}) : prog_(program), opts_(options) {}

    /// Called with the memo table after every global iteration.
    void set_observer(Observer f) { observer_ = std::move(f); }

    Result run(const Atom& goal, const Abs& input) {
        for (const auto& k : prog_.undefined_calls())
            throw UndefinedPredicate("undefined predicate " + k.str());
        const auto goal_vars = goal.vars();
        for (const auto& v : goal_vars)
            if (!input.contains(v)) throw ScopeMismatch("goal variable " + v.str() + " has no input description");

        renamer_ = Renamer();
        memo_.clear();
        const CallPattern<Abs> root = pattern_of(goal, input);
        Result r;
        r.goal = goal;
        r.goal_input = input;
        for (;;) {
            if (r.iterations == opts_.max_iterations)
                throw IterationLimit("no fixpoint after " + std::to_string(r.iterations) + " iterations");
            ++r.iterations;
            changed_ = false;
            visited_.clear();
            points_.clear();
            solve(root);
            if (observer_) observer_(memo_);
            if (!changed_) break;
        }
        for (const auto& [p, out] : memo_)
            if (visited_.count(p)) r.memo.emplace(p, out);
        for (const auto& c : prog_.clauses()) {
            const Abs bottom = Abs::uniform(c.vars(), L::bottom());
            for (std::size_t k = 0; k <= c.body().size(); ++k) {
                auto it = points_.find({c.id(), k});
                r.points.emplace(ProgramPoint{c.id(), k}, it == points_.end() ? bottom : it->second);
            }
        }
        r.goal_output = abstract_unify<L>(root.atom, r.memo.at(root), goal, input, renamer_);
        return r;
    }

    /// Transfer function of a built-in literal over a clause abstraction.
    static Abs builtin_transfer(const Literal& lit, const Abs& cur) {
        switch (lit.kind()) {
            case BuiltinKind::UnifyEq: {
                auto e = eq_of(mgu(lit.args()[0], lit.args()[1]));
                if (!e) return Abs::uniform(cur.scope(), L::bottom());
                return propagate_up<L>(*e, propagate_down<L>(*e, cur));
            }
            case BuiltinKind::Is: {
                Abs out = cur;
                for (const auto& v : vars_of(lit.args()[0])) out.set(v, L::bottom());
                return out;
            }
            case BuiltinKind::Fail:
                return Abs::uniform(cur.scope(), L::bottom());
            default:
                return cur;
        }
    }

private:
    CallPattern<Abs> pattern_of(const Atom& call, const Abs& cur) const {
        auto [canon, map] = canonical_atom(call);
        std::vector<std::pair<Var, Value>> entry;
        entry.reserve(map.size());
        for (const auto& [from, to] : map) entry.emplace_back(to, cur.at(from));
        return {std::move(canon), Abs(std::move(entry))};
    }

    void record(std::size_t clause, std::size_t k, const Abs& a) {
        auto [it, fresh] = points_.try_emplace(ProgramPoint{clause, k}, a);
        if (!fresh) it->second = pointwise(it->second, a, L::lub);
    }

    const Abs& solve(const CallPattern<Abs>& p) {
        auto it = memo_.try_emplace(p, Abs::uniform(p.entry.scope(), L::bottom())).first;
        if (!visited_.insert(p).second) return it->second;
        Abs acc = Abs::uniform(p.entry.scope(), L::bottom());
        for (std::size_t id : prog_.clauses_for(key_of(p.atom))) {
            const Clause& c = prog_.clause(id);
            // Clauses whose head cannot match the call contribute nothing.
            if (!mgu(p.atom, c.head())) continue;
            Abs cur = abstract_unify<L>(p.atom, p.entry, c.head(), Abs::uniform(c.vars(), L::top()), renamer_);
            record(id, 0, cur);
            for (std::size_t k = 0; k < c.body().size(); ++k) {
                const Literal& lit = c.body()[k];
                if (lit.is_call()) {
                    const CallPattern<Abs> callee = pattern_of(lit.atom(), cur);
                    const Abs out = solve(callee);
                    cur = abstract_unify<L>(callee.atom, out, lit.atom(), cur, renamer_);
                } else {
                    cur = builtin_transfer(lit, cur);
                }
                record(id, k + 1, cur);
            }
            acc = pointwise(acc, abstract_unify<L>(c.head(), cur, p.atom, p.entry, renamer_), L::lub);
        }
        Abs& slot = it->second;
        Abs next = pointwise(slot, acc, L::lub);
        if (next != slot) {
            slot = std::move(next);
            changed_ = true;
        }
        return slot;
    }

    const Program& prog_;
    EngineOptions opts_;
    Observer observer_;
    Renamer renamer_;
    typename Result::Memo memo_;
    std::set<CallPattern<Abs>> visited_;
    std::map<ProgramPoint, Abs> points_;
    bool changed_ = false;
};

extern template class Analyzer<MonoLattice>;
extern template class Analyzer<PolyLattice>;

MonoResult analyze_mono(const Program& p, const Atom& goal, const MonoAbs& input, EngineOptions opts = {});
PolyResult analyze_poly(const Program& p, const Atom& goal, const PolyAbs& input, EngineOptions opts = {});

/// Goal description from the directive: a parameter p becomes {{p}}, g the
/// infimum and u the supremum.
PolyAbs poly_input(const Directive& d, const ParamTable& params);
/// Mono goal description. Parameters are read through `kappa`; throws Error if
/// a parameter is bound and no assignment is given.
MonoAbs mono_input(const Directive& d, const ParamTable& params, const Assignment* kappa);

/// Maps every abstraction of a polymorphic result through κ. Call patterns that
/// become equal are merged by lub.
MonoResult instantiate_result(const PolyResult& r, const Assignment& kappa);

using AnyResult = std::variant<MonoResult, PolyResult>;
/// Throws DomainMismatch for a monomorphic result.
MonoResult instantiate_result(const AnyResult& r, const Assignment& kappa);

}  // namespace pga
