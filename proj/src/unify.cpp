#include "pga/unify.hpp"

#include <algorithm>
#include <stdexcept>

namespace pga {

// -- Substitution --

Substitution::Substitution(std::vector<Binding> bindings) : bindings_(std::move(bindings)) {
    for (std::size_t i = 0; i < bindings_.size(); ++i)
        for (std::size_t j = i + 1; j < bindings_.size(); ++j)
            if (bindings_[i].first == bindings_[j].first)
                throw std::invalid_argument("variable bound twice: " + bindings_[i].first.str());
}

const Term* Substitution::find(const Var& v) const {
    for (const auto& [x, t] : bindings_)
        if (x == v) return &t;
    return nullptr;
}

std::vector<Var> Substitution::domain() const {
    std::vector<Var> out;
    out.reserve(bindings_.size());
    for (const auto& b : bindings_) out.push_back(b.first);
    return out;
}

std::vector<Var> Substitution::range() const {
    std::vector<Var> out;
    for (const auto& b : bindings_) collect_vars(b.second, out);
    return out;
}

bool Substitution::is_idempotent() const {
    for (const auto& b : bindings_)
        for (const auto& c : bindings_)
            if (occurs_in(b.first, c.second)) return false;
    return true;
}

bool operator==(const Substitution& a, const Substitution& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [v, t] : a.bindings_) {
        const Term* u = b.find(v);
        if (!u || !(*u == t)) return false;
    }
    return true;
}

// -- EqSet --

EqSet::EqSet(std::vector<Equation> equations) : equations_(std::move(equations)) {
    if (!is_solved_form(equations_)) throw std::invalid_argument("equations are not in solved form");
}

bool EqSet::is_solved_form(std::span<const Equation> equations) {
    for (std::size_t i = 0; i < equations.size(); ++i) {
        for (std::size_t j = 0; j < equations.size(); ++j) {
            if (i != j && equations[i].lhs == equations[j].lhs) return false;
            if (occurs_in(equations[i].lhs, equations[j].rhs)) return false;
        }
    }
    return true;
}

const Term* EqSet::rhs_of(const Var& v) const {
    for (const auto& e : equations_)
        if (e.lhs == v) return &e.rhs;
    return nullptr;
}

bool EqSet::in_range(const Var& v) const {
    return std::any_of(equations_.begin(), equations_.end(),
                       [&](const Equation& e) { return occurs_in(v, e.rhs); });
}

std::vector<Var> EqSet::domain() const {
    std::vector<Var> out;
    for (const auto& e : equations_) out.push_back(e.lhs);
    return out;
}

std::vector<Var> EqSet::range() const {
    std::vector<Var> out;
    for (const auto& e : equations_) collect_vars(e.rhs, out);
    return out;
}

std::vector<Var> EqSet::vars() const {
    std::vector<Var> out = domain();
    for (const auto& e : equations_) collect_vars(e.rhs, out);
    return out;
}

bool operator==(const EqSet& a, const EqSet& b) {
    if (a.size() != b.size()) return false;
    for (const auto& e : a.equations_) {
        const Term* r = b.rhs_of(e.lhs);
        if (!r || !(*r == e.rhs)) return false;
    }
    return true;
}

std::optional<EqSet> eq_of(const MaybeSubst& theta) {
    if (!theta) return std::nullopt;
    std::vector<Equation> eqs;
    eqs.reserve(theta->size());
    for (const auto& [v, t] : theta->bindings()) eqs.push_back({v, t});
    return EqSet(std::move(eqs));
}

Substitution solve(const EqSet& e) {
    std::vector<Binding> b;
    b.reserve(e.size());
    for (const auto& eq : e.equations()) b.emplace_back(eq.lhs, eq.rhs);
    return Substitution(std::move(b));
}

// -- application and composition --

Term apply(const Substitution& theta, const Term& t) {
    if (t.is_ground() || theta.empty()) return t;
    if (t.is_var()) {
        const Term* b = theta.find(t.var());
        return b ? *b : t;
    }
    std::vector<Term> args;
    args.reserve(t.arity());
    bool changed = false;
    for (const auto& a : t.args()) {
        args.push_back(apply(theta, a));
        changed = changed || !args.back().same_node(a);
    }
    return changed ? Term::compound(t.functor(), std::move(args)) : t;
}

Atom apply(const Substitution& theta, const Atom& a) {
    return Atom::from_term(apply(theta, a.as_term()));
}

MaybeSubst compose(const MaybeSubst& outer, const MaybeSubst& inner) {
    if (!outer || !inner) return std::nullopt;
    std::vector<Binding> out;
    for (const auto& [x, t] : inner->bindings()) {
        Term u = apply(*outer, t);
        if (u.is_var() && u.var() == x) continue;
        out.emplace_back(x, std::move(u));
    }
    for (const auto& [y, t] : outer->bindings())
        if (!inner->find(y)) out.emplace_back(y, t);
    return Substitution(std::move(out));
}

Substitution restrict(const Substitution& theta, std::span<const Var> keep) {
    std::vector<Binding> out;
    for (const auto& b : theta.bindings())
        if (std::find(keep.begin(), keep.end(), b.first) != keep.end()) out.push_back(b);
    return Substitution(std::move(out));
}

// -- BindingStore --

const Term* BindingStore::lookup(const Var& v) const {
    for (const auto& [x, t] : bindings_)
        if (x == v) return &t;
    return nullptr;
}

Term BindingStore::deref(Term t) const {
    while (t.is_var()) {
        const Term* b = lookup(t.var());
        if (!b) break;
        t = *b;
    }
    return t;
}

bool BindingStore::occurs(const Var& v, const Term& t) const {
    if (t.is_ground()) return false;
    Term d = deref(t);
    if (d.is_var()) return d.var() == v;
    for (const auto& a : d.args())
        if (occurs(v, a)) return true;
    return false;
}

bool BindingStore::unify(const Term& a, const Term& b) {
    stack_.clear();
    stack_.emplace_back(a, b);
    while (!stack_.empty()) {
        auto [l, r] = std::move(stack_.back());
        stack_.pop_back();
        l = deref(std::move(l));
        r = deref(std::move(r));
        if (l.same_node(r)) continue;
        if (r.is_var()) {
            if (l.is_var() && l.var() == r.var()) continue;
            if (!l.is_var() && occurs(r.var(), l)) return false;
            bindings_.emplace_back(r.var(), l);
        } else if (l.is_var()) {
            if (occurs(l.var(), r)) return false;
            bindings_.emplace_back(l.var(), r);
        } else {
            if (l.functor() != r.functor() || l.arity() != r.arity()) return false;
            if (l.is_ground() && r.is_ground()) {
                if (!(l == r)) return false;
                continue;
            }
            for (std::size_t i = l.arity(); i-- > 0;) stack_.emplace_back(l.arg(i), r.arg(i));
        }
    }
    return true;
}

bool BindingStore::is_ground(const Term& t) const {
    if (t.is_ground()) return true;
    Term d = deref(t);
    if (d.is_var()) return false;
    for (const auto& a : d.args())
        if (!is_ground(a)) return false;
    return true;
}

Term BindingStore::resolve(const Term& t) const {
    if (t.is_ground()) return t;
    Term d = deref(t);
    if (d.is_var() || d.is_ground()) return d;
    std::vector<Term> args;
    args.reserve(d.arity());
    bool changed = false;
    for (const auto& a : d.args()) {
        args.push_back(resolve(a));
        changed = changed || !args.back().same_node(a);
    }
    return changed ? Term::compound(d.functor(), std::move(args)) : d;
}

Substitution BindingStore::solved() const {
    std::vector<Binding> out;
    out.reserve(bindings_.size());
    for (const auto& [v, t] : bindings_) out.emplace_back(v, resolve(t));
    return Substitution(std::move(out));
}

MaybeSubst mgu(const Term& a, const Term& b) {
    BindingStore store;
    if (!store.unify(a, b)) return std::nullopt;
    return store.solved();
}

MaybeSubst mgu(const Atom& a, const Atom& b) { return mgu(a.as_term(), b.as_term()); }

MaybeSubst mgu(std::span<const std::pair<Term, Term>> equations) {
    BindingStore store;
    for (const auto& [l, r] : equations)
        if (!store.unify(l, r)) return std::nullopt;
    return store.solved();
}

// -- Renaming --

Var Renaming::operator()(const Var& v) const {
    if (v.gen == 0) return Var{v.name, gen_};
    return Var{Symbol::intern(v.str()), gen_};
}

Term Renaming::operator()(const Term& t) const {
    if (t.is_ground()) return t;
    if (t.is_var()) return Term::variable((*this)(t.var()));
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back((*this)(a));
    return Term::compound(t.functor(), std::move(args));
}

Atom Renaming::operator()(const Atom& a) const { return Atom::from_term((*this)(a.as_term())); }

}  // namespace pga
