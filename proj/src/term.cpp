#include "pga/term.hpp"

#include <algorithm>
#include <cassert>

namespace pga {

struct Term::Node {
    bool is_var = false;
    bool ground = true;
    Var var;
    Symbol functor;
    std::vector<Term> args;
};

Term Term::variable(Var v) {
    auto n = std::make_shared<Node>();
    n->is_var = true;
    n->ground = false;
    n->var = v;
    return Term(std::move(n));
}

Term Term::compound(Symbol functor, std::vector<Term> args) {
    auto n = std::make_shared<Node>();
    n->functor = functor;
    n->ground = std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
    n->args = std::move(args);
    return Term(std::move(n));
}

bool Term::is_var() const { return node_->is_var; }

Var Term::var() const {
    assert(is_var());
    return node_->var;
}

Symbol Term::functor() const {
    assert(!is_var());
    return node_->functor;
}

std::size_t Term::arity() const { return node_->args.size(); }

std::span<const Term> Term::args() const { return node_->args; }

bool Term::is_ground() const { return node_->ground; }

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.is_var() != b.is_var()) return false;
    if (a.is_var()) return a.var() == b.var();
    if (a.functor() != b.functor() || a.arity() != b.arity()) return false;
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (!(a.arg(i) == b.arg(i))) return false;
    return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (!a.node_ || !b.node_) return a.node_ ? std::strong_ordering::greater : std::strong_ordering::less;
    // variables sort before compounds
    if (a.is_var() != b.is_var()) return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_var()) return a.var() <=> b.var();
    if (auto c = a.functor() <=> b.functor(); c != 0) return c;
    if (auto c = a.arity() <=> b.arity(); c != 0) return c;
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (auto c = a.arg(i) <=> b.arg(i); c != 0) return c;
    return std::strong_ordering::equal;
}

void collect_vars(const Term& t, std::vector<Var>& out) {
    if (t.is_var()) {
        if (std::find(out.begin(), out.end(), t.var()) == out.end()) out.push_back(t.var());
        return;
    }
    if (t.is_ground()) return;
    for (const auto& a : t.args()) collect_vars(a, out);
}

std::vector<Var> vars_of(const Term& t) {
    std::vector<Var> out;
    collect_vars(t, out);
    return out;
}

bool occurs_in(const Var& v, const Term& t) {
    if (t.is_var()) return t.var() == v;
    if (t.is_ground()) return false;
    return std::any_of(t.args().begin(), t.args().end(), [&](const Term& a) { return occurs_in(v, a); });
}

std::size_t depth(const Term& t) {
    std::size_t d = 0;
    if (!t.is_var())
        for (const auto& a : t.args()) d = std::max(d, depth(a));
    return d + 1;
}

Atom Atom::from_term(Term t) {
    assert(!t.is_var());
    Atom a;
    a.term_ = std::move(t);
    return a;
}

}  // namespace pga
