#pragma once

#include "pga/error.hpp"
#include "pga/symbol.hpp"
#include "pga/unify.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pga {

/// Total map from a finite variable scope to lattice values, stored sorted by
/// variable. Shared representation of MSub/MSub+ and PSub/PSub+.
template <class Value>
class AbsMap {
public:
    using Entry = std::pair<Var, Value>;

    AbsMap() = default;

    /// Throws ScopeMismatch if a variable is listed twice.
    explicit AbsMap(std::vector<Entry> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < entries_.size(); ++i)
            if (entries_[i - 1].first == entries_[i].first)
                throw ScopeMismatch("variable listed twice: " + entries_[i].first.str());
    }

    static AbsMap uniform(std::span<const Var> scope, const Value& v) {
        std::vector<Entry> e;
        e.reserve(scope.size());
        for (const auto& x : scope) e.emplace_back(x, v);
        return AbsMap(std::move(e));
    }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    const Value* find(const Var& v) const {
        auto it = lower(v);
        return (it != entries_.end() && it->first == v) ? &it->second : nullptr;
    }
    bool contains(const Var& v) const { return find(v) != nullptr; }

    const Value& at(const Var& v) const {
        if (const Value* p = find(v)) return *p;
        throw ScopeMismatch("variable " + v.str() + " is outside the abstraction's scope");
    }

    void set(const Var& v, Value value) {
        auto it = lower(v);
        if (it == entries_.end() || it->first != v)
            throw ScopeMismatch("variable " + v.str() + " is outside the abstraction's scope");
        entries_[static_cast<std::size_t>(it - entries_.begin())].second = std::move(value);
    }

    std::vector<Var> scope() const {
        std::vector<Var> s;
        s.reserve(entries_.size());
        for (const auto& e : entries_) s.push_back(e.first);
        return s;
    }

    bool same_scope(const AbsMap& other) const {
        if (size() != other.size()) return false;
        for (std::size_t i = 0; i < size(); ++i)
            if (entries_[i].first != other.entries_[i].first) return false;
        return true;
    }

    friend bool operator==(const AbsMap&, const AbsMap&) = default;
    friend auto operator<=>(const AbsMap&, const AbsMap&) = default;

private:
    auto lower(const Var& v) const {
        return std::lower_bound(entries_.begin(), entries_.end(), v,
                                [](const Entry& e, const Var& x) { return e.first < x; });
    }

    std::vector<Entry> entries_;
};

template <class Value>
void require_same_scope(const AbsMap<Value>& a, const AbsMap<Value>& b) {
    if (!a.same_scope(b)) throw ScopeMismatch("abstractions have different scopes");
}

/// Pointwise combination of two abstractions over the same scope.
template <class Value, class F>
AbsMap<Value> pointwise(const AbsMap<Value>& a, const AbsMap<Value>& b, F&& f) {
    require_same_scope(a, b);
    std::vector<std::pair<Var, Value>> out;
    out.reserve(a.size());
    auto ib = b.begin();
    for (const auto& [v, x] : a) out.emplace_back(v, f(x, (ib++)->second));
    return AbsMap<Value>(std::move(out));
}

template <class Value, class Leq>
bool pointwise_leq(const AbsMap<Value>& a, const AbsMap<Value>& b, Leq&& leq) {
    require_same_scope(a, b);
    auto ib = b.begin();
    for (const auto& e : a)
        if (!leq(e.second, (ib++)->second)) return false;
    return true;
}

/// Keeps only the variables in `keep`.
template <class Value>
AbsMap<Value> restrict(const AbsMap<Value>& a, std::span<const Var> keep) {
    std::vector<std::pair<Var, Value>> out;
    for (const auto& e : a)
        if (std::find(keep.begin(), keep.end(), e.first) != keep.end()) out.push_back(e);
    return AbsMap<Value>(std::move(out));
}

/// Renames keys; values are preserved.
template <class Value>
AbsMap<Value> rename(const Renaming& psi, const AbsMap<Value>& a) {
    std::vector<std::pair<Var, Value>> out;
    out.reserve(a.size());
    for (const auto& [v, x] : a) out.emplace_back(psi(v), x);
    return AbsMap<Value>(std::move(out));
}

/// Union of two abstractions over disjoint scopes. Throws ScopeOverlap.
template <class Value>
AbsMap<Value> disjoint_union(const AbsMap<Value>& a, const AbsMap<Value>& b) {
    std::vector<std::pair<Var, Value>> out(a.begin(), a.end());
    for (const auto& e : b) {
        if (a.contains(e.first)) throw ScopeOverlap("variable " + e.first.str() + " is in both scopes");
        out.push_back(e);
    }
    return AbsMap<Value>(std::move(out));
}

/// Renders as `{X/v, Y/w}` listing variables in `order`; variables of `a` not
/// in `order` follow, sorted by name.
template <class Value, class Show>
std::string render_abs(const AbsMap<Value>& a, std::span<const Var> order, Show&& show) {
    std::vector<Var> vs;
    for (const auto& v : order)
        if (a.contains(v) && std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    std::vector<Var> rest;
    for (const auto& e : a)
        if (std::find(vs.begin(), vs.end(), e.first) == vs.end()) rest.push_back(e.first);
    std::sort(rest.begin(), rest.end(),
              [](const Var& x, const Var& y) { return x.str() < y.str(); });
    vs.insert(vs.end(), rest.begin(), rest.end());
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ", ";
        s += vs[i].str() + "/" + show(a.at(vs[i]));
    }
    return s + "}";
}

}  // namespace pga
