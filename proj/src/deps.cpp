#include "pga/deps.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>

namespace pga {

namespace {

PMode join(const PolyAbs& abs, std::span<const Var> vs) {
    PMode acc = PMode::infimum();
    for (const auto& v : vs) acc = pm_lub(acc, abs.at(v));
    return acc;
}

bool by_name(const Var& a, const Var& b) { return a.str() < b.str(); }

}  // namespace

bool implies(const PolyAbs& abs, std::span<const Var> ante, std::span<const Var> cons) {
    if (ante.empty() || cons.empty()) throw std::invalid_argument("implication sides must be nonempty");
    for (const auto& v : ante)
        if (std::find(cons.begin(), cons.end(), v) != cons.end())
            throw std::invalid_argument("variable " + v.str() + " is on both sides");
    return pm_leq(join(abs, cons), join(abs, ante));
}

std::vector<Implication> minimal_implications(const PolyAbs& abs) {
    if (abs.size() > kMaxImplicationScope)
        throw BudgetExceeded("implication search over " + std::to_string(abs.size()) + " variables (limit " +
                             std::to_string(kMaxImplicationScope) + ")");
    std::vector<Var> scope = abs.scope();
    std::sort(scope.begin(), scope.end(), by_name);
    std::vector<Implication> out;
    for (const auto& y : scope) {
        std::vector<Var> others;
        for (const auto& v : scope)
            if (v != y) others.push_back(v);
        const std::uint32_t n = static_cast<std::uint32_t>(others.size());
        std::vector<std::uint32_t> subsets;
        for (std::uint32_t m = 1; m < (1u << n); ++m) subsets.push_back(m);
        std::stable_sort(subsets.begin(), subsets.end(),
                         [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
        std::vector<std::uint32_t> found;
        for (std::uint32_t m : subsets) {
            if (std::any_of(found.begin(), found.end(), [m](std::uint32_t f) { return (f & ~m) == 0; })) continue;
            std::vector<Var> ante;
            for (std::uint32_t i = 0; i < n; ++i)
                if (m >> i & 1u) ante.push_back(others[i]);
            const Var cons[] = {y};
            if (implies(abs, ante, cons)) {
                found.push_back(m);
                out.push_back({std::move(ante), {y}, std::nullopt});
            }
        }
    }
    auto key = [](const Implication& i) {
        std::vector<std::string> names;
        for (const auto& v : i.antecedents) names.push_back(v.str());
        return std::make_tuple(i.consequents[0].str(), names.size(), names);
    };
    std::sort(out.begin(), out.end(), [&](const Implication& a, const Implication& b) { return key(a) < key(b); });
    return out;
}

std::vector<Implication> result_implications(const PolyResult& r) {
    std::vector<Implication> out = minimal_implications(r.goal_output);
    for (const auto& [pt, abs] : r.points)
        for (auto imp : minimal_implications(abs)) {
            imp.at = pt;
            out.push_back(std::move(imp));
        }
    return out;
}

std::string render(const Implication& imp) {
    auto names = [](const std::vector<Var>& vs) {
        std::string s;
        for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + vs[i].str();
        return s;
    };
    std::string s = names(imp.antecedents) + " -> " + names(imp.consequents) + " @ ";
    if (!imp.at) return s + "goal";
    return s + std::to_string(imp.at->clause) + ":" + std::to_string(imp.at->index);
}

}  // namespace pga
