#pragma once

#include "pga/abs_map.hpp"
#include "pga/mode.hpp"
#include "pga/propagate.hpp"
#include "pga/symbol.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pga {

/// A set of mode parameters as a bitmask over parameter indices.
using ParamMask = std::uint32_t;
inline constexpr std::size_t kMaxParams = 32;
/// Above this many parameters the antichain lattice gets large; callers warn.
inline constexpr std::size_t kSoftParamLimit = 12;

/// The declared mode parameters, in declaration order.
class ParamTable {
public:
    ParamTable() = default;
    explicit ParamTable(std::vector<Symbol> names);

    /// Index of `name`, adding it if new. Throws Error past kMaxParams.
    std::size_t add(Symbol name);
    std::optional<std::size_t> index_of(Symbol name) const;
    std::size_t size() const { return names_.size(); }
    Symbol name(std::size_t i) const { return names_.at(i); }
    std::span<const Symbol> names() const { return names_; }
    ParamMask all_mask() const;

private:
    std::vector<Symbol> names_;
};

/// Polymorphic mode description: a disjunction of conjunctions of parameters,
/// held as the unique ⊆-minimal antichain of its equivalence class. The empty
/// collection is the infimum (g under every assignment); the collection
/// holding only the empty set is the supremum (u under every assignment).
class PMode {
public:
    PMode() = default;

    static PMode infimum() { return PMode(); }
    static PMode supremum() { return PMode(std::vector<ParamMask>{0}); }
    static PMode param(std::size_t index) { return PMode(std::vector<ParamMask>{ParamMask{1} << index}); }
    /// Canonicalizes an arbitrary collection of parameter sets.
    static PMode from_sets(std::vector<ParamMask> raw);

    std::span<const ParamMask> sets() const { return sets_; }
    bool is_infimum() const { return sets_.empty(); }
    bool is_supremum() const { return sets_.size() == 1 && sets_[0] == 0; }
    ParamMask used_params() const;

    friend bool operator==(const PMode&, const PMode&) = default;
    friend auto operator<=>(const PMode&, const PMode&) = default;

private:
    explicit PMode(std::vector<ParamMask> canonical) : sets_(std::move(canonical)) {}
    std::vector<ParamMask> sets_;  // minimal antichain sorted by mask value
};

/// Throws UnknownParam if a set mentions an index >= param_count.
PMode pm_canon(std::span<const ParamMask> raw, std::size_t param_count);
/// S1 ≼ S2: every member of S1 contains some member of S2.
bool pm_leq(const PMode& a, const PMode& b);
/// ⊕: canonicalized union.
PMode pm_lub(const PMode& a, const PMode& b);
/// ⊗: canonicalized pairwise unions.
PMode pm_glb(const PMode& a, const PMode& b);

/// Valuation of every declared parameter to g or u.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::span<const Mode> modes);
    /// Parameters in `u_mask` are u, the others g.
    Assignment(std::size_t count, ParamMask u_mask) : count_(count), u_mask_(u_mask) {}

    std::size_t size() const { return count_; }
    Mode operator[](std::size_t i) const { return (u_mask_ >> i) & 1u ? Mode::u : Mode::g; }
    ParamMask u_mask() const { return u_mask_; }

    /// All 2^count assignments in mask order.
    static std::vector<Assignment> all(std::size_t count);

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::size_t count_ = 0;
    ParamMask u_mask_ = 0;
};

/// ▽ over members of △ over each member's parameters.
Mode pm_instantiate(const PMode& s, const Assignment& kappa);

using PolyAbs = AbsMap<PMode>;

struct PolyLattice {
    using Value = PMode;
    static PMode glb(const PMode& a, const PMode& b) { return pm_glb(a, b); }
    static PMode lub(const PMode& a, const PMode& b) { return pm_lub(a, b); }
    static PMode bottom() { return PMode::infimum(); }
    static PMode top() { return PMode::supremum(); }
    static bool leq(const PMode& a, const PMode& b) { return pm_leq(a, b); }
};

inline PolyAbs poly_bottom(std::span<const Var> scope) { return PolyAbs::uniform(scope, PMode::infimum()); }
inline PolyAbs poly_top(std::span<const Var> scope) { return PolyAbs::uniform(scope, PMode::supremum()); }

bool pabs_leq(const PolyAbs& a, const PolyAbs& b);
PolyAbs pabs_lub(const PolyAbs& a, const PolyAbs& b);
PolyAbs pabs_glb(const PolyAbs& a, const PolyAbs& b);

PolyAbs pdown(const EqSet& e, const PolyAbs& zeta);
PolyAbs pup(const EqSet& e, const PolyAbs& eta);

PolyAbs punify(const Atom& a, const PolyAbs& theta, const Atom& b, const PolyAbs& sigma,
               Renamer& renamer, UnifyTrace<PMode>* trace = nullptr);

AbsMap<Mode> pabs_instantiate(const PolyAbs& a, const Assignment& kappa);

/// Parameter names of each member set, each list sorted and the lists sorted.
std::vector<std::vector<std::string>> param_names(const PMode& s, const ParamTable& params);
/// `[[alpha,beta],[gamma]]`; infimum is `[]`, supremum `[[]]`.
std::string render(const PMode& s, const ParamTable& params);
std::string render(const PolyAbs& a, const ParamTable& params, std::span<const Var> order = {});

}  // namespace pga
