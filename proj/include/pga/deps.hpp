#pragma once

#include "pga/engine.hpp"
#include "pga/poly.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pga {

/// Groundness of all antecedents implies groundness of all consequents, under
/// every assignment. `at` is empty for the goal.
struct Implication {
    std::vector<Var> antecedents;
    std::vector<Var> consequents;
    std::optional<ProgramPoint> at;

    friend bool operator==(const Implication&, const Implication&) = default;
};

/// ⊕ of the consequents' descriptions ≼ ⊕ of the antecedents'. Throws
/// ScopeMismatch for variables outside the scope, and std::invalid_argument if
/// either set is empty or they intersect.
bool implies(const PolyAbs& abs, std::span<const Var> ante, std::span<const Var> cons);

inline constexpr std::size_t kMaxImplicationScope = 10;

/// Implications with one consequent and a ⊆-minimal antecedent set, ordered by
/// consequent name, then antecedent count, then antecedent names. Throws
/// BudgetExceeded past kMaxImplicationScope variables.
std::vector<Implication> minimal_implications(const PolyAbs& abs);

/// Minimal implications at the goal followed by those at every program point.
std::vector<Implication> result_implications(const PolyResult& r);

/// `Xs -> Ys @ goal`, or `@ 3:1` for clause 3, point 1.
std::string render(const Implication& imp);

}  // namespace pga
