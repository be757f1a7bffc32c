#pragma once

#include "pga/engine.hpp"
#include "pga/mono.hpp"
#include "pga/poly.hpp"
#include "pga/syntax.hpp"
#include "pga/unify.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace pga {

/// Bounded Herbrand universe: terms over `signature` up to `depth`, plus
/// nonground terms over a pool of `pool` variables named ?1, ?2, ...
struct Universe {
    std::vector<std::pair<Symbol, std::size_t>> signature;
    std::size_t depth = 2;
    std::size_t pool = 2;
    /// Also enumerate leaving a variable unbound.
    bool identity = true;

    /// {a/0, f/1, g/2}.
    static Universe standard(std::size_t depth = 2);
    std::vector<Term> terms() const;
};

inline constexpr std::size_t kMaxEnumScope = 4;
inline constexpr std::size_t kMaxEnumTerms = 200;

using ConcreteSet = std::vector<Substitution>;

/// Every map from `scope` to terms of `u`. Throws BudgetExceeded past
/// kMaxEnumScope variables or kMaxEnumTerms terms.
ConcreteSet enumerate_subs(std::span<const Var> scope, const Universe& u);
ConcreteSet gamma_filter(const ConcreteSet& s, const MonoAbs& a);

/// mgu(Ψ(θ1)(Ψ(a1)), θ2(a2)) ∘ θ2, restricted to `scope2`.
MaybeSubst concrete_unify(const Atom& a1, const Substitution& theta1, const Atom& a2, const Substitution& theta2,
                          std::span<const Var> scope2, Renamer& renamer);
/// Same result computed by solving eq(Ψθ1), Ψ(a1) = a2 and eq(θ2) at once.
/// Agrees with concrete_unify up to renaming of non-scope variables.
MaybeSubst concrete_unify_joint(const Atom& a1, const Substitution& theta1, const Atom& a2,
                                const Substitution& theta2, std::span<const Var> scope2, Renamer& renamer);

/// Collecting unification: every non-failing concrete_unify over the product.
ConcreteSet cunify(const Atom& a1, const ConcreteSet& s1, const Atom& a2, const ConcreteSet& s2,
                   std::span<const Var> scope2, Renamer& renamer);

/// Equal up to a consistent renaming of variables.
bool is_variant(const Term& a, const Term& b);
/// Images of `scope` under the two substitutions are variants of each other.
bool same_up_to_renaming(const Substitution& a, const Substitution& b, std::span<const Var> scope);

std::string render(const Substitution& s);

/// Every member of cunify(A, γ(θ♭), B, γ(σ♭)) lies in γ(result). Returns a
/// description of the first violating pair, if any. Result scope is σ♭'s.
std::optional<std::string> find_unsafe(const Atom& a, const MonoAbs& theta, const Atom& b, const MonoAbs& sigma,
                                       const MonoAbs& result, const Universe& u);
/// Same property checked by materializing the collecting unification.
std::optional<std::string> find_unsafe_materialized(const Atom& a, const MonoAbs& theta, const Atom& b,
                                                    const MonoAbs& sigma, const MonoAbs& result,
                                                    const Universe& u);

bool check_mono_safety(const Atom& a, const MonoAbs& theta, const Atom& b, const MonoAbs& sigma,
                       const Universe& u);

/// Memoizes safety checks across repeated (θ♭, σ♭, result) triples.
class SafetyCache {
public:
    explicit SafetyCache(Universe u) : u_(std::move(u)) {}
    std::optional<std::string> find_unsafe(const Atom& a, const MonoAbs& theta, const Atom& b,
                                           const MonoAbs& sigma, const MonoAbs& result);
    const Universe& universe() const { return u_; }

private:
    Universe u_;
    std::map<std::tuple<MonoAbs, MonoAbs, MonoAbs>, std::optional<std::string>> cache_;
};

/// For every κ over `param_count` parameters: the instantiated punify result
/// equals munify on instantiated inputs, and is safe against the collecting
/// unification. Returns the first failure.
std::optional<std::string> find_poly_failure(const Atom& a, const PolyAbs& theta, const Atom& b,
                                             const PolyAbs& sigma, std::size_t param_count, SafetyCache& cache,
                                             bool check_safety = true);
bool check_poly(const Atom& a, const PolyAbs& theta, const Atom& b, const PolyAbs& sigma,
                std::size_t param_count, const Universe& u);

/// Depth-bounded SLD resolution collecting, for every program point reached,
/// the substitution on the clause variables. Only user calls, `=`, true and
/// fail are executed; other built-ins throw std::invalid_argument.
struct SldLimits {
    std::size_t max_depth = 6;
    std::size_t max_steps = 20000;
};

struct SldObservation {
    std::optional<ProgramPoint> at;  // empty for a goal answer
    std::vector<std::pair<Var, Term>> bindings;
};

std::vector<SldObservation> collect_sld(const Program& p, const Atom& goal, const Substitution& initial,
                                        SldLimits limits = {});

/// Seeded generators for random instances.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    /// Term of depth ≤ depth over {a/0, f/1, g/2} and `vars`.
    Term term(std::span<const Var> vars, std::size_t depth);
    Atom atom(Symbol pred, std::size_t arity, std::span<const Var> vars, std::size_t depth);
    Mode mode() { return coin() ? Mode::g : Mode::u; }
    MonoAbs mono(std::span<const Var> scope);
    PMode pmode(std::size_t param_count);
    PolyAbs poly(std::span<const Var> scope, std::size_t param_count);
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace pga
