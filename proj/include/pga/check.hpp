#pragma once

#include "pga/oracle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pga {

struct SuiteReport {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::optional<std::string> first_failure;
    double seconds = 0;
    /// Safety trials whose abstract result claimed groundness beyond the input,
    /// so that the concrete check had something to refute.
    std::size_t nonvacuous = 0;

    bool ok() const { return failures == 0; }
};

struct CheckOptions {
    std::uint64_t seed = 1;
    std::size_t trials = 200;
    std::size_t depth = 2;
};

/// Lattice laws of {g,u}, all PM laws, canonicalization and the
/// instantiation homomorphism, exhaustively for 1 to `max_params` parameters.
SuiteReport suite_lattice_laws(std::size_t max_params = 3);

/// Random (A, θ♯, B, σ♯) instances: instantiated punify equals munify on
/// instantiated inputs under every κ.
SuiteReport suite_poly_precision(const CheckOptions& o);
/// Random instances: munify is safe against the collecting unification.
SuiteReport suite_mono_safety(const CheckOptions& o);
/// Random instances: under every κ the instantiated punify result is safe.
SuiteReport suite_poly_safety(const CheckOptions& o);
/// The two concrete unification paths agree on random enumerated pairs.
SuiteReport suite_cunify_paths(const CheckOptions& o);
/// Moore family and lub-abstraction checks over small scopes.
SuiteReport suite_concretization(const CheckOptions& o);
/// Random tiny programs: every SLD observation lies in γ of the engine's
/// annotation at that point.
SuiteReport suite_engine_soundness(const CheckOptions& o);

/// Exhaustive suites only when `o.trials` is zero.
std::vector<SuiteReport> run_all_suites(const CheckOptions& o);

/// Every (A, B) generated by the random suites uses this shape.
struct Instance {
    Atom a;
    Atom b;
    std::vector<Var> va;
    std::vector<Var> vb;
};
Instance random_instance(Gen& g, std::size_t depth);

}  // namespace pga
