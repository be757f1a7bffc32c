// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "pga/check.hpp"
#include "pga/deps.hpp"
#include "pga/engine.hpp"
#include "pga/syntax.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace pga;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

// Time limits, in seconds.
constexpr double kWorkedExampleLimit = 1e-3;
constexpr double kCorpusLimit = 5.0;
constexpr double kPrecisionLimit = 60.0;
constexpr double kSafetyLimit = 120.0;
constexpr double kLatticeLimit = 10.0;

constexpr std::size_t kPrecisionTrials = 1000;
constexpr std::size_t kSafetyTrials = 200;

int failures = 0;

struct Deferred {
    bool ok = false;
    std::string what;
};
Deferred ac9_line;

void report(const char* id, bool ok, const std::string& what) {
    std::cout << id << " " << (ok ? "PASS" : "FAIL") << "  " << what << std::endl;
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

/// Mean seconds per call over enough repetitions to be measurable.
double mean_seconds(const std::function<void()>& f) {
    constexpr int reps = 200;
    const auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) f();
    return seconds_since(t0) / reps;
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

Var v(std::string_view n) { return Var::named(n); }
Var r1(std::string_view n) { return Renaming(1)(v(n)); }

PMode sets(std::initializer_list<std::initializer_list<int>> ss) {
    std::vector<ParamMask> raw;
    for (const auto& s : ss) {
        ParamMask m = 0;
        for (int i : s) m |= ParamMask{1} << i;
        raw.push_back(m);
    }
    return PMode::from_sets(std::move(raw));
}

Program load(const std::string& name) {
    std::ifstream in(std::string(PGA_CORPUS_DIR) + "/" + name);
    std::stringstream s;
    s << in.rdbuf();
    return parse_program(s.str());
}

PolyResult poly_of(const Program& p) {
    return analyze_poly(p, p.directive().goal, poly_input(p.directive(), p.directive().params()));
}

void ac1() {
    const Atom a = parse_atom("g(X,f(Y,f(Z,Z)),Y)");
    const Atom b = parse_atom("g(f(X,Y),Z,X)");
    const MonoAbs theta({{v("X"), Mode::g}, {v("Y"), Mode::u}, {v("Z"), Mode::u}});
    const MonoAbs sigma({{v("X"), Mode::u}, {v("Y"), Mode::u}, {v("Z"), Mode::g}});
    Renamer rn;
    UnifyTrace<Mode> tr;
    const MonoAbs out = munify(a, theta, b, sigma, rn, &tr);

    const Term y1 = Term::variable(r1("Y"));
    const EqSet e0({{r1("X"), Term::compound("f", {y1, Term::variable(v("Y"))})},
                    {v("Z"), Renaming(1)(parse_term("f(Y,f(Z,Z))"))},
                    {v("X"), y1}});
    auto plus = [](Mode x0, Mode y0, Mode z0, Mode x, Mode y, Mode z) {
        return MonoAbs({{r1("X"), x0}, {r1("Y"), y0}, {r1("Z"), z0}, {v("X"), x}, {v("Y"), y}, {v("Z"), z}});
    };
    constexpr Mode g = Mode::g, u = Mode::u;
    const bool ok = tr.e0 && *tr.e0 == e0 && tr.eta == plus(g, g, g, u, g, g) && tr.beta == plus(g, g, g, g, g, g) &&
                    out == MonoAbs({{v("X"), g}, {v("Y"), g}, {v("Z"), g}});
    const double t = mean_seconds([&] { munify(a, theta, b, sigma, rn); });
    report("AC1", ok && t < kWorkedExampleLimit,
           "mono worked example: result " + render(out) + ", E0/eta/beta match; " + fmt("%.4f ms", t * 1e3) +
               " per call (limit 1 ms)");
}

void ac2() {
    const Atom a = parse_atom("g(X,f(Y,f(Z,Z)),Y)");
    const Atom b = parse_atom("g(f(X,Y),Z,X)");
    const PolyAbs theta({{v("X"), sets({{0, 1}})}, {v("Y"), sets({{0, 2}})}, {v("Z"), sets({{1, 2}})}});
    const PolyAbs sigma({{v("X"), sets({{0}, {1}})}, {v("Y"), sets({{1, 2}})}, {v("Z"), PMode::supremum()}});
    Renamer rn;
    UnifyTrace<PMode> tr;
    const PolyAbs out = punify(a, theta, b, sigma, rn, &tr);

    const PMode p12 = sets({{0, 1}}), p23 = sets({{1, 2}}), p123 = sets({{0, 1, 2}});
    auto plus = [](PMode x0, PMode y0, PMode z0, PMode x, PMode y, PMode z) {
        return PolyAbs({{r1("X"), x0}, {r1("Y"), y0}, {r1("Z"), z0}, {v("X"), x}, {v("Y"), y}, {v("Z"), z}});
    };
    const bool ok = tr.eta == plus(p12, p123, p23, sets({{0}, {1}}), p123, PMode::supremum()) &&
                    tr.beta == plus(p123, p123, p23, p123, p123, p23) &&
                    out == PolyAbs({{v("X"), p123}, {v("Y"), p123}, {v("Z"), p23}});
    const ParamTable params({Symbol::intern("a1"), Symbol::intern("a2"), Symbol::intern("a3")});
    const double t = mean_seconds([&] { punify(a, theta, b, sigma, rn); });
    report("AC2", ok && t < kWorkedExampleLimit,
           "poly worked example: result " + render(out, params) + ", eta/beta match; " + fmt("%.4f ms", t * 1e3) +
               " per call (limit 1 ms)");
}

void ac3_and_9() {
    bool golden = true;
    std::string detail;
    {
        const Program p = load("append.pl");
        const MonoResult r = analyze_mono(p, p.directive().goal, mono_input(p.directive(), {}, nullptr));
        const bool ok = r.goal_output == MonoAbs({{v("L1"), Mode::g}, {v("L2"), Mode::g}, {v("L3"), Mode::g}});
        golden = golden && ok;
        if (!ok) detail += " append";
    }
    {
        const PolyResult r = poly_of(load("lookup.pl"));
        const bool ok =
            r.goal_output == PolyAbs({{v("K"), sets({{0, 1}})}, {v("D"), sets({{1}})}, {v("V"), sets({{1, 2}})}});
        golden = golden && ok;
        if (!ok) detail += " lookup";
    }
    {
        const PolyResult r = poly_of(load("permsort.pl"));
        const bool ok = r.goal_output == PolyAbs({{v("Xs"), sets({{0}})}, {v("Ys"), sets({{0, 1}})}});
        golden = golden && ok;
        if (!ok) detail += " permsort";
    }
    {
        const PolyResult r = poly_of(load("factorial.pl"));
        const bool ok = r.goal_output == PolyAbs({{v("N"), PMode::infimum()}, {v("F"), PMode::infimum()}});
        golden = golden && ok;
        if (!ok) detail += " factorial";
    }

    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(PGA_CORPUS_DIR))
        if (e.path().extension() == ".pl") files.push_back(e.path().filename().string());
    std::sort(files.begin(), files.end());

    bool all_terminate = true;
    std::string ratios;
    const auto t0 = Clock::now();
    for (const auto& f : files) {
        const Program p = load(f);
        const auto params = p.directive().params();
        try {
            const auto tp = Clock::now();
            const PolyResult r = poly_of(p);
            const double poly_s = seconds_since(tp);
            const auto kappas = Assignment::all(params.size());
            const auto tm = Clock::now();
            for (const auto& k : kappas) analyze_mono(p, p.directive().goal, mono_input(p.directive(), params, &k));
            const double mono_s = seconds_since(tm) / static_cast<double>(kappas.size());
            ratios += " " + fs::path(f).stem().string() + "=" + fmt("%.2f", mono_s > 0 ? poly_s / mono_s : 0.0) +
                      "(" + std::to_string(r.iterations) + " it)";
        } catch (const IterationLimit&) {
            all_terminate = false;
            ratios += " " + f + "=no fixpoint";
        }
    }
    const double total = seconds_since(t0);
    report("AC3", golden && all_terminate && total < kCorpusLimit,
           "corpus goldens (append, lookup, permsort, factorial)" + (golden ? std::string(" match") : " differ:" + detail) +
               "; " + std::to_string(files.size()) + " programs, both domains, " + fmt("%.3f s", total) +
               " (limit 5 s)");
    ac9_line = {all_terminate,
           "every corpus program reaches a fixpoint within " + std::to_string(EngineOptions{}.max_iterations) +
               " iterations; poly/mono time ratio (informational):" + ratios};
}

void ac4() {
    const PolyResult r = poly_of(load("lookup.pl"));
    const std::vector<Mode> k = {Mode::g, Mode::g, Mode::u};
    const MonoResult m = instantiate_result(r, Assignment(k));
    const bool ok = m.goal_output == MonoAbs({{v("K"), Mode::g}, {v("D"), Mode::g}, {v("V"), Mode::g}});
    report("AC4", ok, "lookup under alpha=g, beta=g, gamma=u gives " + render(m.goal_output));
}

void ac5() {
    CheckOptions o;
    o.seed = 1;
    o.trials = kPrecisionTrials;
    const SuiteReport s = suite_poly_precision(o);
    report("AC5", s.ok() && s.trials >= kPrecisionTrials && s.seconds < kPrecisionLimit,
           "instantiated punify equals munify for every assignment: " + std::to_string(s.trials) + " trials, " +
               std::to_string(s.failures) + " failures, " + fmt("%.2f s", s.seconds) + " (limit 60 s)" +
               (s.first_failure ? "; first: " + *s.first_failure : ""));
}

void ac6() {
    CheckOptions o;
    o.seed = 1;
    o.trials = kSafetyTrials;
    const SuiteReport m = suite_mono_safety(o);
    const SuiteReport p = suite_poly_safety(o);
    const double t = m.seconds + p.seconds;
    report("AC6", m.ok() && p.ok() && m.trials >= kSafetyTrials && p.trials >= kSafetyTrials && t < kSafetyLimit,
           "collecting unification contained in the abstract result: mono " + std::to_string(m.trials) +
               " trials (" + std::to_string(m.nonvacuous) + " nonvacuous), poly " + std::to_string(p.trials) +
               " trials (" + std::to_string(p.nonvacuous) + " nonvacuous), " +
               std::to_string(m.failures + p.failures) + " failures, " + fmt("%.2f s", t) + " (limit 120 s)" +
               (m.first_failure ? "; first: " + *m.first_failure : "") +
               (p.first_failure ? "; first: " + *p.first_failure : ""));
}

void ac7() {
    const SuiteReport s = suite_lattice_laws(3);
    // Independent count of canonical forms over three parameters.
    std::set<PMode> forms;
    for (unsigned family = 0; family < 256; ++family) {
        std::vector<ParamMask> raw;
        for (ParamMask m = 0; m < 8; ++m)
            if (family >> m & 1u) raw.push_back(m);
        forms.insert(PMode::from_sets(raw));
    }
    report("AC7", s.ok() && forms.size() == 20 && s.seconds < kLatticeLimit,
           "lattice laws, canonicalization and instantiation homomorphism for 1..3 parameters: " +
               std::to_string(s.trials) + " checks, " + std::to_string(s.failures) + " failures, " +
               std::to_string(forms.size()) + " antichains at n=3, " + fmt("%.3f s", s.seconds) + " (limit 10 s)");
}

void ac8() {
    const PolyResult r = poly_of(load("permsort.pl"));
    std::vector<std::string> at_goal;
    for (const auto& imp : result_implications(r))
        if (!imp.at) at_goal.push_back(render(imp));
    // Semantic check over every assignment.
    const Var xs = v("Xs"), ys = v("Ys");
    bool fwd = true, back = true;
    for (const auto& k : Assignment::all(2)) {
        const MonoAbs m = pabs_instantiate(r.goal_output, k);
        if (m.at(xs) == Mode::g && m.at(ys) != Mode::g) fwd = false;
        if (m.at(ys) == Mode::g && m.at(xs) != Mode::g) back = false;
    }
    const bool ok = at_goal == std::vector<std::string>{"Xs -> Ys @ goal"} && fwd && !back;
    std::string listed;
    for (const auto& s : at_goal) listed += (listed.empty() ? "" : "; ") + s;
    report("AC8", ok, "permsort goal implications [" + listed + "]; Xs->Ys holds under all 4 assignments: " +
                          (fwd ? "yes" : "no") + ", Ys->Xs: " + (back ? "yes" : "no"));
}

}  // namespace

int main() {
    ac1();
    ac2();
    ac3_and_9();
    ac4();
    ac5();
    ac6();
    ac7();
    ac8();
    report("AC9", ac9_line.ok, ac9_line.what);
    std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all passed")
              << std::endl;
    return failures ? 1 : 0;
}
