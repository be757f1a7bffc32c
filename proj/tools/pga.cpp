// Command-line driver for the groundness analyzer.

#include "pga/check.hpp"
#include "pga/deps.hpp"
#include "pga/engine.hpp"
#include "pga/report.hpp"
#include "pga/syntax.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace pga;

namespace {

enum Exit { kOk = 0, kInput = 1, kAnalysis = 2, kCheck = 3 };

/// Input problems, reported with exit code 1.
struct InputError : Error {
    using Error::Error;
};

struct Loaded {
    Program program;
    ParamTable params;
};

Loaded load(const std::string& path, std::size_t max_params) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Program p = parse_program(buf.str());
    ParamTable params = p.directive().params();
    if (params.size() > max_params)
        std::cerr << "warning: " << params.size() << " mode parameters exceed the soft limit of " << max_params
                  << "; the analysis may be slow\n";
    return {std::move(p), std::move(params)};
}

Assignment parse_assignment(const std::vector<std::string>& items, const ParamTable& params) {
    std::vector<std::optional<Mode>> modes(params.size());
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("expected name=g|u, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        auto m = parse_mode(item.substr(eq + 1));
        if (!m) throw InputError("invalid mode '" + item.substr(eq + 1) + "' for " + name + " (use g or u)");
        auto i = params.index_of(Symbol::intern(name));
        if (!i) throw InputError("unknown parameter " + name);
        if (modes[*i]) throw InputError("parameter " + name + " assigned twice");
        modes[*i] = *m;
    }
    std::vector<Mode> out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (!modes[i]) throw InputError("no mode assigned to parameter " + params.name(i).str());
        out.push_back(*modes[i]);
    }
    return Assignment(out);
}

struct Options {
    std::string path;
    std::string mode = "poly";
    std::string format = "text";
    std::vector<std::string> assign;
    std::size_t max_params = kSoftParamLimit;
    CheckOptions check;
    std::vector<std::string> corpus;
};

int cmd_analyze(const Options& o) {
    Loaded l = load(o.path, o.max_params);
    const Directive& d = l.program.directive();
    if (o.mode == "poly") {
        if (!o.assign.empty()) throw InputError("--assign applies to mono analysis and instantiate");
        PolyResult r = analyze_poly(l.program, d.goal, poly_input(d, l.params));
        std::cout << (o.format == "json" ? json_report(l.program, r, l.params) : text_report(l.program, r, l.params))
                  << "\n";
        return kOk;
    }
    std::optional<Assignment> kappa;
    if (!o.assign.empty() || l.params.size() == 0) kappa = parse_assignment(o.assign, l.params);
    if (!kappa) throw InputError("mono analysis of a goal with parameters needs --assign");
    MonoResult r = analyze_mono(l.program, d.goal, mono_input(d, l.params, &*kappa));
    std::cout << (o.format == "json" ? json_report(l.program, r, l.params) : text_report(l.program, r)) << "\n";
    return kOk;
}

int cmd_instantiate(const Options& o) {
    Loaded l = load(o.path, o.max_params);
    const Assignment kappa = parse_assignment(o.assign, l.params);
    const Directive& d = l.program.directive();
    MonoResult r = instantiate_result(analyze_poly(l.program, d.goal, poly_input(d, l.params)), kappa);
    std::cout << (o.format == "json" ? json_report(l.program, r, l.params) : text_report(l.program, r)) << "\n";
    return kOk;
}

int cmd_deps(const Options& o) {
    Loaded l = load(o.path, o.max_params);
    const Directive& d = l.program.directive();
    PolyResult r = analyze_poly(l.program, d.goal, poly_input(d, l.params));
    for (const auto& imp : result_implications(r)) std::cout << render(imp) << "\n";
    return kOk;
}

int cmd_check(const Options& o) {
    bool ok = true;
    for (const auto& s : run_all_suites(o.check)) {
        std::cout << (s.ok() ? "PASS " : "FAIL ") << s.name << ": " << s.trials << " trials, " << s.failures
                  << " failures";
        if (s.nonvacuous) std::cout << " (" << s.nonvacuous << " nonvacuous)";
        std::cout << "\n";
        if (s.first_failure) std::cout << "  first counterexample: " << *s.first_failure << "\n";
        ok = ok && s.ok();
    }
    return ok ? kOk : kCheck;
}

double millis_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

int cmd_corpus(const Options& o) {
    std::vector<std::string> files;
    for (const auto& p : o.corpus) {
        if (fs::is_directory(p)) {
            for (const auto& e : fs::directory_iterator(p))
                if (e.path().extension() == ".pl") files.push_back(e.path().string());
        } else {
            files.push_back(p);
        }
    }
    std::sort(files.begin(), files.end());
    int status = kOk;
    std::cout << std::left << std::setw(16) << "program" << std::setw(28) << "goal" << std::right << std::setw(10)
              << "poly ms" << std::setw(10) << "mono ms" << std::setw(8) << "ratio" << std::setw(8) << "kappas"
              << std::setw(7) << "iters" << "\n";
    for (const auto& f : files) {
        try {
            Loaded l = load(f, o.max_params);
            const Directive& d = l.program.directive();
            auto t0 = std::chrono::steady_clock::now();
            PolyResult pr = analyze_poly(l.program, d.goal, poly_input(d, l.params));
            const double poly_ms = millis_since(t0);
            const auto kappas = Assignment::all(l.params.size());
            t0 = std::chrono::steady_clock::now();
            for (const auto& k : kappas) analyze_mono(l.program, d.goal, mono_input(d, l.params, &k));
            const double mono_ms = millis_since(t0) / static_cast<double>(kappas.size());
            std::cout << std::left << std::setw(16) << fs::path(f).stem().string() << std::setw(28)
                      << render(d.goal) << std::right << std::fixed << std::setprecision(3) << std::setw(10)
                      << poly_ms << std::setw(10) << mono_ms << std::setw(8) << std::setprecision(2)
                      << (mono_ms > 0 ? poly_ms / mono_ms : 0.0) << std::setw(8) << kappas.size() << std::setw(7)
                      << pr.iterations << "\n";
        } catch (const Error& e) {
            std::cerr << f << ": " << e.what() << "\n";
            status = std::max(status, static_cast<int>(kAnalysis));
        }
    }
    return status;
}

int report(const std::exception& e, int code) {
    std::cerr << "error: " << e.what() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groundness analysis for a Prolog subset, monomorphic and polymorphic"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c) {
        c->add_option("file", o.path, "Program with an analyze/2 directive")->required();
        c->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
        c->add_option("--max-params", o.max_params, "Warn above this many mode parameters");
    };

    auto* analyze = app.add_subcommand("analyze", "Analyze a program and print the annotated listing");
    add_common(analyze);
    analyze->add_option("--mode", o.mode, "Domain")->check(CLI::IsMember({"mono", "poly"}));
    analyze->add_option("--assign", o.assign, "Parameter modes for mono analysis, e.g. alpha=g,beta=u")
        ->delimiter(',');

    auto* inst = app.add_subcommand("instantiate", "Instantiate the polymorphic result under an assignment");
    add_common(inst);
    inst->add_option("--assign", o.assign, "Mode of every parameter, e.g. alpha=g,beta=u")
        ->delimiter(',')
        ->required();

    auto* deps = app.add_subcommand("deps", "List groundness implications valid under every assignment");
    deps->add_option("file", o.path, "Program with an analyze/2 directive")->required();
    deps->add_option("--max-params", o.max_params, "Warn above this many mode parameters");

    auto* check = app.add_subcommand("check", "Run the oracle and lattice-law suites");
    check->add_option("--seed", o.check.seed, "Random seed");
    check->add_option("--trials", o.check.trials, "Trials per randomized suite; 0 runs exhaustive suites only");
    check->add_option("--depth", o.check.depth, "Maximum term depth")->check(CLI::Range(1, 2));

    auto* corpus = app.add_subcommand("corpus", "Analyze every program with both domains and report timings");
    corpus->add_option("paths", o.corpus, "Files or directories")->required();
    corpus->add_option("--max-params", o.max_params, "Warn above this many mode parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInput;
    }

    try {
        if (*analyze) return cmd_analyze(o);
        if (*inst) return cmd_instantiate(o);
        if (*deps) return cmd_deps(o);
        if (*check) return cmd_check(o);
        return cmd_corpus(o);
    } catch (const SyntaxError& e) {
        return report(e, kInput);
    } catch (const DirectiveError& e) {
        return report(e, kInput);
    } catch (const UnknownParam& e) {
        return report(e, kInput);
    } catch (const InputError& e) {
        return report(e, kInput);
    } catch (const std::exception& e) {
        return report(e, kAnalysis);
    }
}
