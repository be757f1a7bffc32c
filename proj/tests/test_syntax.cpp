#include "support.hpp"

#include "pga/error.hpp"
#include "pga/oracle.hpp"

#include <doctest.h>

using namespace pga;
using namespace pga::test;

TEST_CASE("a one-clause program with its directive") {
    Program p = parse_program("p(X). :- analyze(p(X),[X=alpha]).");
    REQUIRE(p.clauses().size() == 1);
    CHECK(p.clause(0).body().empty());
    CHECK(render(p.directive().goal) == "p(X)");
    REQUIRE(p.directive().bindings.size() == 1);
    CHECK(p.directive().bindings[0].first == v("X"));
    CHECK(std::get<Symbol>(p.directive().bindings[0].second) == Symbol::intern("alpha"));
}

TEST_CASE("body-less clause with list syntax") {
    Program p = parse_program(":- analyze(append(A,B,C), [A=g,B=g,C=u]).\nappend([],L,L).");
    const Clause& c = p.clause(0);
    CHECK(c.body().empty());
    CHECK(c.head().args()[0] == Term::compound("[]"));
    CHECK(std::get<Mode>(p.directive().bindings[2].second) == Mode::u);
}

TEST_CASE("malformed clause reports a position") {
    try {
        parse_program(":- analyze(p(X), [X=g]).\np(X) :- X < .");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 13);
    }
}

TEST_CASE("unsupported constructs are syntax errors") {
    const char* bad[] = {
        ":- analyze(p, []).\np :- !.",
        ":- analyze(p, []).\np :- \\+ q.",
        ":- analyze(p, []).\np :- q ; r.",
        ":- analyze(p, []).\np :- (q -> r).",
        ":- analyze(p, []).\np(X) :- X.",
        ":- analyze(p, []).\np('abc",
        ":- analyze(p, []).\np(X) :- f(X",
    };
    for (const char* src : bad) CHECK_THROWS_AS(parse_program(src), SyntaxError);
}

TEST_CASE("directive errors") {
    CHECK_THROWS_AS(parse_program("p(X)."), DirectiveError);
    CHECK_THROWS_AS(parse_program(":- analyze(p(X),[X=g]).\n:- analyze(p(X),[X=g]).\np(a)."), DirectiveError);
    CHECK_THROWS_AS(parse_program(":- analyze(p(X),[X=g,Y=u]).\np(a)."), DirectiveError);
    CHECK_THROWS_AS(parse_program(":- analyze(p(X,Y),[X=g]).\np(a,b)."), DirectiveError);
    CHECK_THROWS_AS(parse_program(":- analyze(p(X),[X=g,X=u]).\np(a)."), DirectiveError);
    CHECK_THROWS_AS(parse_program(":- dynamic(p).\np(a)."), DirectiveError);
}

TEST_CASE("parameters may be shared between goal variables") {
    Program p = parse_program(":- analyze(p(X,Y),[X=alpha,Y=alpha]).\np(a,a).");
    CHECK(p.directive().params().size() == 1);
}

TEST_CASE("rendering terms and clauses") {
    CHECK(render(Term::compound("f", {t("X"), t("Y")})) == "f(X,Y)");
    CHECK(render(Term::compound("nil")) == "nil");
    Program p = parse_program(":- analyze(append(A,B,C), [A=g,B=g,C=u]).\n"
                              "append([H|L1],L2,[H|L3]) :- append(L1,L2,L3).");
    CHECK(render(p.clause(0)) == "append([H|L1],L2,[H|L3]) :- append(L1,L2,L3).");
    CHECK(render(t("[a,b|T]")) == "[a,b|T]");
    CHECK(render(t("'hello world'")) == "'hello world'");
    CHECK(render(t("(X+Y)*Z-W")) == "(X+Y)*Z-W");
    CHECK(render(t("X-(Y-Z)")) == "X-(Y-Z)");
}

TEST_CASE("built-in literals") {
    Program p = parse_program(":- analyze(p(X),[X=g]).\n"
                              "p(X) :- X = f(Y), Y < 3, Z is Y*2+1, Z =\\= Y, Y >= 0, Y =< 9, Y =:= Y, Y > 1, true.\n"
                              "q :- fail.");
    const auto body = p.clause(0).body();
    REQUIRE(body.size() == 9);
    CHECK(body[0].kind() == BuiltinKind::UnifyEq);
    CHECK(body[1].kind() == BuiltinKind::Lt);
    CHECK(body[2].kind() == BuiltinKind::Is);
    CHECK(render(body[2]) == "Z is Y*2+1");
    CHECK(body[3].kind() == BuiltinKind::ArithNe);
    CHECK(body[8].kind() == BuiltinKind::True);
    CHECK(p.clause(1).body()[0].kind() == BuiltinKind::Fail);
    CHECK_THROWS_AS(Literal::builtin(BuiltinKind::Lt, {t("X")}), std::invalid_argument);
}

TEST_CASE("anonymous variables get distinct fresh names") {
    Program p = parse_program(":- analyze(p(X),[X=g]).\np(_G1) :- q(_, _).\nq(a,b).");
    const auto vars = p.clause(0).vars();
    REQUIRE(vars.size() == 3);
    CHECK(vars[0] == v("_G1"));
    CHECK(vars[1] != vars[2]);
    CHECK(vars[1] != v("_G1"));
}

TEST_CASE("clause variables follow first occurrence") {
    Program p = parse_program(":- analyze(p(X),[X=g]).\np(X) :- q(Y,X), r(Z).\nq(a,b).\nr(c).");
    const auto vars = p.clause(0).vars();
    CHECK(std::vector<Var>(vars.begin(), vars.end()) == std::vector<Var>{v("X"), v("Y"), v("Z")});
}

TEST_CASE("undefined calls are flagged") {
    Program p = parse_program(":- analyze(p(X),[X=g]).\np(X) :- q(X), r(X).\nq(a).");
    auto undef = p.undefined_calls();
    REQUIRE(undef.size() == 1);
    CHECK(undef[0].str() == "r/1");
}

TEST_CASE("comments are skipped") {
    Program p = parse_program("% leading\n:- analyze(p(X),[X=g]). /* block */\np(a). % trailing\n");
    CHECK(p.clauses().size() == 1);
}

namespace {

Term random_term(Gen& g, std::span<const Var> vars, int depth) {
    static const char* names[] = {"a", "f", "g", "nil", "'hello world'", "[]", ".", "+", "-", "*", "0", "12"};
    if (depth == 0 || g.coin(0.3)) {
        if (g.coin()) return Term::variable(vars[g.below(vars.size())]);
        const char* c[] = {"a", "nil", "[]", "0", "12", "hello world", "+"};
        return Term::compound(c[g.below(std::size(c))]);
    }
    std::string f = names[g.below(std::size(names))];
    if (f == "'hello world'") f = "hello world";
    std::size_t arity = 1 + g.below(3);
    if (f == "." || f == "+" || f == "-" || f == "*") arity = 2;
    if (f == "[]" || f == "0" || f == "12") arity = 0;
    std::vector<Term> args;
    for (std::size_t i = 0; i < arity; ++i) args.push_back(random_term(g, vars, depth - 1));
    return Term::compound(f, std::move(args));
}

}  // namespace

TEST_CASE("round trip: parse(render(p)) == p on random programs") {
    Gen g(42);
    const std::vector<Var> vars = {v("X"), v("Y"), v("Zs")};
    const BuiltinKind kinds[] = {BuiltinKind::UnifyEq, BuiltinKind::Lt, BuiltinKind::Ge, BuiltinKind::ArithNe,
                                 BuiltinKind::Is};
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Clause> clauses;
        const std::size_t n = 1 + g.below(3);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Term> hargs;
            for (std::size_t k = 0; k < g.below(3); ++k) hargs.push_back(random_term(g, vars, 3));
            std::vector<Literal> body;
            for (std::size_t k = 0; k < g.below(3); ++k) {
                if (g.coin()) {
                    body.push_back(Literal::call(Atom("q", {random_term(g, vars, 2)})));
                } else {
                    body.push_back(Literal::builtin(kinds[g.below(std::size(kinds))],
                                                    {random_term(g, vars, 2), random_term(g, vars, 2)}));
                }
            }
            clauses.emplace_back(i, Atom("p", std::move(hargs)), std::move(body));
        }
        Directive d{Atom("p", {t("X")}), {{v("X"), Symbol::intern("alpha")}}};
        Program p(std::move(clauses), d);
        const std::string text = render(p);
        INFO(text);
        Program back = parse_program(text);
        CHECK(back == p);
        for (const auto& c : back.clauses()) {
            std::vector<Var> expected;
            collect_vars(c.head().as_term(), expected);
            for (const auto& l : c.body())
                for (const auto& x : l.vars())
                    if (std::find(expected.begin(), expected.end(), x) == expected.end()) expected.push_back(x);
            CHECK(std::vector<Var>(c.vars().begin(), c.vars().end()) == expected);
        }
    }
}
