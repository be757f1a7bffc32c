#include "support.hpp"

#include <doctest.h>

using namespace pga;
using namespace pga::test;

namespace {

Var r1(std::string_view name) { return Renaming(1)(v(name)); }

PolyAbs plus(std::initializer_list<std::pair<const char*, PMode>> renamed,
             std::initializer_list<std::pair<const char*, PMode>> plain) {
    std::vector<std::pair<Var, PMode>> e;
    for (const auto& [n, s] : renamed) e.emplace_back(r1(n), s);
    for (const auto& [n, s] : plain) e.emplace_back(v(n), s);
    return PolyAbs(std::move(e));
}

const PMode inf = PMode::infimum();
const PMode sup = PMode::supremum();

ParamTable table(std::initializer_list<const char*> names) {
    std::vector<Symbol> s;
    for (const char* n : names) s.push_back(Symbol::intern(n));
    return ParamTable(std::move(s));
}

}  // namespace

TEST_CASE("canonical forms") {
    CHECK(pm({{0, 1}, {0}}) == pm({{0}}));
    CHECK(pm({{}, {0}}) == sup);
    CHECK(pm({}) == inf);
    CHECK(pm({{0}, {0}}).sets().size() == 1);
    const ParamMask bad[] = {ParamMask{1} << 3};
    CHECK_THROWS_AS(pm_canon(bad, 3), UnknownParam);
    const ParamMask raw[] = {3, 1, 6};
    CHECK(pm_canon(raw, 3) == pm({{0}, {1, 2}}));
}

TEST_CASE("order") {
    CHECK(pm_leq(pm({{0, 1}, {0, 2}}), pm({{0}})));
    CHECK(pm_leq(pm({{0, 1}, {0, 2}}), pm({{1}, {2}})));
    CHECK_FALSE(pm_leq(pm({{0}}), pm({{0, 1}})));
    for (const PMode& s : {inf, sup, pm({{0}}), pm({{1, 2}, {0}})}) {
        CHECK(pm_leq(inf, s));
        CHECK(pm_leq(s, sup));
    }
}

TEST_CASE("lub and glb") {
    CHECK(pm_lub(pm({{0, 1}}), pm({{0, 1, 2}})) == pm({{0, 1}}));
    CHECK(pm_glb(pm({{0, 1}}), pm({{0, 1, 2}})) == pm({{0, 1, 2}}));
    const PMode a = pm({{0}, {1}});
    const PMode b = pm({{0, 2}});
    const PMode c = pm_glb(a, b);
    CHECK(c == pm({{0, 2}}));
    CHECK(pm_leq(c, pm({{0, 2}, {0, 1, 2}})));
    CHECK(pm_leq(pm({{0, 2}, {0, 1, 2}}), c));
    for (const auto& k : Assignment::all(3))
        CHECK(pm_instantiate(c, k) == mode_glb(pm_instantiate(a, k), pm_instantiate(b, k)));
    CHECK(pm_lub(sup, pm({{0}})) == sup);
    CHECK(pm_glb(inf, pm({{0}})) == inf);
}

TEST_CASE("instantiation") {
    for (const auto& k : Assignment::all(2)) {
        CHECK(pm_instantiate(inf, k) == g);
        CHECK(pm_instantiate(sup, k) == u);
    }
    const Mode m[] = {g, u};
    const Assignment k(m);
    CHECK(pm_instantiate(pm({{0, 1}}), k) == g);
    CHECK(pm_instantiate(pm({{0}, {1}}), k) == u);
    int u_rows = 0;
    for (const auto& kk : Assignment::all(2)) u_rows += pm_instantiate(pm({{0, 1}}), kk) == u;
    CHECK(u_rows == 1);
}

TEST_CASE("worked example, step by step") {
    const Atom a = at("g(X,f(Y,f(Z,Z)),Y)");
    const Atom b = at("g(f(X,Y),Z,X)");
    const PolyAbs theta = pabs({{"X", pm({{0, 1}})}, {"Y", pm({{0, 2}})}, {"Z", pm({{1, 2}})}});
    const PolyAbs sigma = pabs({{"X", pm({{0}, {1}})}, {"Y", pm({{1, 2}})}, {"Z", sup}});
    Renamer rn;
    UnifyTrace<PMode> tr;
    const PolyAbs out = punify(a, theta, b, sigma, rn, &tr);

    CHECK(tr.zeta == plus({{"X", pm({{0, 1}})}, {"Y", pm({{0, 2}})}, {"Z", pm({{1, 2}})}},
                          {{"X", pm({{0}, {1}})}, {"Y", pm({{1, 2}})}, {"Z", sup}}));
    CHECK(tr.eta == plus({{"X", pm({{0, 1}})}, {"Y", pm({{0, 1, 2}})}, {"Z", pm({{1, 2}})}},
                         {{"X", pm({{0}, {1}})}, {"Y", pm({{0, 1, 2}})}, {"Z", sup}}));
    CHECK(tr.beta == plus({{"X", pm({{0, 1, 2}})}, {"Y", pm({{0, 1, 2}})}, {"Z", pm({{1, 2}})}},
                          {{"X", pm({{0, 1, 2}})}, {"Y", pm({{0, 1, 2}})}, {"Z", pm({{1, 2}})}}));
    CHECK(out == pabs({{"X", pm({{0, 1, 2}})}, {"Y", pm({{0, 1, 2}})}, {"Z", pm({{1, 2}})}}));

    REQUIRE(tr.e0);
    CHECK(pdown(*tr.e0, tr.zeta) == tr.eta);
    CHECK(pup(*tr.e0, tr.eta) == tr.beta);

    // Instantiation commutes with the operator.
    for (const auto& k : Assignment::all(3)) {
        Renamer rm;
        CHECK(pabs_instantiate(out, k) ==
              munify(a, pabs_instantiate(theta, k), b, pabs_instantiate(sigma, k), rm));
    }
    Universe un = Universe::standard();
    un.pool = 1;
    CHECK(check_poly(a, theta, b, sigma, 3, un));
}

TEST_CASE("downward and upward passes agree with the mono passes") {
    {
        const EqSet e({{v("X"), t("f(Y)")}});
        const PolyAbs z = pabs({{"X", inf}, {"Y", sup}});
        const PolyAbs got = pdown(e, z);
        CHECK(got == pabs({{"X", inf}, {"Y", inf}}));
        for (const auto& k : Assignment::all(1))
            CHECK(pabs_instantiate(got, k) == mdown(e, pabs_instantiate(z, k)));
    }
    {
        const EqSet e({{v("X"), t("f(Y,Z)")}});
        const PolyAbs eta = pabs({{"X", sup}, {"Y", pm({{0}})}, {"Z", pm({{1}})}});
        const PolyAbs got = pup(e, eta);
        CHECK(got.at(v("X")) == pm({{0}, {1}}));
        for (const auto& k : Assignment::all(2))
            CHECK(pabs_instantiate(got, k) == mup(e, pabs_instantiate(eta, k)));
    }
    CHECK(pdown(EqSet(), pabs({{"X", pm({{0}})}})) == pabs({{"X", pm({{0}})}}));
    CHECK(pup(EqSet(), pabs({{"X", pm({{0}})}})) == pabs({{"X", pm({{0}})}}));
}

TEST_CASE("punify on atoms that do not unify") {
    Renamer rn;
    CHECK(punify(at("p(a)"), PolyAbs(), at("p(b)"), pabs({{"X", sup}}), rn) == pabs({{"X", inf}}));
}

TEST_CASE("parameter-free descriptions behave like modes") {
    Gen gen(9);
    for (int i = 0; i < 300; ++i) {
        const std::vector<Var> va = {v("X"), v("Y")};
        const std::vector<Var> vb = {v("U"), v("W")};
        const Atom a = gen.atom(Symbol::intern("p"), 2, va, 2);
        const Atom b = gen.atom(Symbol::intern("p"), 2, vb, 2);
        auto lift = [&](const MonoAbs& m) {
            std::vector<std::pair<Var, PMode>> e;
            for (const auto& [x, mode] : m) e.emplace_back(x, mode == g ? inf : sup);
            return PolyAbs(std::move(e));
        };
        const MonoAbs th = gen.mono(va);
        const MonoAbs si = gen.mono(vb);
        Renamer r1n, r2n;
        CHECK(lift(munify(a, th, b, si, r1n)) == punify(a, lift(th), b, lift(si), r2n));
    }
}

TEST_CASE("instantiating abstractions") {
    const PolyAbs lookup_out = pabs({{"K", pm({{0, 1}})}, {"D", pm({{1}})}, {"V", pm({{1, 2}})}});
    const Mode m[] = {g, g, u};
    CHECK(pabs_instantiate(lookup_out, Assignment(m)) == mabs({{"K", g}, {"D", g}, {"V", g}}));
    for (const auto& k : Assignment::all(2))
        CHECK(pabs_instantiate(pabs({{"X", inf}, {"Y", inf}}), k) == mabs({{"X", g}, {"Y", g}}));
    const Mode mu[] = {u};
    CHECK(pabs_instantiate(pabs({{"X", pm({{0}})}}), Assignment(mu)) == mabs({{"X", u}}));
}

TEST_CASE("pointwise lattice on abstractions") {
    const PolyAbs a = pabs({{"X", pm({{0}})}});
    CHECK(pabs_leq(a, a));
    CHECK(pabs_lub(a, pabs({{"X", pm({{1}})}})) == pabs({{"X", pm({{0}, {1}})}}));
    CHECK(pabs_lub(pabs({{"X", sup}}), a) == pabs({{"X", sup}}));
}

TEST_CASE("rendering uses parameter names") {
    const ParamTable p = table({"alpha", "beta", "gamma"});
    CHECK(render(inf, p) == "[]");
    CHECK(render(sup, p) == "[[]]");
    CHECK(render(pm({{1, 2}, {0}}), p) == "[[alpha],[beta,gamma]]");
    CHECK(render(pabs({{"K", pm({{0, 1}})}, {"D", pm({{1}})}}), p, std::vector<Var>{v("K"), v("D")}) ==
          "{K/[[alpha,beta]], D/[[beta]]}");
    // Names sort alphabetically even when declared out of order.
    const ParamTable q = table({"zeta", "alpha"});
    CHECK(render(pm({{0, 1}}), q) == "[[alpha,zeta]]");
}

TEST_CASE("parameter table") {
    ParamTable p;
    CHECK(p.add(Symbol::intern("a")) == 0);
    CHECK(p.add(Symbol::intern("b")) == 1);
    CHECK(p.add(Symbol::intern("a")) == 0);
    CHECK(p.all_mask() == 3);
    CHECK_FALSE(p.index_of(Symbol::intern("c")));
    ParamTable big;
    for (std::size_t i = 0; i < kMaxParams; ++i) big.add(Symbol::intern("p" + std::to_string(i)));
    CHECK_THROWS_AS(big.add(Symbol::intern("overflow")), Error);
}
