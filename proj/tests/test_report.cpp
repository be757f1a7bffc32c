#include "support.hpp"

#include "pga/report.hpp"

#include <json.hpp>

#include <doctest.h>

using namespace pga;
using namespace pga::test;
using nlohmann::json;

TEST_CASE("text listing interleaves annotations") {
    const Program p = corpus("intro.pl");
    const auto params = p.directive().params();
    const std::string text = text_report(p, analyze_poly(p), params);
    CHECK(text.find("% input:  {X/[[alpha]], Y/[[beta]]}") != std::string::npos);
    CHECK(text.find("% output: {X/[[alpha,beta]], Y/[[alpha,beta]]}") != std::string::npos);
    CHECK(text.find("p(X,Y) :-\n    % {X/[[alpha]], Y/[[beta]]}\n    q(X,Y),\n") != std::string::npos);
    CHECK(text.find("q(U,U).\n    % {U/[[alpha,beta]]}") != std::string::npos);
}

TEST_CASE("mono listing") {
    const Program p = corpus("append.pl");
    const MonoResult r = analyze_mono(p, p.directive().goal, mono_input(p.directive(), {}, nullptr));
    const std::string text = text_report(p, r);
    CHECK(text.find("% output: {L1/g, L2/g, L3/g}") != std::string::npos);
}

TEST_CASE("json document fields") {
    const Program p = corpus("lookup.pl");
    const auto params = p.directive().params();
    const PolyResult r = analyze_poly(p);
    const json j = json::parse(json_report(p, r, params));
    CHECK(j.at("mode") == "poly");
    CHECK(j.at("goal") == "lookup(K,D,V)");
    CHECK(j.at("params") == json::array({"alpha", "beta", "gamma"}));
    CHECK(j.at("iterations") == r.iterations);
    CHECK(j.at("goal_output").at("K") == json::parse(R"([["alpha","beta"]])"));
    CHECK(j.at("goal_output").at("V") == json::parse(R"([["beta","gamma"]])"));
    CHECK(j.at("points").size() == r.points.size());
    for (const auto& pt : j.at("points")) {
        CHECK(pt.contains("clause"));
        CHECK(pt.contains("index"));
        CHECK(pt.at("abs").is_object());
    }
    CHECK(parse_program(j.at("program").get<std::string>()) == p);

    const MonoResult m = instantiate_result(r, Assignment(3, 0b100));
    const json jm = json::parse(json_report(p, m, params));
    CHECK(jm.at("mode") == "mono");
    CHECK(jm.at("goal_output") == json::parse(R"({"K":"g","D":"g","V":"g"})"));
}

TEST_CASE("infimum and supremum in json") {
    const Program p = parse_program(":- analyze(p(X,Y),[X=g,Y=u]).\np(a,Y).");
    const json j = json::parse(json_report(p, analyze_poly(p), p.directive().params()));
    CHECK(j.at("goal_output").at("X") == json::array());
    CHECK(j.at("goal_output").at("Y") == json::parse("[[]]"));
}
