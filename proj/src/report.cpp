#include "pga/report.hpp"

#include <json.hpp>

namespace pga {

namespace {

using nlohmann::ordered_json;

template <class Abs, class Show>
std::string listing(const Program& p, const AnalysisResult<Abs>& r, Show&& show) {
    const auto goal_vars = r.goal.vars();
    std::string out = render(p.directive()) + "\n";
    out += "% input:  " + show(r.goal_input, goal_vars) + "\n";
    out += "% output: " + show(r.goal_output, goal_vars) + "\n";
    for (const auto& c : p.clauses()) {
        out += "\n" + render(c.head()) + (c.body().empty() ? "." : " :-") + "\n";
        for (std::size_t k = 0; k <= c.body().size(); ++k) {
            out += "    % " + show(r.points.at({c.id(), k}), c.vars()) + "\n";
            if (k < c.body().size())
                out += "    " + render(c.body()[k]) + (k + 1 < c.body().size() ? "," : ".") + "\n";
        }
    }
    return out;
}

template <class Abs, class Value>
ordered_json abs_json(const Abs& a, std::span<const Var> order, Value&& value) {
    ordered_json j = ordered_json::object();
    for (const auto& v : order)
        if (const auto* x = a.find(v)) j[v.str()] = value(*x);
    return j;
}

template <class Abs, class Value>
std::string json_doc(const Program& p, const AnalysisResult<Abs>& r, const ParamTable& params, const char* mode,
                     Value&& value) {
    ordered_json j;
    j["program"] = render(p);
    j["goal"] = render(r.goal);
    ordered_json names = ordered_json::array();
    for (auto s : params.names()) names.push_back(s.str());
    j["params"] = names;
    ordered_json points = ordered_json::array();
    for (const auto& [pt, a] : r.points) {
        ordered_json e;
        e["clause"] = pt.clause;
        e["index"] = pt.index;
        e["abs"] = abs_json(a, p.clause(pt.clause).vars(), value);
        points.push_back(e);
    }
    j["points"] = points;
    const auto goal_vars = r.goal.vars();
    j["goal_output"] = abs_json(r.goal_output, goal_vars, value);
    j["mode"] = mode;
    j["iterations"] = r.iterations;
    return j.dump(2);
}

}  // namespace

std::string text_report(const Program& p, const MonoResult& r) {
    return listing(p, r, [](const MonoAbs& a, std::span<const Var> order) { return render(a, order); });
}

std::string text_report(const Program& p, const PolyResult& r, const ParamTable& params) {
    return listing(p, r, [&](const PolyAbs& a, std::span<const Var> order) { return render(a, params, order); });
}

std::string json_report(const Program& p, const MonoResult& r, const ParamTable& params) {
    return json_doc(p, r, params, "mono", [](Mode m) { return std::string(to_string(m)); });
}

std::string json_report(const Program& p, const PolyResult& r, const ParamTable& params) {
    return json_doc(p, r, params, "poly", [&](const PMode& s) { return ordered_json(param_names(s, params)); });
}

}  // namespace pga
