#pragma once

#include "pga/engine.hpp"
#include "pga/syntax.hpp"

#include <string>

namespace pga {

/// Annotated listing: the directive with goal input and output, then every
/// clause with the abstraction at each point interleaved as `%` comments.
std::string text_report(const Program& p, const MonoResult& r);
std::string text_report(const Program& p, const PolyResult& r, const ParamTable& params);

/// JSON document with fields program, goal, params, points, goal_output, mode
/// and iterations. Mono values are "g"/"u"; poly values are sorted arrays of
/// sorted parameter-name arrays.
std::string json_report(const Program& p, const MonoResult& r, const ParamTable& params);
std::string json_report(const Program& p, const PolyResult& r, const ParamTable& params);

}  // namespace pga
