#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace pga {

/// Two-point groundness lattice: g (definitely ground) below u (unknown).
enum class Mode : std::uint8_t { g = 0, u = 1 };

constexpr Mode mode_lub(Mode a, Mode b) { return (a == Mode::u || b == Mode::u) ? Mode::u : Mode::g; }
constexpr Mode mode_glb(Mode a, Mode b) { return (a == Mode::g || b == Mode::g) ? Mode::g : Mode::u; }
constexpr bool mode_leq(Mode a, Mode b) { return a == Mode::g || b == Mode::u; }

constexpr const char* to_string(Mode m) { return m == Mode::g ? "g" : "u"; }

inline std::optional<Mode> parse_mode(std::string_view s) {
    if (s == "g") return Mode::g;
    if (s == "u") return Mode::u;
    return std::nullopt;
}

}  // namespace pga
