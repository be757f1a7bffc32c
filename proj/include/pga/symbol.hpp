#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace pga {

/// Interned identifier shared by functors, predicates, variables and mode
/// parameters. Comparison is by intern id, which is stable for the lifetime
/// of the process but not across processes; never use it for output order.
class Symbol {
public:
    Symbol() = default;

    static Symbol intern(std::string_view name);

    const std::string& str() const;
    std::uint32_t id() const { return id_; }
    bool empty() const { return id_ == 0; }

    friend auto operator<=>(Symbol, Symbol) = default;

private:
    explicit Symbol(std::uint32_t id) : id_(id) {}
    std::uint32_t id_ = 0;
};

/// A logic variable. `gen` is zero for variables written in the program and
/// nonzero for variables introduced by renaming.
struct Var {
    Symbol name;
    std::uint32_t gen = 0;

    static Var named(std::string_view n) { return Var{Symbol::intern(n), 0}; }

    std::string str() const;

    friend auto operator<=>(const Var&, const Var&) = default;
};

}  // namespace pga

template <>
struct std::hash<pga::Var> {
    std::size_t operator()(const pga::Var& v) const noexcept {
        return (static_cast<std::size_t>(v.name.id()) << 32) ^ v.gen;
    }
};
