#include "pga/symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace pga {
namespace {

struct SymbolTable {
    std::shared_mutex mutex;
    std::deque<std::string> names{""};
    std::unordered_map<std::string_view, std::uint32_t> index{{names.front(), 0}};
};

SymbolTable& table() {
    static SymbolTable t;
    return t;
}

}  // namespace

Symbol Symbol::intern(std::string_view name) {
    auto& t = table();
    {
        std::shared_lock lock(t.mutex);
        if (auto it = t.index.find(name); it != t.index.end()) return Symbol(it->second);
    }
    std::unique_lock lock(t.mutex);
    if (auto it = t.index.find(name); it != t.index.end()) return Symbol(it->second);
    auto id = static_cast<std::uint32_t>(t.names.size());
    // deque::push_back keeps references to existing elements valid
    const std::string& stored = t.names.emplace_back(name);
    t.index.emplace(stored, id);
    return Symbol(id);
}

const std::string& Symbol::str() const {
    auto& t = table();
    std::shared_lock lock(t.mutex);
    return t.names[id_];
}

std::string Var::str() const {
    if (gen == 0) return name.str();
    return name.str() + "#" + std::to_string(gen);
}

}  // namespace pga
