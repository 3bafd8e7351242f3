// naming.cpp -- NameRegistry

#include "ietw/naming.hpp"

#include "ietw/core.hpp"

namespace ietw {

NameRegistry::NameRegistry(const std::set<std::string>& reserved) : used_(reserved) {}

void NameRegistry::reserve(const std::string& name) { used_.insert(name); }

const std::string& NameRegistry::intern(const std::string& key, const std::string& preferred) {
    auto it = by_key_.find(key);
    if (it != by_key_.end())
        return it->second;
    return by_key_.emplace(key, fresh(preferred)).first->second;
}

std::string NameRegistry::fresh(const std::string& base) {
    std::string name = base;
    while (used_.count(name))
        name += '\'';
    used_.insert(name);
    return name;
}

std::string NameRegistry::key(const std::vector<std::string>& parts) { return join(parts, "\x1f"); }

std::string bracket(const std::vector<std::string>& parts) { return "<" + join(parts, ".") + ">"; }

} // namespace ietw
