// naming.hpp -- collision-free names for composite states and fresh symbols

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace ietw {

/// Hands out names that never clash with reserved ones. A key always maps to
/// the same name; on a clash the preferred name gets apostrophes appended.
class NameRegistry {
public:
    NameRegistry() = default;
    explicit NameRegistry(const std::set<std::string>& reserved);

    void reserve(const std::string& name);
    bool taken(const std::string& name) const { return used_.count(name) > 0; }

    /// Name for a composite object identified by `key`.
    const std::string& intern(const std::string& key, const std::string& preferred);

    /// A brand new name derived from `base`.
    std::string fresh(const std::string& base);

    /// Builds an unambiguous key from parts.
    static std::string key(const std::vector<std::string>& parts);

private:
    std::set<std::string> used_;
    std::map<std::string, std::string> by_key_;
};

/// Renders composite names such as `<a.q.b.L>`.
std::string bracket(const std::vector<std::string>& parts);

} // namespace ietw
