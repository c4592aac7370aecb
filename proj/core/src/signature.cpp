#include "varbico/signature.hpp"

#include <set>

namespace varbico {

Signature::Signature(std::vector<std::string> indep, std::vector<std::string> dep)
    : indep_(std::move(indep)), dep_(std::move(dep)) {
    if (indep_.empty() || dep_.empty())
        throw Error("signature needs at least one independent and one dependent variable");
    std::set<std::string> seen;
    for (const auto& name : indep_)
        if (name.empty() || !seen.insert(name).second)
            throw Error("duplicate or empty variable name '" + name + "' in signature");
    for (const auto& name : dep_)
        if (name.empty() || !seen.insert(name).second)
            throw Error("duplicate or empty variable name '" + name + "' in signature");
}

std::optional<int> Signature::indep_index(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
        if (indep_[i] == name) return i;
    return std::nullopt;
}

std::optional<int> Signature::dep_index(const std::string& name) const {
    for (int a = 0; a < m(); ++a)
        if (dep_[a] == name) return a;
    return std::nullopt;
}

} // namespace varbico
