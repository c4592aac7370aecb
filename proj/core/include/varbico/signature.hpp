#pragma once

#include "varbico/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace varbico {

/// Names the coordinates of a trivial vector bundle: independent variables
/// x^1..x^n on the base and dependent variables u^1..u^m on the fiber.
/// All other values refer to variables by index into this signature.
class Signature {
public:
    Signature(std::vector<std::string> indep, std::vector<std::string> dep);

    int n() const { return static_cast<int>(indep_.size()); }
    int m() const { return static_cast<int>(dep_.size()); }

    const std::string& indep_name(int i) const { return indep_.at(i); }
    const std::string& dep_name(int a) const { return dep_.at(a); }
    const std::vector<std::string>& indep_names() const { return indep_; }
    const std::vector<std::string>& dep_names() const { return dep_; }

    std::optional<int> indep_index(const std::string& name) const;
    std::optional<int> dep_index(const std::string& name) const;

    bool operator==(const Signature& other) const = default;

private:
    std::vector<std::string> indep_;
    std::vector<std::string> dep_;
};

} // namespace varbico
