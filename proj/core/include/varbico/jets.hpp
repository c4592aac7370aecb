#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace varbico {

/// Symmetric multi-index: multiplicities per independent variable.
/// Trailing zeros are stripped, so equality of the count vector is the
/// built-in symmetry of mixed partials.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> counts);

    /// Multi-index with a single entry i (i.e. one derivative in direction i).
    static MultiIndex unit(int i);

    int count(int i) const;
    int order() const;
    bool empty() const { return counts_.empty(); }

    /// Highest independent-variable index with nonzero count, -1 if none.
    int max_var() const { return static_cast<int>(counts_.size()) - 1; }

    MultiIndex plus(int i) const;
    MultiIndex plus(const MultiIndex& other) const;

    /// Componentwise containment: this ⊆ other.
    bool divides(const MultiIndex& other) const;

    /// Componentwise difference other := this ⊔ ...; requires sub ⊆ this.
    MultiIndex minus(const MultiIndex& sub) const;

    /// Componentwise maximum (least common derivative of two leads).
    static MultiIndex lcm(const MultiIndex& a, const MultiIndex& b);

    /// Graded order: by |I| first, ties broken so that indices on earlier
    /// independent variables compare smaller (u_tt < u_tx < u_xx).
    std::strong_ordering operator<=>(const MultiIndex& other) const;
    bool operator==(const MultiIndex& other) const { return counts_ == other.counts_; }

    const std::vector<int>& counts() const { return counts_; }

private:
    std::vector<int> counts_;
};

/// Jet coordinate u^a_I: dependent variable index plus multi-index.
struct JetVar {
    int dep = 0;
    MultiIndex idx;

    int order() const { return idx.order(); }

    std::strong_ordering operator<=>(const JetVar& other) const = default;
};

inline JetVar jet(int dep) { return JetVar{dep, MultiIndex{}}; }
inline JetVar jet(int dep, MultiIndex idx) { return JetVar{dep, std::move(idx)}; }

} // namespace varbico
