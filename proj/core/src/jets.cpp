#include "varbico/jets.hpp"

#include "varbico/rational.hpp"

#include <algorithm>
#include <numeric>

namespace varbico {

namespace {
void strip_trailing_zeros(std::vector<int>& counts) {
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
}
} // namespace

MultiIndex::MultiIndex(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_)
        if (c < 0) throw Error("multi-index multiplicities must be nonnegative");
    strip_trailing_zeros(counts_);
}

MultiIndex MultiIndex::unit(int i) {
    if (i < 0) throw Error("independent-variable index must be nonnegative");
    std::vector<int> counts(i + 1, 0);
    counts[i] = 1;
    return MultiIndex(std::move(counts));
}

int MultiIndex::count(int i) const {
    if (i < 0 || i >= static_cast<int>(counts_.size())) return 0;
    return counts_[i];
}

int MultiIndex::order() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

MultiIndex MultiIndex::plus(int i) const {
    std::vector<int> counts = counts_;
    if (i >= static_cast<int>(counts.size())) counts.resize(i + 1, 0);
    ++counts[i];
    return MultiIndex(std::move(counts));
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
    std::vector<int> counts(std::max(counts_.size(), other.counts_.size()), 0);
    for (size_t i = 0; i < counts.size(); ++i)
        counts[i] = count(static_cast<int>(i)) + other.count(static_cast<int>(i));
    return MultiIndex(std::move(counts));
}

bool MultiIndex::divides(const MultiIndex& other) const {
    for (int i = 0; i <= max_var(); ++i)
        if (count(i) > other.count(i)) return false;
    return true;
}

MultiIndex MultiIndex::minus(const MultiIndex& sub) const {
    if (!sub.divides(*this)) throw Defect("multi-index subtraction would go negative");
    std::vector<int> counts(counts_.size(), 0);
    for (size_t i = 0; i < counts.size(); ++i)
        counts[i] = count(static_cast<int>(i)) - sub.count(static_cast<int>(i));
    return MultiIndex(std::move(counts));
}

MultiIndex MultiIndex::lcm(const MultiIndex& a, const MultiIndex& b) {
    std::vector<int> counts(std::max(a.counts_.size(), b.counts_.size()), 0);
    for (size_t i = 0; i < counts.size(); ++i)
        counts[i] = std::max(a.count(static_cast<int>(i)), b.count(static_cast<int>(i)));
    return MultiIndex(std::move(counts));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
    if (auto c = order() <=> other.order(); c != 0) return c;
    int top = std::max(max_var(), other.max_var());
    // Same order: more derivatives on earlier variables compares smaller.
    for (int i = 0; i <= top; ++i) {
        if (auto c = other.count(i) <=> count(i); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

} // namespace varbico
