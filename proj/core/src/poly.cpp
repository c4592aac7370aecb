#include "varbico/poly.hpp"

#include <algorithm>
#include <set>

namespace varbico {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::base_var(int i) {
    Monomial m;
    m.base_.emplace_back(i, 1);
    return m;
}

Monomial Monomial::jet_var(const JetVar& v) {
    Monomial m;
    m.jets_.emplace_back(v, 1);
    return m;
}

namespace {
template <typename K>
std::vector<std::pair<K, int>> merge_powers(const std::vector<std::pair<K, int>>& a,
                                            const std::vector<std::pair<K, int>>& b) {
    std::vector<std::pair<K, int>> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) out.push_back(a[i++]);
        else if (b[j].first < a[i].first) out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}
} // namespace

Monomial Monomial::times(const Monomial& other) const {
    Monomial m;
    m.base_ = merge_powers(base_, other.base_);
    m.jets_ = merge_powers(jets_, other.jets_);
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [i, e] : base_) d += e;
    for (const auto& [v, e] : jets_) d += e;
    return d;
}

int Monomial::jet_degree() const {
    int d = 0;
    for (const auto& [v, e] : jets_) d += e;
    return d;
}

int Monomial::jet_order() const {
    int k = 0;
    for (const auto& [v, e] : jets_) k = std::max(k, v.order());
    return k;
}

int Monomial::base_exponent(int i) const {
    for (const auto& [j, e] : base_)
        if (j == i) return e;
    return 0;
}

int Monomial::jet_exponent(const JetVar& v) const {
    for (const auto& [w, e] : jets_)
        if (w == v) return e;
    return 0;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (auto c = total_degree() <=> other.total_degree(); c != 0) return c;
    if (auto c = base_ <=> other.base_; c != 0) return c;
    return jets_ <=> other.jets_;
}

// ----------------------------------------------------------------- JetPoly

JetPoly::JetPoly(const Rational& value) {
    if (value != 0) terms_.emplace(Monomial{}, value);
}

JetPoly JetPoly::base_var(int i) { return monomial(1, Monomial::base_var(i)); }
JetPoly JetPoly::jet_var(const JetVar& v) { return monomial(1, Monomial::jet_var(v)); }

JetPoly JetPoly::monomial(const Rational& coeff, const Monomial& m) {
    JetPoly p;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

bool JetPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

std::optional<Rational> JetPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.is_constant())
        return terms_.begin()->second;
    return std::nullopt;
}

void JetPoly::insert(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

JetPoly JetPoly::operator-() const {
    JetPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

JetPoly JetPoly::operator+(const JetPoly& other) const {
    JetPoly out = *this;
    out += other;
    return out;
}

JetPoly JetPoly::operator-(const JetPoly& other) const {
    JetPoly out = *this;
    out -= other;
    return out;
}

JetPoly& JetPoly::operator+=(const JetPoly& other) {
    for (const auto& [m, c] : other.terms_) insert(m, c);
    return *this;
}

JetPoly& JetPoly::operator-=(const JetPoly& other) {
    for (const auto& [m, c] : other.terms_) insert(m, -c);
    return *this;
}

JetPoly JetPoly::operator*(const JetPoly& other) const {
    JetPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            out.insert(ma.times(mb), ca * cb);
    return out;
}

JetPoly JetPoly::scaled(const Rational& c) const {
    JetPoly out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

JetPoly JetPoly::pow(int e) const {
    if (e < 0) throw Error("negative power of a polynomial");
    JetPoly out{1};
    for (int k = 0; k < e; ++k) out = out * *this;
    return out;
}

std::vector<JetVar> JetPoly::jet_vars() const {
    std::set<JetVar> seen;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.jet_powers()) seen.insert(v);
    return {seen.begin(), seen.end()};
}

int JetPoly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

bool JetPoly::has_jets() const {
    for (const auto& [m, c] : terms_)
        if (!m.jet_powers().empty()) return true;
    return false;
}

// -------------------------------------------------------------- operations

namespace {

// d(m)/dv as a polynomial, for one monomial with coefficient c.
JetPoly partial_monomial(const Monomial& m, const Rational& c, const VarRef& v) {
    JetPoly out;
    const bool is_base = std::holds_alternative<int>(v);
    int e = is_base ? m.base_exponent(std::get<int>(v)) : m.jet_exponent(std::get<JetVar>(v));
    if (e == 0) return out;

    Monomial reduced;
    for (const auto& [i, k] : m.base_powers()) {
        int kk = (is_base && i == std::get<int>(v)) ? k - 1 : k;
        if (kk > 0) reduced = reduced.times([&] {
            Monomial f;
            for (int t = 0; t < kk; ++t) f = f.times(Monomial::base_var(i));
            return f;
        }());
    }
    for (const auto& [w, k] : m.jet_powers()) {
        int kk = (!is_base && w == std::get<JetVar>(v)) ? k - 1 : k;
        if (kk > 0) reduced = reduced.times([&] {
            Monomial f;
            for (int t = 0; t < kk; ++t) f = f.times(Monomial::jet_var(w));
            return f;
        }());
    }
    return JetPoly::monomial(c * e, reduced);
}

} // namespace

JetPoly partial(const JetPoly& p, const VarRef& v) {
    JetPoly out;
    for (const auto& [m, c] : p.terms()) out += partial_monomial(m, c, v);
    return out;
}

JetPoly total_derivative(const JetPoly& p, int i) {
    JetPoly out = partial(p, VarRef{i});
    for (const JetVar& v : p.jet_vars())
        out += JetPoly::jet_var(jet(v.dep, v.idx.plus(i))) * partial(p, VarRef{v});
    return out;
}

JetPoly total_derivative(const JetPoly& p, const MultiIndex& J) {
    JetPoly out = p;
    for (int i = 0; i <= J.max_var(); ++i)
        for (int k = 0; k < J.count(i); ++k) out = total_derivative(out, i);
    return out;
}

JetPoly substitute(const JetPoly& p, const std::map<JetVar, JetPoly>& rules) {
    JetPoly out;
    for (const auto& [m, c] : p.terms()) {
        Monomial keep;
        for (const auto& [i, e] : m.base_powers())
            for (int t = 0; t < e; ++t) keep = keep.times(Monomial::base_var(i));
        JetPoly factor{1};
        for (const auto& [v, e] : m.jet_powers()) {
            auto it = rules.find(v);
            if (it == rules.end()) {
                for (int t = 0; t < e; ++t) keep = keep.times(Monomial::jet_var(v));
            } else {
                factor = factor * it->second.pow(e);
            }
        }
        out += JetPoly::monomial(c, keep) * factor;
    }
    return out;
}

JetPoly pullback_section(const JetPoly& p, const std::map<int, JetPoly>& phi,
                         const Signature& sig) {
    for (int a = 0; a < sig.m(); ++a) {
        auto it = phi.find(a);
        if (it == phi.end())
            throw Error("section does not assign dependent variable '" + sig.dep_name(a) + "'");
        if (it->second.has_jets())
            throw Error("section value for '" + sig.dep_name(a) + "' must be jet-free");
    }
    std::map<JetVar, JetPoly> rules;
    for (const JetVar& v : p.jet_vars()) {
        JetPoly value = phi.at(v.dep);
        for (int i = 0; i <= v.idx.max_var(); ++i)
            for (int k = 0; k < v.idx.count(i); ++k) value = partial(value, VarRef{i});
        rules.emplace(v, value);
    }
    return substitute(p, rules);
}

int jet_order(const JetPoly& p) {
    int k = 0;
    for (const auto& [m, c] : p.terms()) k = std::max(k, m.jet_order());
    return k;
}

JetPoly scale_integrate(const JetPoly& p, int offset) {
    JetPoly out;
    for (const auto& [m, c] : p.terms()) {
        int div = offset + m.jet_degree();
        if (div == 0) throw Defect("scale integration hit a zero divisor");
        out += JetPoly::monomial(c / div, m);
    }
    return out;
}

JetPoly eval_jets_zero(const JetPoly& p) {
    JetPoly out;
    for (const auto& [m, c] : p.terms())
        if (m.jet_powers().empty()) out += JetPoly::monomial(c, m);
    return out;
}

} // namespace varbico
