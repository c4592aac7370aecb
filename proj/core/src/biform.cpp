#include "varbico/biform.hpp"

#include <algorithm>
#include <variant>

namespace varbico {

namespace {

// One exterior generator: dx^i or dv u^a_I.
using Gen = std::variant<int, JetVar>;

// dx before dv; within each kind the natural order.
bool gen_less(const Gen& a, const Gen& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (std::holds_alternative<int>(a)) return std::get<int>(a) < std::get<int>(b);
    return std::get<JetVar>(a) < std::get<JetVar>(b);
}

// Sort a raw generator list, tracking the permutation sign; returns 0 sign
// on a repeated generator.
int canonicalize_word(std::vector<Gen>& gens) {
    int sign = 1;
    for (size_t i = 1; i < gens.size(); ++i)
        for (size_t j = i; j > 0 && gen_less(gens[j], gens[j - 1]); --j) {
            std::swap(gens[j], gens[j - 1]);
            sign = -sign;
        }
    for (size_t i = 1; i < gens.size(); ++i)
        if (!gen_less(gens[i - 1], gens[i])) return 0;
    return sign;
}

GenWord split_word(const std::vector<Gen>& gens) {
    GenWord w;
    for (const Gen& g : gens) {
        if (std::holds_alternative<int>(g)) w.hgen.push_back(std::get<int>(g));
        else w.vgen.push_back(std::get<JetVar>(g));
    }
    return w;
}

std::vector<Gen> join_word(const GenWord& w) {
    std::vector<Gen> gens;
    gens.reserve(w.hgen.size() + w.vgen.size());
    for (int i : w.hgen) gens.emplace_back(i);
    for (const JetVar& v : w.vgen) gens.emplace_back(v);
    return gens;
}

} // namespace

BiForm::BiForm(const JetPoly& scalar) {
    if (!scalar.is_zero()) terms_.emplace(GenWord{}, scalar);
}

BiForm BiForm::dx(int i) { return term(JetPoly{1}, {i}, {}); }
BiForm BiForm::dv_gen(const JetVar& v) { return term(JetPoly{1}, {}, {v}); }

BiForm BiForm::term(const JetPoly& coeff, const std::vector<int>& hgens,
                    const std::vector<JetVar>& vgens) {
    BiForm out;
    if (coeff.is_zero()) return out;
    std::vector<Gen> gens;
    for (int i : hgens) gens.emplace_back(i);
    for (const JetVar& v : vgens) gens.emplace_back(v);
    int sign = canonicalize_word(gens);
    if (sign == 0) return out;
    out.terms_.emplace(split_word(gens), sign > 0 ? coeff : -coeff);
    return out;
}

void BiForm::insert(const GenWord& w, const JetPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiForm BiForm::operator-() const {
    BiForm out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

BiForm BiForm::operator+(const BiForm& other) const {
    BiForm out = *this;
    out += other;
    return out;
}

BiForm BiForm::operator-(const BiForm& other) const {
    BiForm out = *this;
    out -= other;
    return out;
}

BiForm& BiForm::operator+=(const BiForm& other) {
    for (const auto& [w, c] : other.terms_) insert(w, c);
    return *this;
}

BiForm& BiForm::operator-=(const BiForm& other) {
    for (const auto& [w, c] : other.terms_) insert(w, -c);
    return *this;
}

BiForm BiForm::scaled(const Rational& c) const {
    BiForm out;
    if (c == 0) return out;
    for (const auto& [w, p] : terms_) out.terms_.emplace(w, p.scaled(c));
    return out;
}

std::optional<Grading> BiForm::grading() const {
    std::optional<Grading> g;
    for (const auto& [w, c] : terms_) {
        Grading gw = w.grading();
        if (!g) g = gw;
        else if (*g != gw) return std::nullopt;
    }
    return g;
}

bool BiForm::is_homogeneous(const Grading& g) const {
    for (const auto& [w, c] : terms_)
        if (w.grading() != g) return false;
    return true;
}

int BiForm::jet_order() const {
    int k = 0;
    for (const auto& [w, c] : terms_) {
        k = std::max(k, varbico::jet_order(c));
        for (const JetVar& v : w.vgen) k = std::max(k, v.order());
    }
    return k;
}

BiForm wedge(const BiForm& a, const BiForm& b) {
    BiForm out;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            std::vector<Gen> gens = join_word(wa);
            for (const Gen& g : join_word(wb)) gens.push_back(g);
            int sign = canonicalize_word(gens);
            if (sign == 0) continue;
            JetPoly coeff = ca * cb;
            out.insert(split_word(gens), sign > 0 ? coeff : -coeff);
        }
    }
    return out;
}

BiForm d_h(const BiForm& a, const Signature& sig) {
    BiForm out;
    for (const auto& [w, coeff] : a.terms()) {
        std::vector<Gen> word = join_word(w);
        // (dh coeff) ∧ word
        for (int i = 0; i < sig.n(); ++i) {
            JetPoly dc = total_derivative(coeff, i);
            if (dc.is_zero()) continue;
            std::vector<Gen> gens;
            gens.emplace_back(i);
            for (const Gen& g : word) gens.push_back(g);
            int sign = canonicalize_word(gens);
            if (sign == 0) continue;
            out.insert(split_word(gens), sign > 0 ? dc : -dc);
        }
        // coeff ∧ (derivation over dv generators)
        for (size_t p = 0; p < word.size(); ++p) {
            if (!std::holds_alternative<JetVar>(word[p])) continue;
            const JetVar v = std::get<JetVar>(word[p]);
            int pos_sign = (p % 2 == 0) ? 1 : -1;
            for (int i = 0; i < sig.n(); ++i) {
                std::vector<Gen> gens(word.begin(), word.begin() + p);
                gens.emplace_back(i);
                gens.emplace_back(jet(v.dep, v.idx.plus(i)));
                gens.insert(gens.end(), word.begin() + p + 1, word.end());
                int sign = pos_sign * canonicalize_word(gens);
                if (sign == 0) continue;
                out.insert(split_word(gens), sign > 0 ? coeff : -coeff);
            }
        }
    }
    return out;
}

BiForm d_v(const BiForm& a) {
    BiForm out;
    for (const auto& [w, coeff] : a.terms()) {
        std::vector<Gen> word = join_word(w);
        for (const JetVar& v : coeff.jet_vars()) {
            JetPoly dc = partial(coeff, VarRef{v});
            if (dc.is_zero()) continue;
            std::vector<Gen> gens;
            gens.emplace_back(v);
            for (const Gen& g : word) gens.push_back(g);
            int sign = canonicalize_word(gens);
            if (sign == 0) continue;
            out.insert(split_word(gens), sign > 0 ? dc : -dc);
        }
    }
    return out;
}

BiForm vertical_homotopy(const BiForm& a) {
    BiForm out;
    for (const auto& [w, coeff] : a.terms()) {
        const int v = static_cast<int>(w.vgen.size());
        if (v == 0)
            throw Error("vertical homotopy needs every term of vertical degree >= 1");
        const int h_sign = (w.hgen.size() % 2 == 0) ? 1 : -1;
        JetPoly scaled = scale_integrate(coeff, v);
        for (int k = 0; k < v; ++k) {
            JetPoly c = JetPoly::jet_var(w.vgen[k]) * scaled;
            if ((k % 2) == 1) c = -c;
            if (h_sign < 0) c = -c;
            GenWord word;
            word.hgen = w.hgen;
            for (int j = 0; j < v; ++j)
                if (j != k) word.vgen.push_back(w.vgen[j]);
            out.insert(word, c);
        }
    }
    return out;
}

BiForm homogeneous_part(const BiForm& a, const Grading& g) {
    BiForm out;
    for (const auto& [w, c] : a.terms())
        if (w.grading() == g) out += BiForm::term(c, w.hgen, w.vgen);
    return out;
}

BiForm volume_form(const Signature& sig) {
    std::vector<int> hgens;
    for (int i = 0; i < sig.n(); ++i) hgens.push_back(i);
    return BiForm::term(JetPoly{1}, hgens, {});
}

} // namespace varbico
