#include "varbico/pdesys.hpp"

#include <algorithm>

namespace varbico {

namespace {
constexpr int kStepBudget = 200000;

void enumerate_multi_indices(int n, int max_order, std::vector<MultiIndex>& out) {
    out.clear();
    out.emplace_back();
    size_t lo = 0;
    for (int ord = 1; ord <= max_order; ++ord) {
        size_t hi = out.size();
        for (size_t k = lo; k < hi; ++k)
            for (int i = 0; i < n; ++i) {
                MultiIndex next = out[k].plus(i);
                if (std::find(out.begin() + hi, out.end(), next) == out.end())
                    out.push_back(next);
            }
        lo = hi;
    }
}
} // namespace

PrincipalClassifier::PrincipalClassifier(const OrthonomicSystem& sys) {
    for (const Rule& r : sys.rules()) leads_.push_back(r.lead);
}

std::optional<std::pair<int, MultiIndex>> PrincipalClassifier::classify(const JetVar& v) const {
    for (size_t b = 0; b < leads_.size(); ++b)
        if (leads_[b].dep == v.dep && leads_[b].idx.divides(v.idx))
            return std::make_pair(static_cast<int>(b), v.idx.minus(leads_[b].idx));
    return std::nullopt;
}

OrthonomicSystem::OrthonomicSystem(Signature sig, std::vector<Rule> rules)
    : sig_(std::move(sig)), rules_(std::move(rules)), classifier_(*this) {}

OrthonomicSystem OrthonomicSystem::make(Signature sig, std::vector<Rule> rules) {
    if (rules.empty()) throw Error("orthonomic system needs at least one rule");
    for (const Rule& r : rules)
        if (r.lead.dep < 0 || r.lead.dep >= sig.m())
            throw Error("rule lead references an unknown dependent variable");
    for (size_t i = 0; i < rules.size(); ++i)
        for (size_t j = 0; j < rules.size(); ++j) {
            if (i == j) continue;
            const JetVar& a = rules[i].lead;
            const JetVar& b = rules[j].lead;
            if (a.dep == b.dep && a.idx.divides(b.idx))
                throw Error("rule leads must be distinct and none a derivative of another");
        }
    OrthonomicSystem sys(std::move(sig), std::move(rules));
    for (size_t b = 0; b < sys.rules_.size(); ++b)
        for (const JetVar& v : sys.rules_[b].rhs.jet_vars())
            if (sys.is_principal(v))
                throw Error("rule " + std::to_string(b) +
                            " has a right-hand side containing a principal jet");
    return sys;
}

int OrthonomicSystem::order() const {
    int k = 0;
    for (const Rule& r : rules_) k = std::max(k, r.lead.order());
    return k;
}

JetPoly OrthonomicSystem::prolonged_equation(int rule, const MultiIndex& J) const {
    const Rule& r = rules_.at(rule);
    return JetPoly::jet_var(jet(r.lead.dep, r.lead.idx.plus(J))) - total_derivative(r.rhs, J);
}

IntegrabilityReport check_integrability(const OrthonomicSystem& sys, int depth) {
    if (depth < 1) throw Error("integrability depth must be >= 1");
    std::vector<MultiIndex> extras;
    enumerate_multi_indices(sys.signature().n(), depth, extras);
    const auto& rules = sys.rules();
    for (size_t i = 0; i < rules.size(); ++i)
        for (size_t j = i + 1; j < rules.size(); ++j) {
            if (rules[i].lead.dep != rules[j].lead.dep) continue;
            const MultiIndex common = MultiIndex::lcm(rules[i].lead.idx, rules[j].lead.idx);
            for (const MultiIndex& K : extras) {
                const MultiIndex target = common.plus(K);
                JetPoly via_i = reduce_poly(
                    total_derivative(rules[i].rhs, target.minus(rules[i].lead.idx)), sys).normal;
                JetPoly via_j = reduce_poly(
                    total_derivative(rules[j].rhs, target.minus(rules[j].lead.idx)), sys).normal;
                if (!(via_i == via_j))
                    return {false, IntegrabilityWitness{static_cast<int>(i), static_cast<int>(j),
                                                        jet(rules[i].lead.dep, target),
                                                        via_i - via_j}};
            }
        }
    return {true, std::nullopt};
}

namespace {

// The principal jet to eliminate next: highest order first, then jet-variable
// order; coefficients are scanned before contact generators.
struct Occurrence {
    JetVar var;
    bool in_coeff = false;
    bool in_vgen = false;
};

std::optional<Occurrence> pick_principal(const BiForm& a, const OrthonomicSystem& sys) {
    std::optional<Occurrence> best;
    auto consider = [&](const JetVar& v, bool coeff) {
        if (!sys.is_principal(v)) return;
        if (!best || v.order() > best->var.order() ||
            (v.order() == best->var.order() && v < best->var)) {
            best = Occurrence{v, coeff, !coeff};
        } else if (best->var == v) {
            best->in_coeff |= coeff;
            best->in_vgen |= !coeff;
        }
    };
    for (const auto& [w, c] : a.terms()) {
        for (const JetVar& v : c.jet_vars()) consider(v, true);
        for (const JetVar& v : w.vgen) consider(v, false);
    }
    return best;
}

// p = quotient·w + remainder with the w-degree of quotient·w equal to that of p.
void divide_by_var(const JetPoly& p, const JetVar& w, JetPoly& quotient, JetPoly& remainder) {
    quotient = JetPoly{};
    remainder = JetPoly{};
    for (const auto& [m, c] : p.terms()) {
        int e = m.jet_exponent(w);
        if (e == 0) {
            remainder += JetPoly::monomial(c, m);
            continue;
        }
        Monomial rest;
        for (const auto& [i, k] : m.base_powers())
            for (int t = 0; t < k; ++t) rest = rest.times(Monomial::base_var(i));
        for (const auto& [v, k] : m.jet_powers()) {
            int kk = (v == w) ? k - 1 : k;
            for (int t = 0; t < kk; ++t) rest = rest.times(Monomial::jet_var(v));
        }
        quotient += JetPoly::monomial(c, rest);
    }
}

} // namespace

ReductionCertificate reduce(const BiForm& a, const OrthonomicSystem& sys) {
    ReductionCertificate cert;
    cert.normal = a;
    std::map<std::pair<int, MultiIndex>, JetPoly> rhs_cache;

    int steps = 0;
    for (;;) {
        auto occ = pick_principal(cert.normal, sys);
        if (!occ) break;
        if (++steps > kStepBudget)
            throw Error("reduction exceeded its step budget; "
                        "the system admits no compatible ranking");

        const JetVar w = occ->var;
        const auto [rule, J] = *sys.classifier().classify(w);
        auto cached = rhs_cache.find({rule, J});
        if (cached == rhs_cache.end())
            cached = rhs_cache.emplace(std::make_pair(rule, J),
                                       total_derivative(sys.rules()[rule].rhs, J)).first;
        const JetPoly& rhsJ = cached->second;
        const ProlongedRule key{J, rule};

        std::vector<std::pair<GenWord, JetPoly>> affected(cert.normal.terms().begin(),
                                                          cert.normal.terms().end());
        if (occ->in_coeff) {
            for (const auto& [word, coeff] : affected) {
                JetPoly q, r;
                divide_by_var(coeff, w, q, r);
                if (q.is_zero()) continue;
                cert.normal -= BiForm::term(coeff, word.hgen, word.vgen);
                cert.normal += BiForm::term(r + q * rhsJ, word.hgen, word.vgen);
                cert.lam[key] += BiForm::term(q, word.hgen, word.vgen);
            }
        } else {
            for (const auto& [word, coeff] : affected) {
                auto pos = std::find(word.vgen.begin(), word.vgen.end(), w);
                if (pos == word.vgen.end()) continue;
                const int p = static_cast<int>(pos - word.vgen.begin());
                cert.normal -= BiForm::term(coeff, word.hgen, word.vgen);
                for (const JetVar& v : rhsJ.jet_vars()) {
                    std::vector<JetVar> vg = word.vgen;
                    vg[p] = v;
                    cert.normal += BiForm::term(coeff * partial(rhsJ, VarRef{v}), word.hgen, vg);
                }
                std::vector<JetVar> rest = word.vgen;
                rest.erase(rest.begin() + p);
                JetPoly mc = ((word.hgen.size() + p) % 2 == 0) ? coeff : -coeff;
                cert.mu[key] += BiForm::term(mc, word.hgen, rest);
            }
        }
        std::erase_if(cert.lam, [](const auto& kv) { return kv.second.is_zero(); });
        std::erase_if(cert.mu, [](const auto& kv) { return kv.second.is_zero(); });
    }
    return cert;
}

PolyReduction reduce_poly(const JetPoly& p, const OrthonomicSystem& sys) {
    ReductionCertificate cert = reduce(BiForm(p), sys);
    PolyReduction out;
    if (!cert.normal.is_zero()) out.normal = cert.normal.terms().begin()->second;
    for (const auto& [key, form] : cert.lam)
        if (!form.is_zero()) out.lam[key] = form.terms().begin()->second;
    return out;
}

BiForm reassemble(const ReductionCertificate& cert, const OrthonomicSystem& sys) {
    BiForm out = cert.normal;
    for (const auto& [key, lam] : cert.lam)
        out += wedge(BiForm(sys.prolonged_equation(key.rule, key.J)), lam);
    for (const auto& [key, mu] : cert.mu)
        out += wedge(d_v(BiForm(sys.prolonged_equation(key.rule, key.J))), mu);
    return out;
}

bool is_internal(const BiForm& a, const OrthonomicSystem& sys) {
    for (const auto& [w, c] : a.terms()) {
        for (const JetVar& v : c.jet_vars())
            if (sys.is_principal(v)) return false;
        for (const JetVar& v : w.vgen)
            if (sys.is_principal(v)) return false;
    }
    return true;
}

BiForm onshell_dh(const BiForm& a, const OrthonomicSystem& sys) {
    if (!is_internal(a, sys))
        throw Error("onshell_dh: form must be in internal coordinates");
    return reduce(d_h(a, sys.signature()), sys).normal;
}

BiForm onshell_dv(const BiForm& a, const OrthonomicSystem& sys) {
    if (!is_internal(a, sys))
        throw Error("onshell_dv: form must be in internal coordinates");
    return d_v(a);
}

} // namespace varbico
