#pragma once

#include "varbico/descent.hpp"
#include "varbico/lagcmp.hpp"

#include <random>
#include <vector>

namespace varbico::testing {

inline MultiIndex mi(std::initializer_list<int> indices) {
    MultiIndex out;
    for (int i : indices) out = out.plus(i);
    return out;
}

inline JetVar jv(int dep, std::initializer_list<int> indices) { return jet(dep, mi(indices)); }

inline JetPoly pv(const JetVar& v) { return JetPoly::jet_var(v); }
inline JetPoly px(int i) { return JetPoly::base_var(i); }

inline JetPoly half() { return JetPoly(Rational(1) / 2); }

/// Deterministic generator for property-style tests.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int range(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    Rational rat() {
        int num = range(-3, 3);
        int den = range(1, 2);
        return Rational(num, den);
    }

    Rational nonzero_rat() {
        Rational q = rat();
        return q == 0 ? Rational(1) : q;
    }

    MultiIndex midx(int n, int max_order) {
        MultiIndex out;
        int order = range(0, max_order);
        for (int k = 0; k < order; ++k) out = out.plus(range(0, n - 1));
        return out;
    }

    JetVar jvar(int n, int m, int max_order) { return jet(range(0, m - 1), midx(n, max_order)); }

    Monomial mono(int n, int m, int max_order, int max_degree) {
        Monomial out;
        int degree = range(0, max_degree);
        for (int k = 0; k < degree; ++k) {
            if (range(0, 2) == 0) out = out.times(Monomial::base_var(range(0, n - 1)));
            else out = out.times(Monomial::jet_var(jvar(n, m, max_order)));
        }
        return out;
    }

    JetPoly poly(int n, int m, int max_order, int max_degree, int max_terms) {
        JetPoly out;
        int terms = range(0, max_terms);
        for (int k = 0; k < terms; ++k)
            out += JetPoly::monomial(rat(), mono(n, m, max_order, max_degree));
        return out;
    }

    /// Polynomial in the given jet variables (plus base variables).
    JetPoly poly_in(int n, const std::vector<JetVar>& vars, int max_degree, int max_terms) {
        JetPoly out;
        int terms = range(0, max_terms);
        for (int k = 0; k < terms; ++k) {
            Monomial mono;
            int degree = range(0, max_degree);
            for (int d = 0; d < degree; ++d) {
                if (!vars.empty() && range(0, 2) != 0)
                    mono = mono.times(Monomial::jet_var(vars[range(0, (int)vars.size() - 1)]));
                else
                    mono = mono.times(Monomial::base_var(range(0, n - 1)));
            }
            out += JetPoly::monomial(rat(), mono);
        }
        return out;
    }

    /// Homogeneous random form of the given grading.
    BiForm form(const Signature& sig, Grading g, int max_order, int max_degree,
                int max_terms) {
        BiForm out;
        int terms = range(1, max_terms);
        for (int k = 0; k < terms; ++k) {
            std::vector<int> hg;
            std::vector<int> all;
            for (int i = 0; i < sig.n(); ++i) all.push_back(i);
            std::shuffle(all.begin(), all.end(), rng_);
            hg.assign(all.begin(), all.begin() + g.h);
            std::vector<JetVar> vg;
            for (int tries = 0; (int)vg.size() < g.v && tries < 50; ++tries) {
                JetVar v = jvar(sig.n(), sig.m(), max_order);
                if (std::find(vg.begin(), vg.end(), v) == vg.end()) vg.push_back(v);
            }
            if ((int)vg.size() < g.v) continue;
            out += BiForm::term(poly(sig.n(), sig.m(), max_order, max_degree, 3), hg, vg);
        }
        return out;
    }

    /// Mixed-grading random form.
    BiForm mixed_form(const Signature& sig, int max_order, int max_degree, int max_terms,
                      int max_v) {
        BiForm out;
        int pieces = range(1, 3);
        for (int k = 0; k < pieces; ++k)
            out += form(sig, {range(0, sig.n()), range(0, max_v)}, max_order, max_degree,
                        max_terms);
        return out;
    }

    /// Homogeneous form in internal coordinates of the system.
    BiForm internal_form(const OrthonomicSystem& sys, Grading g, int max_order,
                         int max_degree, int max_terms) {
        const Signature& sig = sys.signature();
        std::vector<JetVar> params;
        for (int a = 0; a < sig.m(); ++a)
            for (int ord = 0; ord <= max_order; ++ord)
                collect_indices(sig.n(), ord, [&](const MultiIndex& I) {
                    JetVar v = jet(a, I);
                    if (!sys.is_principal(v)) params.push_back(v);
                });
        BiForm out;
        if ((int)params.size() < g.v) return out;
        int terms = range(1, max_terms);
        for (int k = 0; k < terms; ++k) {
            std::vector<int> all;
            for (int i = 0; i < sig.n(); ++i) all.push_back(i);
            std::shuffle(all.begin(), all.end(), rng_);
            std::vector<int> hg(all.begin(), all.begin() + g.h);
            std::vector<JetVar> vg;
            for (int tries = 0; (int)vg.size() < g.v && tries < 80; ++tries) {
                JetVar v = params[range(0, (int)params.size() - 1)];
                if (std::find(vg.begin(), vg.end(), v) == vg.end()) vg.push_back(v);
            }
            if ((int)vg.size() < g.v) continue;
            out += BiForm::term(poly_in(sig.n(), params, max_degree, 3), hg, vg);
        }
        return out;
    }

private:
    template <typename F>
    static void collect_indices(int n, int order, F&& f, MultiIndex acc = {}, int from = 0) {
        if (order == 0) {
            f(acc);
            return;
        }
        for (int i = from; i < n; ++i) collect_indices(n, order - 1, f, acc.plus(i), i);
    }

    std::mt19937 rng_;
};

// ---------------------------------------------------------------- fixtures

/// 1-D oscillator: t; u; u_tt -> -u.
struct Oscillator {
    Signature sig{{"t"}, {"u"}};
    JetVar u = jet(0);
    JetVar ut = jv(0, {0});
    JetVar utt = jv(0, {0, 0});
    OrthonomicSystem sys = OrthonomicSystem::make(sig, {{utt, -pv(u)}});

    BiForm omega_hat() const { return wedge(BiForm::dv_gen(ut), BiForm::dv_gen(u)); }
    BiForm standard_lagrangian() const {
        JetPoly p = half() * pv(ut) * pv(ut) - half() * pv(u) * pv(u);
        return wedge(BiForm(p), volume_form(sig));
    }
};

/// 2-D wave: t, x; u; u_tt -> u_xx.
struct Wave {
    Signature sig{{"t", "x"}, {"u"}};
    JetVar u = jet(0);
    JetVar ut = jv(0, {0});
    JetVar ux = jv(0, {1});
    JetVar utt = jv(0, {0, 0});
    JetVar uxx = jv(0, {1, 1});
    OrthonomicSystem sys = OrthonomicSystem::make(sig, {{utt, pv(uxx)}});

    BiForm lagrangian() const {
        JetPoly p = half() * pv(ut) * pv(ut) - half() * pv(ux) * pv(ux);
        return wedge(BiForm(p), volume_form(sig));
    }
};

/// 1-D constrained pair: t; q1, q2, lam;
/// L = [q̇1²/2 + q̇2²/2 + lam (q1 − q2)] dt with EL system
/// {q1_tt -> 0, q2 -> q1, lam -> 0}.
struct ConstrainedPair {
    Signature sig{{"t"}, {"q1", "q2", "lam"}};
    JetVar q1 = jet(0), q2 = jet(1), lam = jet(2);
    JetVar q1t = jv(0, {0}), q2t = jv(1, {0});
    JetVar q1tt = jv(0, {0, 0});
    OrthonomicSystem sys = OrthonomicSystem::make(
        sig, {{q1tt, JetPoly{}}, {q2, pv(q1)}, {lam, JetPoly{}}});

    JetPoly kinetic() const {
        return half() * pv(q1t) * pv(q1t) + half() * pv(q2t) * pv(q2t);
    }
    BiForm lagrangian() const {
        JetPoly p = kinetic() + pv(lam) * (pv(q1) - pv(q2));
        return wedge(BiForm(p), volume_form(sig));
    }
    /// L' = L + lam (q1 − q2) dt: multiplier-modified partner.
    BiForm lagrangian_prime() const {
        JetPoly p = kinetic() + (pv(lam) + pv(lam)) * (pv(q1) - pv(q2));
        return wedge(BiForm(p), volume_form(sig));
    }
    /// L + alpha (q1 − q2) dt with constant alpha = 1.
    BiForm lagrangian_const_shift() const {
        JetPoly p = kinetic() + (pv(lam) + JetPoly(1)) * (pv(q1) - pv(q2));
        return wedge(BiForm(p), volume_form(sig));
    }
};

} // namespace varbico::testing
