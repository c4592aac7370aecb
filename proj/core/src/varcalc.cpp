#include "varbico/varcalc.hpp"

#include <algorithm>

namespace varbico {

namespace {

void require_grading(const BiForm& a, const Grading& g, const char* what) {
    if (!a.is_homogeneous(g))
        throw Error(std::string(what) + ": form is not homogeneous of the required grading");
}

// Enumerates all J ⊆ I together with the multi-binomial Π C(I_i, J_i).
void subindices(const MultiIndex& I, std::vector<std::pair<MultiIndex, Integer>>& out) {
    out.clear();
    out.emplace_back(MultiIndex{}, Integer(1));
    for (int i = 0; i <= I.max_var(); ++i) {
        int ci = I.count(i);
        if (ci == 0) continue;
        std::vector<std::pair<MultiIndex, Integer>> next;
        for (const auto& [J, binom] : out) {
            Integer choose = 1;
            for (int k = 0; k <= ci; ++k) {
                if (k > 0) choose = choose * (ci - k + 1) / k;
                MultiIndex Jk = J;
                for (int t = 0; t < k; ++t) Jk = Jk.plus(i);
                next.emplace_back(Jk, binom * choose);
            }
        }
        out = std::move(next);
    }
}

} // namespace

bool SourceForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const JetPoly& p) { return p.is_zero(); });
}

BiForm SourceForm::as_biform(const Signature& sig) const {
    BiForm out;
    const BiForm vol = volume_form(sig);
    for (int a = 0; a < size(); ++a) {
        if (coeffs_[a].is_zero()) continue;
        out += wedge(wedge(BiForm(coeffs_[a]), BiForm::dv_gen(jet(a))), vol);
    }
    return out;
}

SourceForm euler_operator(const JetPoly& lagrangian_coeff, const Signature& sig) {
    SourceForm out(sig.m());
    for (const JetVar& v : lagrangian_coeff.jet_vars()) {
        JetPoly contrib = total_derivative(partial(lagrangian_coeff, VarRef{v}), v.idx);
        if (v.idx.order() % 2 == 1) contrib = -contrib;
        out.set_coeff(v.dep, out.coeff(v.dep) + contrib);
    }
    return out;
}

std::pair<SourceForm, BiForm> source_decompose(const BiForm& alpha, const Signature& sig) {
    const int n = sig.n();
    if (!alpha.is_homogeneous({n, 1}))
        throw Error("source_decompose: input must be homogeneous of grading (n,1)");

    BiForm cur = alpha;
    BiForm tau; // accumulated potential: alpha = peeled + dh(tau)

    for (;;) {
        // highest-order contact generator still carrying derivative indices;
        // ties broken by canonical jet-variable order
        const GenWord* pick = nullptr;
        for (const auto& [w, c] : cur.terms()) {
            if (w.vgen.size() != 1 || w.vgen[0].order() == 0) continue;
            if (!pick) { pick = &w; continue; }
            const JetVar& cand = w.vgen[0];
            const JetVar& best = pick->vgen[0];
            if (cand.order() > best.order() ||
                (cand.order() == best.order() && cand < best))
                pick = &w;
        }
        if (!pick) break;
        const GenWord word = *pick;
        const JetPoly coeff = cur.terms().at(word);
        const JetVar v = word.vgen[0];

        // symmetrized peel: each index of I with weight I_i/|I|, so the
        // splitting is equivariant in the derivative indices
        cur -= BiForm::term(coeff, word.hgen, {v});
        const int order = v.idx.order();
        for (int i = 0; i <= v.idx.max_var(); ++i) {
            if (v.idx.count(i) == 0) continue;
            const Rational weight(v.idx.count(i), order);
            const JetVar peeled = jet(v.dep, v.idx.minus(MultiIndex::unit(i)));
            const JetPoly weighted = coeff.scaled(weight);

            cur += BiForm::term(-total_derivative(weighted, i), word.hgen, {peeled});

            std::vector<int> hgens;
            for (int j = 0; j < n; ++j)
                if (j != i) hgens.push_back(j);
            JetPoly tc = (i % 2 == 0) ? weighted : -weighted;
            tau += BiForm::term(tc, hgens, {peeled});
        }
    }

    // cur = Σ_a c_a ν ∧ dv u^a; stored source coefficients are (−1)^n c_a.
    SourceForm s(sig.m());
    for (const auto& [w, c] : cur.terms()) {
        JetPoly f = (n % 2 == 0) ? c : -c;
        s.set_coeff(w.vgen[0].dep, f);
    }
    return {std::move(s), -tau};
}

FirstVariation first_variation(const BiForm& lagrangian, const Signature& sig) {
    require_grading(lagrangian, {sig.n(), 0}, "first_variation");
    const BiForm dvl = d_v(lagrangian);
    auto [el_decomposed, theta] = source_decompose(dvl, sig);

    JetPoly coeff;
    if (!lagrangian.is_zero()) coeff = lagrangian.terms().begin()->second;
    SourceForm el = euler_operator(coeff, sig);
    if (!(el == el_decomposed))
        throw Defect("first_variation: Euler operator disagrees with integration by parts");
    if (!(dvl == el.as_biform(sig) - d_h(theta, sig)))
        throw Defect("first_variation: dvL = EL - dh(theta) failed to hold");
    return {std::move(el), std::move(theta)};
}

BiForm presymplectic_current(const BiForm& lagrangian, const Signature& sig) {
    return d_v(first_variation(lagrangian, sig).theta);
}

std::map<std::pair<int, int>, DiffOp>
linearization_adjoint_gap(const SourceForm& f, const Signature& sig) {
    const int m = sig.m();
    std::map<std::pair<int, int>, DiffOp> gap;

    auto add = [&gap](int a, int b, const MultiIndex& J, const JetPoly& p) {
        if (p.is_zero()) return;
        auto& entry = gap[{a, b}][J];
        entry += p;
        if (entry.is_zero()) gap[{a, b}].erase(J);
    };

    std::vector<std::pair<MultiIndex, Integer>> subs;
    for (int a = 0; a < m; ++a) {
        for (const JetVar& v : f.coeff(a).jet_vars()) {
            const int b = v.dep;
            const JetPoly df = partial(f.coeff(a), VarRef{v});
            // linearization entry (a,b): + df · D_I
            add(a, b, v.idx, df);
            // adjoint entry (b,a): (−1)^{|I|} D_I ∘ (df ·) expanded by Leibniz
            subindices(v.idx, subs);
            const int sign = (v.idx.order() % 2 == 0) ? 1 : -1;
            for (const auto& [J, binom] : subs) {
                JetPoly c = total_derivative(df, v.idx.minus(J)).scaled(Rational(binom));
                add(b, a, J, sign > 0 ? -c : c);
            }
        }
    }

    for (auto it = gap.begin(); it != gap.end();)
        it = it->second.empty() ? gap.erase(it) : std::next(it);
    return gap;
}

HelmholtzResult helmholtz_check(const SourceForm& f, const Signature& sig) {
    auto gap = linearization_adjoint_gap(f, sig);
    if (gap.empty()) return {true, std::nullopt};
    const auto& [key, op] = *gap.begin();
    const auto& [J, poly] = *op.begin();
    return {false, HelmholtzWitness{key.first, key.second, J, poly}};
}

BiForm vainberg_lagrangian(const SourceForm& f, const Signature& sig) {
    if (!helmholtz_check(f, sig).pass)
        throw Error("vainberg_lagrangian: source form fails the Helmholtz conditions");
    JetPoly p;
    for (int a = 0; a < sig.m(); ++a)
        p += JetPoly::jet_var(jet(a)) * scale_integrate(f.coeff(a), 1);
    BiForm lagrangian = wedge(BiForm(p), volume_form(sig));
    if (!(first_variation(lagrangian, sig).el == f))
        throw Defect("vainberg_lagrangian: homotopy Lagrangian failed to reproduce f");
    return lagrangian;
}

bool is_null_lagrangian(const BiForm& delta, const Signature& sig) {
    require_grading(delta, {sig.n(), 0}, "is_null_lagrangian");
    if (delta.is_zero()) return true;
    return euler_operator(delta.terms().begin()->second, sig).is_zero();
}

} // namespace varbico
