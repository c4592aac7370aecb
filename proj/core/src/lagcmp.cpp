#include "varbico/lagcmp.hpp"

#include <algorithm>

namespace varbico {

bool equivalent_mod_boundary(const BiForm& lagrangian, const BiForm& lagrangian_prime,
                             const Signature& sig) {
    return is_null_lagrangian(lagrangian_prime - lagrangian, sig);
}

namespace {

// Parametric jet variables up to the given order.
std::vector<JetVar> parametric_jets(const OrthonomicSystem& sys, int max_order) {
    std::vector<JetVar> out;
    std::vector<MultiIndex> idxs;
    idxs.emplace_back();
    for (int ord = 1; ord <= max_order; ++ord) {
        std::vector<MultiIndex> next;
        for (const MultiIndex& I : idxs)
            if (I.order() == ord - 1)
                for (int i = 0; i < sys.signature().n(); ++i) {
                    MultiIndex J = I.plus(i);
                    if (std::find(idxs.begin(), idxs.end(), J) == idxs.end() &&
                        std::find(next.begin(), next.end(), J) == next.end())
                        next.push_back(J);
                }
        idxs.insert(idxs.end(), next.begin(), next.end());
    }
    for (int a = 0; a < sys.signature().m(); ++a)
        for (const MultiIndex& I : idxs) {
            JetVar v = jet(a, I);
            if (!sys.is_principal(v)) out.push_back(v);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Monomials of total degree <= bound in the base variables and the given jets.
void monomials_up_to(const Signature& sig, const std::vector<JetVar>& jets, int degree,
                     std::vector<Monomial>& out) {
    out.clear();
    out.emplace_back();
    const int num_vars = sig.n() + static_cast<int>(jets.size());
    size_t lo = 0;
    for (int d = 1; d <= degree; ++d) {
        size_t hi = out.size();
        for (size_t k = lo; k < hi; ++k)
            for (int v = 0; v < num_vars; ++v) {
                Monomial factor = v < sig.n() ? Monomial::base_var(v)
                                              : Monomial::jet_var(jets[v - sig.n()]);
                Monomial next = out[k].times(factor);
                if (std::find(out.begin() + hi, out.end(), next) == out.end())
                    out.push_back(next);
            }
        lo = hi;
    }
}

// Exact Gaussian elimination; returns any solution of A x = b or nothing.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> rows,
                                                  std::vector<Rational> rhs, int cols) {
    const int nrows = static_cast<int>(rows.size());
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < nrows; ++col) {
        int pivot = -1;
        for (int r = row; r < nrows; ++r)
            if (rows[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[pivot], rows[row]);
        std::swap(rhs[pivot], rhs[row]);
        const Rational inv = rows[row][col];
        for (int r = 0; r < nrows; ++r) {
            if (r == row || rows[r][col] == 0) continue;
            const Rational factor = rows[r][col] / inv;
            for (int c = col; c < cols; ++c) rows[r][c] -= factor * rows[row][c];
            rhs[r] -= factor * rhs[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < nrows; ++r)
        if (rhs[r] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (int r = 0; r < row; ++r) {
        const int col = pivot_col_of_row[r];
        x[col] = rhs[r] / rows[r][col];
    }
    return x;
}

} // namespace

std::optional<BiForm> solve_dh_exact(const BiForm& delta_hat, const OrthonomicSystem& sys,
                                     const Bounds& bounds) {
    const Signature& sig = sys.signature();
    const int n = sig.n();
    if (n < 2) throw Error("solve_dh_exact: needs at least two independent variables");
    if (!is_internal(delta_hat, sys))
        throw Error("solve_dh_exact: right-hand side must be internal");
    if (delta_hat.is_zero()) return BiForm{};

    const std::vector<JetVar> jets = parametric_jets(sys, bounds.jet_order);
    std::vector<Monomial> monomials;
    monomials_up_to(sig, jets, bounds.poly_degree, monomials);

    // horizontal words of degree n-2
    std::vector<std::vector<int>> hwords;
    for (int skip1 = 0; skip1 < n; ++skip1)
        for (int skip2 = skip1 + 1; skip2 < n; ++skip2) {
            std::vector<int> w;
            for (int i = 0; i < n; ++i)
                if (i != skip1 && i != skip2) w.push_back(i);
            hwords.push_back(w);
        }

    std::vector<BiForm> basis;
    for (const auto& hw : hwords)
        for (size_t i = 0; i < jets.size(); ++i)
            for (size_t j = i + 1; j < jets.size(); ++j)
                for (const Monomial& m : monomials) {
                    BiForm b = BiForm::term(JetPoly::monomial(1, m), hw, {jets[i], jets[j]});
                    if (!b.is_zero()) basis.push_back(std::move(b));
                }

    // index the (generator word, monomial) coordinates of the images
    std::map<std::pair<GenWord, Monomial>, int> coord;
    auto coord_of = [&coord](const GenWord& w, const Monomial& m) {
        auto [it, fresh] = coord.emplace(std::make_pair(w, m), static_cast<int>(coord.size()));
        return it->second;
    };

    std::vector<std::map<int, Rational>> columns(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) {
        const BiForm image = onshell_dh(basis[k], sys);
        for (const auto& [w, poly] : image.terms())
            for (const auto& [m, c] : poly.terms()) columns[k][coord_of(w, m)] = c;
    }
    std::map<int, Rational> target;
    for (const auto& [w, poly] : delta_hat.terms())
        for (const auto& [m, c] : poly.terms()) target[coord_of(w, m)] = c;

    const int nrows = static_cast<int>(coord.size());
    const int ncols = static_cast<int>(basis.size());
    std::vector<std::vector<Rational>> rows(nrows, std::vector<Rational>(ncols, Rational(0)));
    std::vector<Rational> rhs(nrows, Rational(0));
    for (int k = 0; k < ncols; ++k)
        for (const auto& [r, c] : columns[k]) rows[r][k] = c;
    for (const auto& [r, c] : target) rhs[r] = c;

    auto solution = solve_linear(std::move(rows), std::move(rhs), ncols);
    if (!solution) return std::nullopt;
    BiForm pi;
    for (int k = 0; k < ncols; ++k)
        if ((*solution)[k] != 0) pi += basis[k].scaled((*solution)[k]);
    return pi;
}

ContainmentVerdict contains(const BiForm& lagrangian, const BiForm& lagrangian_prime,
                            const OrthonomicSystem& sys_of_L, const Bounds& bounds) {
    const Signature& sig = sys_of_L.signature();
    const FirstVariation fv = first_variation(lagrangian, sig);
    for (int a = 0; a < sig.m(); ++a)
        if (!reduce_poly(fv.el.coeff(a), sys_of_L).normal.is_zero())
            throw Error("contains: supplied system does not solve the "
                        "Euler-Lagrange equations of the first Lagrangian");

    ContainmentVerdict verdict;
    verdict.el_contained = true;
    const FirstVariation fv_prime = first_variation(lagrangian_prime, sig);
    for (int a = 0; a < sig.m(); ++a) {
        JetPoly residue = reduce_poly(fv_prime.el.coeff(a), sys_of_L).normal;
        if (!residue.is_zero()) {
            verdict.el_contained = false;
            verdict.witness = ContainmentWitness{a, std::move(residue)};
            break;
        }
    }

    const BiForm omega = d_v(fv.theta);
    const BiForm omega_prime = d_v(fv_prime.theta);
    const BiForm delta = reduce(omega - omega_prime, sys_of_L).normal;
    if (delta.is_zero()) {
        verdict.omega_match = OmegaMatch::exact;
    } else if (sig.n() >= 2) {
        if (auto pi = solve_dh_exact(delta, sys_of_L, bounds)) {
            verdict.omega_match = OmegaMatch::exact_up_to_dh;
            verdict.pi = std::move(*pi);
        } else {
            verdict.omega_match = OmegaMatch::undecided_within_bounds;
        }
    } else {
        verdict.omega_match = OmegaMatch::undecided_within_bounds;
    }
    return verdict;
}

} // namespace varbico
