#pragma once

#include "varbico/biform.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace varbico {

/// Source form Σ_a f_a dv u^a ∧ ν with ν the horizontal volume form.
/// Stored coefficients follow the Euler-operator normalization
/// f_a = Σ_I (−D)_I ∂L/∂u^a_I.
class SourceForm {
public:
    SourceForm() = default;
    explicit SourceForm(int num_dep) : coeffs_(num_dep) {}
    SourceForm(std::vector<JetPoly> coeffs) : coeffs_(std::move(coeffs)) {}

    int size() const { return static_cast<int>(coeffs_.size()); }
    const JetPoly& coeff(int a) const { return coeffs_.at(a); }
    void set_coeff(int a, JetPoly p) { coeffs_.at(a) = std::move(p); }

    bool is_zero() const;
    bool operator==(const SourceForm&) const = default;

    /// The (n,1) form Σ_a f_a dv u^a ∧ ν in canonical generator order.
    BiForm as_biform(const Signature& sig) const;

private:
    std::vector<JetPoly> coeffs_;
};

/// First vertical variation of a Lagrangian density: the pair (EL, θ) with
/// dv L = EL_a ∧ dv u^a − dh θ, checked identically at construction.
struct FirstVariation {
    SourceForm el;
    BiForm theta;
};

/// Classical Euler operator applied to the coefficient of L = P·ν.
SourceForm euler_operator(const JetPoly& lagrangian_coeff, const Signature& sig);

/// Integration by parts of a homogeneous (n,1) form:
/// α = s − dh σ with s free of dv u^a_I, |I| > 0. Deterministic peeling:
/// highest |I| first, ties by jet-variable order, lowest base index peeled.
std::pair<SourceForm, BiForm> source_decompose(const BiForm& alpha, const Signature& sig);

/// (EL, θ) of a homogeneous (n,0) Lagrangian density.
FirstVariation first_variation(const BiForm& lagrangian, const Signature& sig);

/// ω = dv θ for the θ of first_variation.
BiForm presymplectic_current(const BiForm& lagrangian, const Signature& sig);

/// Total differential operator in normal form Σ_J c_J · D_J.
using DiffOp = std::map<MultiIndex, JetPoly>;

/// Coefficient-wise difference between the linearization of f and its formal
/// adjoint; empty map entries are omitted.
std::map<std::pair<int, int>, DiffOp>
linearization_adjoint_gap(const SourceForm& f, const Signature& sig);

struct HelmholtzWitness {
    int row = 0; // dependent index a of the operator entry (a,b)
    int col = 0;
    MultiIndex order;
    JetPoly gap;
};

struct HelmholtzResult {
    bool pass = false;
    std::optional<HelmholtzWitness> witness;
};

/// Self-adjointness test of the linearization; first nonzero gap entry as witness.
HelmholtzResult helmholtz_check(const SourceForm& f, const Signature& sig);

/// Fiber-homotopy Lagrangian L = [Σ_a u^a · ∫-scaled f_a]·ν for a source form
/// passing the Helmholtz test; EL of the result is checked to equal f.
BiForm vainberg_lagrangian(const SourceForm& f, const Signature& sig);

/// True iff the Euler-Lagrange source form of Δ vanishes identically.
bool is_null_lagrangian(const BiForm& delta, const Signature& sig);

} // namespace varbico
