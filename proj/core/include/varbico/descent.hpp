#pragma once

#include "varbico/pdesys.hpp"
#include "varbico/varcalc.hpp"

namespace varbico {

/// Closure of a presymplectic current on the prolonged equation manifold.
struct CompatibilityReport {
    bool dh_closed = false;
    bool dv_closed = false;
    ReductionCertificate dh_certificate;
    ReductionCertificate dv_certificate;
    /// The current itself, reduced to internal coordinates.
    BiForm omega_internal;

    bool compatible() const { return dh_closed && dv_closed; }
};

/// Checks dh^E ω̂ = 0 and dv^E ω̂ = 0 for a homogeneous (n−1,2) form.
/// Off-shell input is first reduced to internal coordinates.
CompatibilityReport check_compatibility(const BiForm& omega_hat, const OrthonomicSystem& sys);

/// On-shell solution of the two descent stages that matter for assembly.
struct DescentPair {
    BiForm theta_hat; // internal (n−1,1), dv^E θ̂ = ω̂
    BiForm lagr_hat;  // internal (n,0),  dv^E L̂ = −dh^E θ̂
};

/// Vertical-homotopy descent with higher components chosen zero.
DescentPair descend(const BiForm& omega_hat, const OrthonomicSystem& sys);

/// Same, with a prescribed (n−2,2) gauge component ρ̂_{n−2,2} = π̂
/// (internal and dv^E-closed), so that dv^E θ̂ = ω̂ − dh^E π̂.
DescentPair descend(const BiForm& omega_hat, const OrthonomicSystem& sys,
                    const BiForm& gauge_pi);

/// Assembled solution of the inverse problem: dv L = EL ∧ dv u − dh θ and
/// dv θ = ω hold identically, every EL coefficient reduces to zero modulo
/// the system, and the multipliers express EL_a = Σ f_{JB}·ε^{JB}_a.
struct ReconstructionResult {
    BiForm lagrangian;
    BiForm theta;
    BiForm omega;
    SourceForm el;
    std::map<ProlongedRule, std::map<int, JetPoly>> multipliers;
};

/// Off-shell lift of a descent pair (taken verbatim as jet-space forms,
/// possibly perturbed by equation-ideal terms) and assembly of the result.
ReconstructionResult lift_and_assemble(const BiForm& theta_hat, const BiForm& lagr_hat,
                                       const OrthonomicSystem& sys);

/// check_compatibility → descend → lift_and_assemble, with the on-shell
/// agreement reduce(ω − ω̂) = 0 verified at the end.
ReconstructionResult reconstruct(const BiForm& omega_hat, const OrthonomicSystem& sys);

} // namespace varbico
