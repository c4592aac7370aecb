#pragma once

#include "varbico/descent.hpp"

namespace varbico {

/// Search bounds for the dh-exactness ansatz.
struct Bounds {
    int jet_order = 1;
    int poly_degree = 1;
};

enum class OmegaMatch { exact, exact_up_to_dh, undecided_within_bounds };

struct ContainmentWitness {
    int dep = 0;
    JetPoly residue; // nonzero normal form of an EL' coefficient
};

/// Verdict of the containment preorder L ≺ L': every solution of EL(L)
/// solves EL(L'), and the presymplectic currents agree on-shell up to a
/// horizontally exact term.
struct ContainmentVerdict {
    bool el_contained = false;
    std::optional<ContainmentWitness> witness;
    OmegaMatch omega_match = OmegaMatch::undecided_within_bounds;
    std::optional<BiForm> pi; // for exact_up_to_dh: onshell_dh(pi) closes the gap
};

/// True iff L' − L has identically vanishing Euler-Lagrange source form.
bool equivalent_mod_boundary(const BiForm& lagrangian, const BiForm& lagrangian_prime,
                             const Signature& sig);

/// Linear-ansatz inversion of dh^E on internal (n−1,2) forms: finds an
/// internal (n−2,2) form π with onshell_dh(π) = δ̂ within the bounds, or
/// reports nothing (undecided).
std::optional<BiForm> solve_dh_exact(const BiForm& delta_hat, const OrthonomicSystem& sys,
                                     const Bounds& bounds);

/// Containment check of L ≺ L' against a user-supplied orthonomic form of
/// the Euler-Lagrange system of L.
ContainmentVerdict contains(const BiForm& lagrangian, const BiForm& lagrangian_prime,
                            const OrthonomicSystem& sys_of_L, const Bounds& bounds);

} // namespace varbico
