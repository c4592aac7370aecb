#include "varbico/descent.hpp"

namespace varbico {

CompatibilityReport check_compatibility(const BiForm& omega_hat, const OrthonomicSystem& sys) {
    const Signature& sig = sys.signature();
    const Grading expected{sig.n() - 1, 2};
    if (!omega_hat.is_homogeneous(expected))
        throw Error("check_compatibility: current must be homogeneous of grading (n-1,2)");

    CompatibilityReport report;
    report.omega_internal = is_internal(omega_hat, sys)
                                ? omega_hat
                                : reduce(omega_hat, sys).normal;
    report.dh_certificate = reduce(d_h(report.omega_internal, sig), sys);
    report.dv_certificate = reduce(d_v(report.omega_internal), sys);
    report.dh_closed = report.dh_certificate.normal.is_zero();
    report.dv_closed = report.dv_certificate.normal.is_zero();
    return report;
}

DescentPair descend(const BiForm& omega_hat, const OrthonomicSystem& sys) {
    return descend(omega_hat, sys, BiForm{});
}

DescentPair descend(const BiForm& omega_hat, const OrthonomicSystem& sys,
                    const BiForm& gauge_pi) {
    const Signature& sig = sys.signature();
    CompatibilityReport report = check_compatibility(omega_hat, sys);
    if (!report.compatible())
        throw Error("descend: presymplectic current is not compatible with the system");

    BiForm target = report.omega_internal;
    if (!gauge_pi.is_zero()) {
        if (!gauge_pi.is_homogeneous({sig.n() - 2, 2}))
            throw Error("descend: gauge component must have grading (n-2,2)");
        if (!is_internal(gauge_pi, sys))
            throw Error("descend: gauge component must be internal");
        if (!onshell_dv(gauge_pi, sys).is_zero())
            throw Error("descend: gauge component must be vertically closed on-shell");
        target -= onshell_dh(gauge_pi, sys);
    }

    DescentPair out;
    out.theta_hat = vertical_homotopy(target);
    out.lagr_hat = vertical_homotopy(-onshell_dh(out.theta_hat, sys));
    return out;
}

ReconstructionResult lift_and_assemble(const BiForm& theta_hat, const BiForm& lagr_hat,
                                       const OrthonomicSystem& sys) {
    const Signature& sig = sys.signature();
    if (!theta_hat.is_homogeneous({sig.n() - 1, 1}))
        throw Error("lift_and_assemble: theta must have grading (n-1,1)");
    if (!lagr_hat.is_homogeneous({sig.n(), 0}))
        throw Error("lift_and_assemble: Lagrangian part must have grading (n,0)");

    // Lifted (n,0)-descent equation: dv L̂ + dh θ̂ = Σ f λ + Σ dv f ∧ μ.
    const BiForm defect = d_v(lagr_hat) + d_h(theta_hat, sig);
    ReductionCertificate cert = reduce(defect, sys);
    if (!cert.normal.is_zero())
        throw Defect("lift_and_assemble: lifted descent equation has a nonzero normal form");

    ReconstructionResult out;
    out.lagrangian = lagr_hat;
    for (const auto& [key, mu] : cert.mu)
        out.lagrangian -= wedge(BiForm(sys.prolonged_equation(key.rule, key.J)), mu);

    const BiForm source_part = d_v(out.lagrangian) + d_h(theta_hat, sig);
    auto [el, correction] = source_decompose(source_part, sig);
    out.el = std::move(el);
    out.theta = theta_hat + correction;
    out.omega = d_v(out.theta);

    if (!(d_v(out.lagrangian) == out.el.as_biform(sig) - d_h(out.theta, sig)))
        throw Defect("lift_and_assemble: dv L = EL - dh(theta) failed to hold");

    for (int a = 0; a < sig.m(); ++a) {
        PolyReduction red = reduce_poly(out.el.coeff(a), sys);
        if (!red.normal.is_zero())
            throw Defect("lift_and_assemble: an Euler-Lagrange coefficient "
                         "does not vanish on the system");
        for (const auto& [key, eps] : red.lam) out.multipliers[key][a] = eps;
    }
    return out;
}

ReconstructionResult reconstruct(const BiForm& omega_hat, const OrthonomicSystem& sys) {
    CompatibilityReport report = check_compatibility(omega_hat, sys);
    if (!report.compatible())
        throw Error("reconstruct: presymplectic current is not compatible with the system");
    DescentPair pair = descend(report.omega_internal, sys);
    ReconstructionResult out = lift_and_assemble(pair.theta_hat, pair.lagr_hat, sys);
    if (!reduce(out.omega - report.omega_internal, sys).normal.is_zero())
        throw Defect("reconstruct: presymplectic current does not restrict to the input");
    return out;
}

} // namespace varbico
