#pragma once

#include "varbico/biform.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace varbico {

/// One solved equation u^a_I -> rhs.
struct Rule {
    JetVar lead;
    JetPoly rhs;
};

class OrthonomicSystem;

/// Splits jet variables into principal (a derivative of some lead, leads
/// included) and parametric (free coordinates of the prolonged equation
/// manifold).
class PrincipalClassifier {
public:
    explicit PrincipalClassifier(const OrthonomicSystem& sys);

    bool is_principal(const JetVar& v) const { return classify(v).has_value(); }
    /// Rule index B and prolongation J with v = lead_B + J; lowest B wins
    /// when several leads divide v.
    std::optional<std::pair<int, MultiIndex>> classify(const JetVar& v) const;

private:
    std::vector<JetVar> leads_;
};

/// PDE system in solved form: distinct leads, none a derivative of another,
/// right-hand sides fully reduced (parametric jets only).
class OrthonomicSystem {
public:
    static OrthonomicSystem make(Signature sig, std::vector<Rule> rules);

    const Signature& signature() const { return sig_; }
    const std::vector<Rule>& rules() const { return rules_; }
    int order() const;

    const PrincipalClassifier& classifier() const { return classifier_; }
    bool is_principal(const JetVar& v) const { return classifier_.is_principal(v); }

    /// Prolonged equation polynomial f_{JB} = u^{lead_B}_{I_B+J} − D_J rhs_B.
    JetPoly prolonged_equation(int rule, const MultiIndex& J) const;

private:
    OrthonomicSystem(Signature sig, std::vector<Rule> rules);
    Signature sig_;
    std::vector<Rule> rules_;
    PrincipalClassifier classifier_;
};

struct IntegrabilityWitness {
    int rule_a = 0;
    int rule_b = 0;
    JetVar common;
    JetPoly difference;
};

struct IntegrabilityReport {
    bool pass = false;
    std::optional<IntegrabilityWitness> witness;
};

/// Cross-derivative consistency up to `depth` extra indices beyond each
/// least common derivative of a pair of leads.
IntegrabilityReport check_integrability(const OrthonomicSystem& sys, int depth);

/// Key of a prolonged equation: (prolongation multi-index, rule index).
struct ProlongedRule {
    MultiIndex J;
    int rule = 0;
    auto operator<=>(const ProlongedRule&) const = default;
};

/// input = normal + Σ f_{JB}·λ^{JB} + Σ dv f_{JB} ∧ μ^{JB}, identically.
struct ReductionCertificate {
    BiForm normal;
    std::map<ProlongedRule, BiForm> lam;
    std::map<ProlongedRule, BiForm> mu;
};

/// Rewrites every principal jet (in coefficients and in contact generators)
/// by the prolonged rules, recording ideal multipliers. The normal form
/// contains parametric jets only.
ReductionCertificate reduce(const BiForm& a, const OrthonomicSystem& sys);

/// Coefficient-level reduction of a single polynomial.
struct PolyReduction {
    JetPoly normal;
    std::map<ProlongedRule, JetPoly> lam;
};
PolyReduction reduce_poly(const JetPoly& p, const OrthonomicSystem& sys);

/// Rebuilds the input from a certificate (test oracle for the identity).
BiForm reassemble(const ReductionCertificate& cert, const OrthonomicSystem& sys);

/// True iff a references parametric jets only.
bool is_internal(const BiForm& a, const OrthonomicSystem& sys);

/// dh followed by reduction to the normal form; input must be internal.
BiForm onshell_dh(const BiForm& a, const OrthonomicSystem& sys);

/// Vertical differential on internal forms (acts freely on parametric jets).
BiForm onshell_dv(const BiForm& a, const OrthonomicSystem& sys);

} // namespace varbico
