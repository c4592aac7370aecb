#pragma once

#include "varbico/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace varbico {

/// Bi-degree (horizontal, vertical) of a homogeneous form.
struct Grading {
    int h = 0;
    int v = 0;
    bool operator==(const Grading&) const = default;
    auto operator<=>(const Grading&) const = default;
};

/// Generator word of one term: dx factors (strictly increasing independent
/// indices) followed by dv factors (strictly increasing jet variables).
struct GenWord {
    std::vector<int> hgen;
    std::vector<JetVar> vgen;

    Grading grading() const {
        return {static_cast<int>(hgen.size()), static_cast<int>(vgen.size())};
    }
    auto operator<=>(const GenWord&) const = default;
};

/// Element of the variational bicomplex: a canonical sum of terms
/// coefficient-polynomial × generator word. Mixed gradings are allowed;
/// homogeneous components can be extracted.
class BiForm {
public:
    BiForm() = default;
    BiForm(const JetPoly& scalar); // (0,0) form
    BiForm(int scalar) : BiForm(JetPoly(scalar)) {}

    /// dx^i as a (1,0) form.
    static BiForm dx(int i);
    /// dv u^a_I as a (0,1) form.
    static BiForm dv_gen(const JetVar& v);
    /// Single term: raw generator list in the given order; canonicalized
    /// with sign bookkeeping (zero if a generator repeats).
    static BiForm term(const JetPoly& coeff, const std::vector<int>& hgens,
                       const std::vector<JetVar>& vgens);

    bool is_zero() const { return terms_.empty(); }

    BiForm operator-() const;
    BiForm operator+(const BiForm& other) const;
    BiForm operator-(const BiForm& other) const;
    BiForm& operator+=(const BiForm& other);
    BiForm& operator-=(const BiForm& other);
    BiForm scaled(const Rational& c) const;

    bool operator==(const BiForm& other) const = default;

    const std::map<GenWord, JetPoly>& terms() const { return terms_; }

    /// The common grading if the form is homogeneous; nullopt for genuinely
    /// mixed forms. The zero form reports grading {0,0} via is_homogeneous.
    std::optional<Grading> grading() const;
    bool is_homogeneous(const Grading& g) const;

    int jet_order() const;

private:
    friend BiForm wedge(const BiForm&, const BiForm&);
    friend BiForm d_h(const BiForm&, const Signature&);
    friend BiForm d_v(const BiForm&);
    friend BiForm vertical_homotopy(const BiForm&);
    void insert(const GenWord& w, const JetPoly& coeff);
    std::map<GenWord, JetPoly> terms_;
};

/// Graded-commutative wedge product.
BiForm wedge(const BiForm& a, const BiForm& b);

/// Horizontal differential: dh f = Σ_i (D_i f) dx^i, dh dx^i = 0,
/// dh dv u^a_I = Σ_i dx^i ∧ dv u^a_{I+i}, extended as a (1,0) derivation.
BiForm d_h(const BiForm& a, const Signature& sig);

/// Vertical differential: dv f = Σ (∂f/∂u^a_I) dv u^a_I, generators closed,
/// extended as a (0,1) derivation.
BiForm d_v(const BiForm& a);

/// Fiber-scaling homotopy for the vertical complex; defined on forms all of
/// whose terms have vertical degree ≥ 1 and satisfies dv∘h + h∘dv = id on
/// homogeneous vertical degree.
BiForm vertical_homotopy(const BiForm& a);

/// Sum of the terms with grading g.
BiForm homogeneous_part(const BiForm& a, const Grading& g);

/// Volume form dx^1 ∧ ... ∧ dx^n.
BiForm volume_form(const Signature& sig);

} // namespace varbico
