#pragma once

#include "varbico/jets.hpp"
#include "varbico/rational.hpp"
#include "varbico/signature.hpp"

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace varbico {

/// A power product of base variables x^i and jet variables u^a_I.
/// Factors are kept sorted; exponents are strictly positive.
class Monomial {
public:
    Monomial() = default;

    static Monomial base_var(int i);
    static Monomial jet_var(const JetVar& v);

    Monomial times(const Monomial& other) const;

    int total_degree() const;
    int jet_degree() const; // sum of jet-variable exponents
    int jet_order() const;  // max |I| over jet factors, 0 if none

    bool is_constant() const { return base_.empty() && jets_.empty(); }

    const std::vector<std::pair<int, int>>& base_powers() const { return base_; }
    const std::vector<std::pair<JetVar, int>>& jet_powers() const { return jets_; }

    int base_exponent(int i) const;
    int jet_exponent(const JetVar& v) const;

    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial& other) const = default;

private:
    friend class JetPoly;
    std::vector<std::pair<int, int>> base_;     // (indep index, exponent)
    std::vector<std::pair<JetVar, int>> jets_;  // (jet var, exponent)
};

/// Reference to a coordinate of J^∞F: either a base variable or a jet variable.
using VarRef = std::variant<int, JetVar>;

/// Polynomial with exact rational coefficients in the variables
/// {x^i} ∪ {u^a_I}, kept in canonical form (sorted monomials, no zeros).
class JetPoly {
public:
    JetPoly() = default;
    JetPoly(int value) : JetPoly(Rational(value)) {}
    explicit JetPoly(const Rational& value);

    static JetPoly base_var(int i);
    static JetPoly jet_var(const JetVar& v);
    static JetPoly monomial(const Rational& coeff, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The rational value if the polynomial is constant.
    std::optional<Rational> constant_value() const;

    JetPoly operator-() const;
    JetPoly operator+(const JetPoly& other) const;
    JetPoly operator-(const JetPoly& other) const;
    JetPoly operator*(const JetPoly& other) const;
    JetPoly& operator+=(const JetPoly& other);
    JetPoly& operator-=(const JetPoly& other);

    JetPoly scaled(const Rational& c) const;
    JetPoly pow(int e) const;

    bool operator==(const JetPoly& other) const = default;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    /// All distinct jet variables occurring.
    std::vector<JetVar> jet_vars() const;

    int degree() const;     // total degree, 0 for the zero polynomial
    bool has_jets() const;

private:
    void insert(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

/// Formal partial derivative ∂p/∂v for a coordinate v of J^∞F.
JetPoly partial(const JetPoly& p, const VarRef& v);

/// Total derivative D_i p = ∂p/∂x^i + Σ u^a_{I+i} ∂p/∂u^a_I.
JetPoly total_derivative(const JetPoly& p, int i);

/// Iterated total derivative D_J.
JetPoly total_derivative(const JetPoly& p, const MultiIndex& J);

/// Simultaneous substitution of jet variables, then canonicalization.
JetPoly substitute(const JetPoly& p, const std::map<JetVar, JetPoly>& rules);

/// Pullback along the ∞-jet prolongation of a polynomial section φ:
/// u^a_I ↦ ∂_I φ^a. Every dependent variable of sig must be assigned a
/// jet-free polynomial. The result is a polynomial in base variables only.
JetPoly pullback_section(const JetPoly& p, const std::map<int, JetPoly>& phi,
                         const Signature& sig);

/// Max |I| over occurring jet variables, 0 if the polynomial is jet-free.
int jet_order(const JetPoly& p);

/// Scale integration of the fiber homotopy: each monomial of jet-degree q
/// is divided by (offset + q).
JetPoly scale_integrate(const JetPoly& p, int offset);

/// p with every jet variable sent to zero.
JetPoly eval_jets_zero(const JetPoly& p);

} // namespace varbico
