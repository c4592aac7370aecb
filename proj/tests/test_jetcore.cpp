#include "helpers.hpp"

#include "doctest.h"

using namespace varbico;
using namespace varbico::testing;

TEST_CASE("partial derivatives of jet polynomials") {
    JetVar u = jet(0), ut = jv(0, {0}), utt = jv(0, {0, 0});

    CHECK(partial(pv(ut) * pv(ut), VarRef{ut}) == pv(ut).scaled(2));
    CHECK(partial(pv(u) * pv(utt), VarRef{u}) == pv(utt));
    // 2-D: x is independent index 1
    JetVar ux = jv(0, {1});
    CHECK(partial(px(1) * px(1) * pv(ux), VarRef{1}) == px(1).scaled(2) * pv(ux));
    CHECK(partial(pv(u), VarRef{ut}).is_zero());
}

TEST_CASE("total derivatives") {
    JetVar u = jet(0), ut = jv(0, {0}), utt = jv(0, {0, 0});
    CHECK(total_derivative(pv(u), 0) == pv(ut));
    CHECK(total_derivative(pv(u) * pv(ut), 0) == pv(ut) * pv(ut) + pv(u) * pv(utt));

    JetVar utx = jv(0, {0, 1});
    CHECK(total_derivative(px(1) * pv(ut), 1) == pv(ut) + px(1) * pv(utx));
}

TEST_CASE("substitution") {
    JetVar u = jet(0), utt = jv(0, {0, 0}), uxx = jv(0, {1, 1});
    std::map<JetVar, JetPoly> wave_rule{{utt, pv(uxx)}};
    CHECK(substitute(pv(utt) - pv(uxx), wave_rule).is_zero());

    std::map<JetVar, JetPoly> osc_rule{{utt, -pv(u)}};
    CHECK(substitute(pv(u) * pv(utt), osc_rule) == -(pv(u) * pv(u)));

    JetPoly p = pv(u) * pv(utt) + px(0);
    CHECK(substitute(p, {}) == p);
}

TEST_CASE("pullback along polynomial sections") {
    Signature sig1{{"t"}, {"u"}};
    JetVar ut = jv(0, {0});
    // u = t^2: D_t u = 2t
    std::map<int, JetPoly> phi{{0, px(0) * px(0)}};
    CHECK(pullback_section(pv(ut), phi, sig1) == px(0).scaled(2));

    Signature sig2{{"t", "x"}, {"u"}};
    JetVar utt = jv(0, {0, 0}), uxx = jv(0, {1, 1});
    std::map<int, JetPoly> phi2{{0, px(0) * px(0) + px(1) * px(1)}};
    CHECK(pullback_section(pv(utt) - pv(uxx), phi2, sig2).is_zero());

    JetVar u = jet(0), ux = jv(0, {1});
    std::map<int, JetPoly> phi3{{0, px(1)}};
    CHECK(pullback_section(pv(u) * pv(ux), phi3, sig2) == px(1));

    // a section must assign every dependent variable a jet-free polynomial
    Signature sig3{{"t"}, {"u", "v"}};
    CHECK_THROWS_AS(pullback_section(pv(u), {{0, px(0)}}, sig3), Error);
    CHECK_THROWS_AS(pullback_section(pv(u), {{0, pv(ut)}, {1, px(0)}}, sig3), Error);
}

TEST_CASE("jet order") {
    CHECK(jet_order(pv(jv(0, {0, 1, 1}))) == 3);
    CHECK(jet_order(JetPoly(5)) == 0);
    CHECK(jet_order(pv(jet(0)) + pv(jv(0, {0, 0}))) == 2);
}

TEST_CASE("total derivatives commute") {
    Gen gen(11);
    for (int k = 0; k < 60; ++k) {
        JetPoly p = gen.poly(2, 2, 3, 3, 5);
        CHECK(total_derivative(total_derivative(p, 0), 1) ==
              total_derivative(total_derivative(p, 1), 0));
    }
}

TEST_CASE("pullback intertwines total and base derivatives") {
    Signature sig{{"t", "x"}, {"u", "v"}};
    Gen gen(12);
    for (int k = 0; k < 60; ++k) {
        JetPoly p = gen.poly(2, 2, 2, 3, 5);
        std::map<int, JetPoly> phi{{0, gen.poly_in(2, {}, 3, 4)},
                                   {1, gen.poly_in(2, {}, 3, 4)}};
        for (int i = 0; i < 2; ++i) {
            CHECK(pullback_section(total_derivative(p, i), phi, sig) ==
                  partial(pullback_section(p, phi, sig), VarRef{i}));
        }
    }
}

TEST_CASE("derivations are linear and Leibniz") {
    Gen gen(13);
    for (int k = 0; k < 40; ++k) {
        JetPoly p = gen.poly(2, 2, 2, 3, 4);
        JetPoly q = gen.poly(2, 2, 2, 3, 4);
        Rational c = gen.rat();
        JetVar w = gen.jvar(2, 2, 2);
        int i = gen.range(0, 1);

        CHECK(total_derivative(p + q.scaled(c), i) ==
              total_derivative(p, i) + total_derivative(q, i).scaled(c));
        CHECK(total_derivative(p * q, i) ==
              total_derivative(p, i) * q + p * total_derivative(q, i));
        CHECK(partial(p + q.scaled(c), VarRef{w}) ==
              partial(p, VarRef{w}) + partial(q, VarRef{w}).scaled(c));
        CHECK(partial(p * q, VarRef{w}) ==
              partial(p, VarRef{w}) * q + p * partial(q, VarRef{w}));
    }
}

TEST_CASE("canonical form is stable") {
    Gen gen(14);
    for (int k = 0; k < 40; ++k) {
        JetPoly p = gen.poly(2, 2, 3, 3, 6);
        JetPoly rebuilt;
        for (const auto& [m, c] : p.terms()) rebuilt += JetPoly::monomial(c, m);
        CHECK(rebuilt == p);
        CHECK((p - p).is_zero());
        CHECK(p + JetPoly{} == p);
    }
}

TEST_CASE("scale integration matches the Euler scaling degree") {
    // Σ w ∂f/∂w recovers q·f on jet-degree-q monomials, so the homotopy
    // weight must invert q + offset − 1 exactly on the contracted monomial.
    JetVar u = jet(0), ut = jv(0, {0});
    JetPoly f = pv(u) * pv(ut);              // jet degree 2
    CHECK(scale_integrate(f, 1) == f.scaled(Rational(1, 3)));
    CHECK(scale_integrate(JetPoly(4), 2) == JetPoly(2));
}
