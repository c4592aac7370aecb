#include "helpers.hpp"

#include "doctest.h"

using namespace varbico;
using namespace varbico::testing;

namespace {
const Signature sig2{{"t", "x"}, {"u", "v"}};
}

TEST_CASE("wedge basics") {
    JetVar u = jet(0), ut = jv(0, {0});
    CHECK(wedge(BiForm::dx(0), BiForm::dx(0)).is_zero());
    CHECK(wedge(BiForm::dv_gen(ut), BiForm::dv_gen(u)) ==
          -wedge(BiForm::dv_gen(u), BiForm::dv_gen(ut)));
    BiForm lhs = wedge(wedge(BiForm(pv(u)), BiForm::dx(0)), BiForm::dv_gen(u));
    CHECK(lhs == BiForm::term(pv(u), {0}, {u}));
}

TEST_CASE("horizontal differential") {
    JetVar u = jet(0), ut = jv(0, {0}), ux = jv(0, {1});
    CHECK(d_h(BiForm(pv(u)), sig2) ==
          wedge(BiForm(pv(ut)), BiForm::dx(0)) + wedge(BiForm(pv(ux)), BiForm::dx(1)));
    CHECK(d_h(BiForm::dv_gen(u), sig2) ==
          wedge(BiForm::dx(0), BiForm::dv_gen(ut)) + wedge(BiForm::dx(1), BiForm::dv_gen(ux)));
    CHECK(d_h(d_h(BiForm(pv(u) * pv(ux)), sig2), sig2).is_zero());
}

TEST_CASE("vertical differential") {
    JetVar u = jet(0), ut = jv(0, {0});
    CHECK(d_v(BiForm(half() * pv(ut) * pv(ut))) == wedge(BiForm(pv(ut)), BiForm::dv_gen(ut)));
    CHECK(d_v(d_v(BiForm(pv(u) * pv(ut)))).is_zero());
    CHECK(d_v(wedge(BiForm(px(1)), BiForm::dx(0))).is_zero());
}

TEST_CASE("vertical homotopy inverts the vertical differential") {
    JetVar u = jet(0), ut = jv(0, {0});
    BiForm a = wedge(BiForm::dv_gen(ut), BiForm::dv_gen(u));
    BiForm h = vertical_homotopy(a);
    BiForm expected = wedge(BiForm(pv(ut)), BiForm::dv_gen(u)).scaled(Rational(1, 2)) -
                      wedge(BiForm(pv(u)), BiForm::dv_gen(ut)).scaled(Rational(1, 2));
    CHECK(h == expected);
    CHECK(d_v(h) == a); // dv-closed input, so h alone inverts dv

    CHECK(vertical_homotopy(BiForm::dv_gen(u)) == BiForm(pv(u)));
    CHECK(vertical_homotopy(wedge(BiForm(pv(u)), BiForm::dv_gen(u))) ==
          BiForm(half() * pv(u) * pv(u)));

    CHECK_THROWS_AS(vertical_homotopy(BiForm(pv(u))), Error);
}

TEST_CASE("homogeneous parts") {
    JetVar u = jet(0);
    BiForm a = wedge(BiForm(pv(u)), BiForm::dx(0)) + BiForm::dv_gen(u);
    CHECK(homogeneous_part(a, {1, 0}) == wedge(BiForm(pv(u)), BiForm::dx(0)));
    CHECK(homogeneous_part(a, {0, 1}) == BiForm::dv_gen(u));
    CHECK(homogeneous_part(a, {1, 1}).is_zero());
    CHECK(!a.grading().has_value());
}

TEST_CASE("bicomplex identities on random forms") {
    Gen gen(21);
    for (int k = 0; k < 80; ++k) {
        BiForm a = gen.mixed_form(sig2, 3, 3, 3, 2);
        CHECK(d_h(d_h(a, sig2), sig2).is_zero());
        CHECK(d_v(d_v(a)).is_zero());
        CHECK((d_h(d_v(a), sig2) + d_v(d_h(a, sig2))).is_zero());
        BiForm d = d_h(a, sig2) + d_v(a);
        CHECK((d_h(d, sig2) + d_v(d)).is_zero());
    }
}

TEST_CASE("homotopy identity on homogeneous vertical degree") {
    Gen gen(22);
    for (int k = 0; k < 60; ++k) {
        int v = gen.range(1, 3);
        int h = gen.range(0, 2);
        BiForm a = gen.form(sig2, {h, v}, 3, 3, 3);
        if (a.is_zero()) continue;
        CHECK(d_v(vertical_homotopy(a)) + vertical_homotopy(d_v(a)) == a);
    }
}

TEST_CASE("homotopy of dv of a coefficient function") {
    Gen gen(23);
    for (int k = 0; k < 40; ++k) {
        JetPoly f = gen.poly(2, 2, 3, 3, 5);
        BiForm df = d_v(BiForm(f));
        BiForm recovered = df.is_zero() ? BiForm{} : vertical_homotopy(df);
        CHECK(recovered == BiForm(f - eval_jets_zero(f)));
    }
}

TEST_CASE("wedge graded commutativity") {
    Gen gen(24);
    for (int k = 0; k < 60; ++k) {
        Grading ga{gen.range(0, 2), gen.range(0, 2)};
        Grading gb{gen.range(0, 2), gen.range(0, 2)};
        BiForm a = gen.form(sig2, ga, 2, 2, 2);
        BiForm b = gen.form(sig2, gb, 2, 2, 2);
        int sign = ((ga.h + ga.v) * (gb.h + gb.v)) % 2 == 0 ? 1 : -1;
        BiForm rhs = wedge(b, a);
        CHECK(wedge(a, b) == (sign > 0 ? rhs : -rhs));
    }
}

TEST_CASE("wedge associativity") {
    Gen gen(25);
    for (int k = 0; k < 40; ++k) {
        BiForm a = gen.mixed_form(sig2, 2, 2, 2, 2);
        BiForm b = gen.mixed_form(sig2, 2, 2, 2, 2);
        BiForm c = gen.mixed_form(sig2, 2, 2, 2, 2);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
}
