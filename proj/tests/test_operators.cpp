#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sieved/operators.hpp"

using namespace sieved;

namespace {

Rational half() { return Rational(1, 2); }

} // namespace

TEST_CASE("K on monomials matches the N=1 spectrum") {
    Rational alpha(1, 3), beta(-1, 4);
    CircleOperator K = build_K(alpha, beta);
    CircleOperator L1 = build_L(1, alpha, beta);
    for (int e = -4; e <= 4; ++e) {
        LaurentPoly zn = LaurentPoly::z_pow(1, e);
        RationalLaurent kz = K.apply(RationalLaurent(zn));
        CHECK(kz == L1.apply(RationalLaurent(zn)));
    }
    // K z^{-1} = -z^{-1} - (alpha+beta+1) z - (alpha-beta): work it by hand
    // from z d/dz + G(z)(R0 - I), where G(z)(z - 1/z) = -((alpha+beta+1) z + alpha-beta).
    LaurentPoly f = LaurentPoly::z_pow(1, -1);
    LaurentPoly expect = -LaurentPoly::z_pow(1, -1) -
                         (alpha + beta + 1) * LaurentPoly::z_pow(1, 1) -
                         LaurentPoly::constant(1, alpha - beta);
    CHECK(K.apply_poly(f) == expect);
}

TEST_CASE("psi_n are eigenfunctions of L(N)") {
    CHECK(eigenvalue_lambda(4, 2, Rational(0), Rational(0)) == Rational(-2));
    for (unsigned N : {1u, 2u, 3u}) {
        EigenReport r = eigencheck_psi(N, half(), Rational(1, 4), 12);
        CHECK(r.all_pass());
        REQUIRE(r.entries.size() == 13);
        for (const auto& e : r.entries)
            CHECK(e.eigenvalue == eigenvalue_lambda(e.n, N, half(), Rational(1, 4)));
    }
}

TEST_CASE("worked example: L(2) psi_4 = -2 psi_4 at alpha = beta = 0") {
    VerblunskySeq seq(Rational(0), Rational(0), 2);
    LaurentPoly psi4 = seq.psi(4);
    CircleOperator L = build_L(2, Rational(0), Rational(0));
    LaurentPoly lp = L.apply_poly(psi4);
    CHECK(lp == Rational(-2) * psi4);
}

TEST_CASE("the B-form of L agrees with the reflection form") {
    Rational alpha(3, 2), beta(1, 2);
    for (unsigned N : {2u, 3u, 4u}) {
        CircleOperator a = build_L(N, alpha, beta);
        CircleOperator b = build_L_bform(N, alpha, beta);
        VerblunskySeq seq(alpha, beta, N);
        for (int n = 0; n <= 8; ++n) {
            LaurentPoly psi = seq.psi(n);
            CHECK(a.apply_poly(psi) == b.apply_poly(psi));
        }
        // also on a plain monomial, which is not an eigenfunction
        LaurentPoly zn = LaurentPoly::z_pow(N, 3);
        CHECK(a.apply(RationalLaurent(zn)) == b.apply(RationalLaurent(zn)));
    }
}

TEST_CASE("H(2) P_1 = 3 P_1 and the Lambda spectrum") {
    CHECK(eigenvalue_Lambda(1, 2, Rational(0), Rational(0)) == Rational(3));
    VerblunskySeq seq(Rational(0), Rational(0), 2);
    PrlFamily fam(PrlKind::first, seq);
    CircleOperator L = build_L(2, Rational(0), Rational(0));
    LaurentPoly p1 = fam.poly(1);
    CHECK(apply_H_composed(L, 2, Rational(0), Rational(0), p1) == Rational(3) * p1);

    for (unsigned N : {1u, 2u, 3u}) {
        CHECK(eigencheck_P(N, Rational(1, 3), Rational(-1, 4), 10).all_pass());
        CHECK(eigencheck_Q(N, Rational(1, 3), Rational(-1, 4), 10).all_pass());
    }
}

TEST_CASE("explicit H matches the composed route, both substitution forms") {
    Rational alpha(1, 2), beta(1, 4);
    for (unsigned N : {2u, 3u}) {
        CircleOperator L = build_L(N, alpha, beta);
        CircleOperator h_refl = build_H_explicit(N, alpha, beta, HForm::reflection);
        CircleOperator h_rot = build_H_explicit(N, alpha, beta, HForm::rotation);
        for (int e = -6; e <= 6; ++e) {
            LaurentPoly f = LaurentPoly::z_pow(N, e) + LaurentPoly::z_pow(N, -e);
            LaurentPoly composed = apply_H_composed(L, N, alpha, beta, f);
            CHECK(h_refl.apply_poly(f) == composed);
            CHECK(h_rot.apply_poly(f) == composed);
        }
    }
}

TEST_CASE("ultraspherical Q eigencheck and Xi spectrum") {
    CHECK(eigenvalue_Xi(1, 2, Rational(0)) == Rational(5));
    for (unsigned N : {2u, 3u}) {
        CHECK(eigencheck_ultraspherical_Q(N, Rational(0), 8).all_pass());
        CHECK(eigencheck_ultraspherical_Q(N, half(), 8).all_pass());
    }
}

TEST_CASE("root-of-unity sum identities") {
    for (unsigned N = 1; N <= 6; ++N)
        for (unsigned h = 0; h < N; ++h) CHECK(verify_sum_general(N, h));
    for (unsigned N = 1; N <= 6; ++N) {
        for (unsigned j = 0; j < N; j += 2) CHECK(verify_sum_first(N, j));
        for (unsigned j = N % 2; j < N; j += 2) CHECK(verify_sum_second(N, j));
    }
    CHECK_THROWS_AS(verify_sum_first(4, 1), usage_error);
    CHECK_THROWS_AS(verify_sum_second(4, 1), usage_error);
    CHECK_THROWS_AS(verify_sum_general(3, 3), usage_error);
}

TEST_CASE("E_k vanishes and B satisfies the reflection identity") {
    for (unsigned N = 1; N <= 5; ++N) {
        CHECK(verify_Ek_zero(N, Rational(1, 3), Rational(-1, 4)));
        CHECK(verify_B_identity(N, Rational(1, 3), Rational(-1, 4)));
    }
}

TEST_CASE("reflections equal rotations on symmetric functions only") {
    for (unsigned N : {2u, 3u, 5u}) CHECK(verify_reflection_rotation_equivalence(N, 10));
    // witness: on the asymmetric z, R_1 and T_{-1} differ when q^2 != 1
    LaurentPoly z = LaurentPoly::z_pow(3, 1);
    Cyclo q = Cyclo::root_power(3, 1);
    Cyclo qi = Cyclo::root_power(3, -1);
    CHECK(z.substitute(q, -1) != z.substitute(qi, 1));
}

TEST_CASE("operators are linear") {
    CircleOperator L = build_L(3, Rational(1, 2), Rational(1, 4));
    LaurentPoly f = LaurentPoly::z_pow(3, 4) + LaurentPoly::z_pow(3, -2);
    LaurentPoly g = LaurentPoly::z_pow(3, 1);
    RationalLaurent lhs = L.apply(RationalLaurent(f + Rational(7, 3) * g));
    RationalLaurent rhs =
        L.apply(RationalLaurent(f)) + L.apply(RationalLaurent(g)).scaled(Rational(7, 3));
    CHECK(lhs == rhs);
}

TEST_CASE("mu and lambda agree at N = 1 and differ in the odd branch otherwise") {
    Rational a(1, 3), b(-1, 4);
    for (int n = 0; n <= 9; ++n) CHECK(eigenvalue_mu(n, a, b) == eigenvalue_lambda(n, 1, a, b));
    CHECK(eigenvalue_lambda(3, 4, a, b) == Rational(2) + Rational(4) * (a + b + 1));
    // Lambda_n = lambda^2 - N(a+b+1) lambda for both lambda_{2n} and lambda_{2n-1}
    const Rational c = Rational(3) * (a + b + 1);
    for (int n = 1; n <= 6; ++n) {
        Rational le = eigenvalue_lambda(2 * n, 3, a, b);
        Rational lo = eigenvalue_lambda(2 * n - 1, 3, a, b);
        CHECK(eigenvalue_Lambda(n, 3, a, b) == le * le - c * le);
        CHECK(eigenvalue_Lambda(n, 3, a, b) == lo * lo - c * lo);
    }
}
