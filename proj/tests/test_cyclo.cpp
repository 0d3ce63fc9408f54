#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sieved/cyclo.hpp"

using namespace sieved;

namespace {

std::string poly_str(const std::vector<Rational>& p) {
    std::string s;
    for (const auto& c : p) s += rational_str(c) + " ";
    return s;
}

} // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-1/4") == Rational(-1, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(rational_str(Rational(-2, 6)) == "-1/3");
    CHECK(rational_str(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("0.5"), usage_error);
    CHECK_THROWS_AS(parse_rational("1/0"), usage_error);
    CHECK_THROWS_AS(parse_rational(""), usage_error);
}

TEST_CASE("cyclotomic polynomials for small N") {
    // N=1 -> x - 1, N=2 -> x + 1 by definition.
    CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK(cyclotomic_polynomial(2) == std::vector<Rational>{Rational(1), Rational(1)});
    // N=6 -> x^2 - x + 1, from dividing x^6-1 by Phi_1 Phi_2 Phi_3.
    CHECK(cyclotomic_polynomial(6) ==
          std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});
    CHECK(cyclotomic_polynomial(5).size() == 5);
    CHECK(cyclotomic_polynomial(12).size() == 5); // phi(12) = 4
}

TEST_CASE("cyclotomic polynomial divides x^N - 1 and degrees sum to N") {
    for (unsigned N = 1; N <= 20; ++N) {
        unsigned degree_sum = 0;
        for (unsigned d = 1; d <= N; ++d)
            if (N % d == 0) degree_sum += totient(d);
        CHECK(degree_sum == N);
        // zeta_N^N = 1 checks Phi_N | x^N - 1 at the root.
        CHECK(Cyclo::root_power(N, 1).pow(N) == Cyclo::one(N));
    }
}

TEST_CASE("root powers") {
    CHECK(Cyclo::root_power(2, 1) == Cyclo(2, Rational(-1)));
    CHECK(Cyclo::root_power(4, 1) * Cyclo::root_power(4, 1) == Cyclo(4, Rational(-1)));
    CHECK(Cyclo::root_power(4, 2) == Cyclo(4, Rational(-1)));
    CHECK(Cyclo::root_power(3, 4) == Cyclo::root_power(3, 1)); // exponent mod N
    CHECK(Cyclo::root_power(3, -1) == Cyclo::root_power(3, 2));
    // Sum of the primitive cube roots is -1.
    CHECK(Cyclo::root_power(3, 1) + Cyclo::root_power(3, 2) == Cyclo(3, Rational(-1)));
}

TEST_CASE("field inversion via extended Euclid") {
    // 1/(1 + zeta_4) = (1 - zeta_4)/2, computed modulo x^2 + 1.
    Cyclo a = Cyclo::one(4) + Cyclo::root_power(4, 1);
    Cyclo expected = Rational(1, 2) * (Cyclo::one(4) - Cyclo::root_power(4, 1));
    CHECK(a.inverse() == expected);
    CHECK(a * a.inverse() == Cyclo::one(4));
    CHECK_THROWS_AS(Cyclo::zero(5).inverse(), division_by_zero);
}

TEST_CASE("order mismatch is a usage error") {
    Cyclo a = Cyclo::one(3), b = Cyclo::one(4);
    CHECK_THROWS_AS(a + b, usage_error);
    CHECK_THROWS_AS(a * b, usage_error);
}

TEST_CASE("a / a == 1 for random nonzero elements") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (unsigned N : {3u, 4u, 5u, 7u, 8u, 12u}) {
        for (int trial = 0; trial < 10; ++trial) {
            Cyclo a = Cyclo::zero(N);
            for (unsigned k = 0; k < totient(N); ++k)
                a += Rational(coeff(rng)) * Cyclo::root_power(N, k);
            if (a.is_zero()) continue;
            CHECK(a / a == Cyclo::one(N));
        }
    }
}

TEST_CASE("complex embedding is multiplicative") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (unsigned N : {3u, 5u, 6u, 10u}) {
        for (int trial = 0; trial < 20; ++trial) {
            Cyclo a = Cyclo::zero(N), b = Cyclo::zero(N);
            for (unsigned k = 0; k < totient(N); ++k) {
                a += Rational(coeff(rng)) * Cyclo::root_power(N, k);
                b += Rational(coeff(rng)) * Cyclo::root_power(N, k);
            }
            auto lhs = (a * b).to_complex();
            auto rhs = a.to_complex() * b.to_complex();
            CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_CASE("complex embedding fixed points") {
    CHECK(std::abs(Cyclo::root_power(2, 1).to_complex() -
                   std::complex<double>(-1.0, 0.0)) < 1e-15);
    CHECK(std::abs(Cyclo::root_power(4, 1).to_complex() -
                   std::complex<double>(0.0, 1.0)) < 1e-15);
    Cyclo c = Cyclo::one(3) + Cyclo::root_power(3, 1);
    CHECK(std::abs(c.to_complex() -
                   std::complex<double>(0.5, 0.8660254037844386)) < 1e-12);
}

TEST_CASE("serialization strings") {
    CHECK(Cyclo(2, Rational(1, 2)).str() == "[1/2]");
    CHECK(Cyclo::root_power(4, 1).str() == "[0, 1]");
    INFO(poly_str(cyclotomic_polynomial(6)));
}
