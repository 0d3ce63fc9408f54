#include "sieved/szego.hpp"

namespace sieved {

namespace {

LaurentPoly z_minus_inv(unsigned order) {
    return LaurentPoly::z_pow(order, 1) - LaurentPoly::z_pow(order, -1);
}

LaurentPoly z_plus_inv(unsigned order) {
    return LaurentPoly::z_pow(order, 1) + LaurentPoly::z_pow(order, -1);
}

} // namespace

LaurentPoly PrlFamily::poly(int n) const {
    if (n < 0) throw usage_error("PrlFamily: n must be >= 0");
    const unsigned N = seq_.sieve_order();
    if (kind_ == PrlKind::first) {
        if (n == 0) return LaurentPoly::constant(N, Rational(1));
        Rational c = Rational(1) + seq_.sieved_a(2L * n - 1);
        return seq_.psi(2 * n) + c * seq_.psi(2 * n - 1);
    }
    // Q_n = (psi_{2n+1}(z) - psi_{2n+1}(1/z)) / (z - 1/z); the numerator is
    // antisymmetric, so the division must be exact.
    LaurentPoly top = seq_.psi(2 * n + 1);
    LaurentPoly num = top - top.substitute(Cyclo::one(N), -1);
    return num.divide_exact(z_minus_inv(N));
}

std::vector<Rational> PrlFamily::x_coeffs(int n) const {
    std::vector<Cyclo> coeffs = poly(n).to_x_poly();
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.rational_value());
    return out;
}

std::pair<Rational, Rational> PrlFamily::recurrence_from_formula(int n) const {
    const auto a = [&](long i) { return seq_.sieved_a(i); };
    if (kind_ == PrlKind::first) {
        Rational b = a(2L * n) * (Rational(1) - a(2L * n - 1)) -
                     a(2L * n - 2) * (Rational(1) + a(2L * n - 1));
        Rational u(0);
        if (n >= 1)
            u = (Rational(1) + a(2L * n - 1)) * (Rational(1) - a(2L * n - 3)) *
                (Rational(1) - a(2L * n - 2) * a(2L * n - 2));
        return {b, u};
    }
    Rational b = a(2L * n) * (Rational(1) - a(2L * n + 1)) -
                 a(2L * n + 2) * (Rational(1) + a(2L * n + 1));
    Rational u(0);
    if (n >= 1)
        u = (Rational(1) + a(2L * n - 1)) * (Rational(1) - a(2L * n + 1)) *
            (Rational(1) - a(2L * n) * a(2L * n));
    return {b, u};
}

std::pair<Rational, Rational> PrlFamily::recurrence_from_polys(int n) const {
    const unsigned N = seq_.sieve_order();
    LaurentPoly pn = poly(n);
    LaurentPoly residue = z_plus_inv(N) * pn - poly(n + 1);
    std::vector<Rational> rx(static_cast<std::size_t>(n) + 1, Rational(0));
    {
        auto coeffs = residue.to_x_poly();
        if (coeffs.size() > rx.size())
            throw exactness_error("recurrence residue has degree > n");
        for (std::size_t i = 0; i < coeffs.size(); ++i) rx[i] = coeffs[i].rational_value();
    }
    std::vector<Rational> pnx = x_coeffs(n);
    Rational b = rx[n];
    Rational u(0);
    if (n >= 1) u = rx[n - 1] - b * pnx[n - 1];
    LaurentPoly check = b * pn;
    if (n >= 1) check += u * poly(n - 1);
    if (check != residue)
        throw exactness_error("three-term recurrence is inconsistent");
    return {b, u};
}

Rational ultraspherical_u(PrlKind kind, unsigned N, const Rational& alpha, int n) {
    if (N < 2)
        throw usage_error("ultraspherical_u: N >= 2 required (N=1 is the plain family)");
    if (n < 1) throw usage_error("ultraspherical_u: n must be >= 1");
    const long r = n % static_cast<long>(N);
    if (r == 0) {
        Rational m(n / static_cast<long>(N));
        return Rational(2) * m / (Rational(2) * alpha + Rational(2) * m + 1);
    }
    if (kind == PrlKind::first && r == 1) {
        Rational m((n - 1) / static_cast<long>(N));
        return (Rational(4) * alpha + Rational(2) * m + 2) /
               (Rational(2) * alpha + Rational(2) * m + 1);
    }
    if (kind == PrlKind::second && r == static_cast<long>(N) - 1) {
        Rational m((n + 1) / static_cast<long>(N));
        return (Rational(4) * alpha + Rational(2) * m + 2) /
               (Rational(2) * alpha + Rational(2) * m + 1);
    }
    return Rational(1);
}

bool christoffel_check(const VerblunskySeq& seq, int n) {
    if (n < 1) throw usage_error("christoffel_check: n must be >= 1");
    const unsigned N = seq.sieve_order();
    PrlFamily first(PrlKind::first, seq), second(PrlKind::second, seq);
    const auto a = [&](long i) { return seq.sieved_a(i); };

    LaurentPoly zmi = z_minus_inv(N);
    LaurentPoly lhs = zmi * zmi * second.poly(n - 1);

    Rational c1 = (a(2L * n) + a(2L * n - 2)) * (Rational(1) - a(2L * n - 1));
    Rational c2 = (Rational(1) - a(2L * n - 1)) * (Rational(1) - a(2L * n - 3)) *
                  (Rational(1) - a(2L * n - 2) * a(2L * n - 2));
    LaurentPoly rhs1 = first.poly(n + 1) + c1 * first.poly(n) - c2 * first.poly(n - 1);

    LaurentPoly shift = z_plus_inv(N) + LaurentPoly::constant(N, Rational(2) * a(2L * n - 2));
    Rational c3 = Rational(2) * (Rational(1) - a(2L * n - 3)) *
                  (Rational(1) - a(2L * n - 2) * a(2L * n - 2));
    LaurentPoly rhs2 = shift * first.poly(n) - c3 * first.poly(n - 1);

    return lhs == rhs1 && lhs == rhs2;
}

bool geronimus_check(const VerblunskySeq& seq, int n) {
    if (n < 2) throw usage_error("geronimus_check: n must be >= 2");
    const unsigned N = seq.sieve_order();
    PrlFamily first(PrlKind::first, seq), second(PrlKind::second, seq);
    const auto a = [&](long i) { return seq.sieved_a(i); };

    Rational c1 = (Rational(1) + a(2L * n - 1)) * (a(2L * n) + a(2L * n - 2));
    Rational c2 = (Rational(1) + a(2L * n - 1)) * (Rational(1) + a(2L * n - 3)) *
                  (Rational(1) - a(2L * n - 2) * a(2L * n - 2));
    LaurentPoly rhs = second.poly(n) - c1 * second.poly(n - 1) - c2 * second.poly(n - 2);
    if (first.poly(n) != rhs) return false;

    // Inverse map round trip.
    LaurentPoly zmi = z_minus_inv(N);
    LaurentPoly pn = first.poly(n), qn1 = second.poly(n - 1);
    LaurentPoly psi_odd = Rational(1, 2) * (pn + zmi * qn1);
    LaurentPoly psi_even = Rational(1, 2) * ((Rational(1) - a(2L * n - 1)) * pn -
                                             (Rational(1) + a(2L * n - 1)) * (zmi * qn1));
    return psi_odd == seq.psi(2 * n - 1) && psi_even == seq.psi(2 * n);
}

} // namespace sieved
