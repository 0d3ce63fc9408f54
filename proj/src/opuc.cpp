#include "sieved/opuc.hpp"

namespace sieved {

VerblunskySeq::VerblunskySeq(const Rational& alpha, const Rational& beta, unsigned sieve_order)
    : alpha_(alpha), beta_(beta), N_(sieve_order) {
    if (N_ == 0) throw usage_error("sieve order N must be positive");
    if (alpha_ <= -1 || beta_ <= -1)
        throw usage_error("alpha and beta must both exceed -1");
    phi_cache_.push_back({Rational(1)}); // Phi_0 = 1
}

Rational VerblunskySeq::jacobi_a(long n) const {
    if (n == -1) return Rational(-1);
    if (n < -1) throw usage_error("jacobi_a: n must be >= -1");
    Rational sign = (n % 2 == 0) ? Rational(-1) : Rational(1); // (-1)^{n+1}
    Rational numer = alpha_ + Rational(1, 2) + sign * (beta_ + Rational(1, 2));
    return -numer / (Rational(n) + alpha_ + beta_ + 2);
}

Rational VerblunskySeq::sieved_a(long n) const {
    if (n == -1) return Rational(-1);
    if (n < -1) return Rational(0); // only reachable through vanishing prefactors
    if ((n + 1) % static_cast<long>(N_) != 0) return Rational(0);
    return jacobi_a((n + 1) / static_cast<long>(N_) - 1);
}

const std::vector<Rational>& VerblunskySeq::phi_coeffs(int n) const {
    if (n < 0) throw usage_error("phi: n must be >= 0");
    while (static_cast<int>(phi_cache_.size()) <= n) {
        const std::vector<Rational>& prev = phi_cache_.back();
        long m = static_cast<long>(phi_cache_.size()) - 1;
        Rational a = sieved_a(m);
        // Phi_{m+1} = z Phi_m - a_m(N) Phi_m^*
        std::vector<Rational> next(prev.size() + 1, Rational(0));
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i + 1] += prev[i];
            next[i] -= a * prev[prev.size() - 1 - i];
        }
        phi_cache_.push_back(std::move(next));
    }
    return phi_cache_[n];
}

LaurentPoly VerblunskySeq::phi(int n, unsigned field_order) const {
    const auto& coeffs = phi_coeffs(n);
    LaurentPoly f(field_order);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        f.set_coeff(static_cast<int>(i), Cyclo(field_order, coeffs[i]));
    return f;
}

LaurentPoly VerblunskySeq::psi(int n, unsigned field_order) const {
    if (n < 0) throw usage_error("psi: n must be >= 0");
    LaurentPoly p = phi(n, field_order);
    if (n % 2 == 0) {
        // psi_{2m} = z^m Phi_{2m}(1/z)
        int m = n / 2;
        return p.substitute(Cyclo::one(field_order), -1) * LaurentPoly::z_pow(field_order, m);
    }
    // psi_{2m+1} = z^{-m} Phi_{2m+1}(z)
    int m = (n - 1) / 2;
    return p * LaurentPoly::z_pow(field_order, -m);
}

Rational VerblunskySeq::h_norm(int n) const {
    if (n < 0) throw usage_error("h_norm: n must be >= 0");
    Rational h(1);
    for (int j = 0; j < n; ++j) {
        Rational a = sieved_a(j);
        h *= (Rational(1) - a * a);
    }
    return h;
}

bool VerblunskySeq::validate_parameters(int n_max) const {
    for (int n = 0; n <= n_max; ++n) {
        Rational a = sieved_a(n);
        if (a >= 1 || a <= -1) return false;
    }
    return true;
}

CheckReport check_factorization(const VerblunskySeq& seq, int n_max) {
    CheckReport report{"phi-factorization", {}};
    const unsigned N = seq.sieve_order();
    VerblunskySeq base(seq.alpha(), seq.beta(), 1);
    for (int n = 0; n <= n_max; ++n) {
        int k = n / static_cast<int>(N), j = n % static_cast<int>(N);
        LaurentPoly rhs =
            base.phi(k, N).power_substitute(static_cast<int>(N)) * LaurentPoly::z_pow(N, j);
        bool pass = (seq.phi(n) == rhs);
        report.entries.push_back({n, pass, pass ? "" : "Phi_n(z;N) != z^j Phi_k(z^N;1)"});
    }
    return report;
}

CheckReport check_psi_parity_relations(const VerblunskySeq& seq, int n_max) {
    CheckReport report{"psi-parity-relations", {}};
    const int N = static_cast<int>(seq.sieve_order());
    VerblunskySeq base(seq.alpha(), seq.beta(), 1);
    for (int n = 0; n <= n_max; ++n) {
        int k = n / N, j = n % N;
        // The prefactor exponent and the sign of the inner power follow from
        // expanding psi through Phi_n(z;N) = z^j Phi_k(z^N;1); the case split
        // is by the parities of n and k.
        int power = 0;  // exponent of the monomial prefactor
        int branch = 0; // +N or -N inside psi_k
        if (n % 2 == 0 && k % 2 == 0) {
            power = -j / 2;
            branch = N;
        } else if (n % 2 == 0) {
            power = (N - j) / 2;
            branch = -N;
        } else if (k % 2 == 0) {
            power = (j + 1) / 2;
            branch = -N;
        } else {
            power = (-N + j + 1) / 2;
            branch = N;
        }
        LaurentPoly rhs = base.psi(k, seq.sieve_order()).power_substitute(branch) *
                          LaurentPoly::z_pow(seq.sieve_order(), power);
        bool pass = (seq.psi(n) == rhs);
        report.entries.push_back({n, pass, pass ? "" : "psi parity case mismatch"});
    }
    return report;
}

} // namespace sieved
