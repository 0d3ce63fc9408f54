#ifndef SIEVED_OPUC_HPP
#define SIEVED_OPUC_HPP

#include <vector>

#include "sieved/laurent.hpp"

namespace sieved {

struct CheckEntry {
    int n = 0;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::string name;
    std::vector<CheckEntry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

// Sieved Jacobi Verblunsky sequence a_n(N) together with the memoized Szego
// recursion. The a_{-1} = -1 convention is built in. Single writer while a
// prefix is being materialized; read-only use is safe afterwards.
class VerblunskySeq {
  public:
    VerblunskySeq(const Rational& alpha, const Rational& beta, unsigned sieve_order);

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    unsigned sieve_order() const { return N_; }

    // Unsieved a_n; n >= -1, with a_{-1} = -1.
    Rational jacobi_a(long n) const;

    // Sieved a_n(N); a_{k-1} when n = Nk-1, 0 otherwise. n = -1 gives -1.
    Rational sieved_a(long n) const;

    // Monic Phi_n(z;N) as an ordinary polynomial, ascending rational coeffs.
    const std::vector<Rational>& phi_coeffs(int n) const;

    // Phi_n(z;N) lifted into Q(zeta_field_order)[z, 1/z].
    LaurentPoly phi(int n, unsigned field_order) const;
    LaurentPoly phi(int n) const { return phi(n, N_); }

    // CMV Laurent polynomial psi_n(z;N).
    LaurentPoly psi(int n, unsigned field_order) const;
    LaurentPoly psi(int n) const { return psi(n, N_); }

    // h_n = prod_{j<n} (1 - a_j(N)^2).
    Rational h_norm(int n) const;

    // |a_n(N)| < 1 over 0..n_max.
    bool validate_parameters(int n_max) const;

  private:
    Rational alpha_, beta_;
    unsigned N_;
    mutable std::vector<std::vector<Rational>> phi_cache_;
};

// Phi_n(z;N) = z^j Phi_k(z^N;1) with n = Nk + j, checked exactly per degree.
CheckReport check_factorization(const VerblunskySeq& seq, int n_max);

// The three parity-case relations between psi_n(z;N) and psi_k(z^{+-N};1).
CheckReport check_psi_parity_relations(const VerblunskySeq& seq, int n_max);

} // namespace sieved

#endif
