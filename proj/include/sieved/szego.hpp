#ifndef SIEVED_SZEGO_HPP
#define SIEVED_SZEGO_HPP

#include "sieved/opuc.hpp"

namespace sieved {

enum class PrlKind { first, second };

// Real-line families P_n (first kind) and Q_n (second kind) built from the
// CMV polynomials through the Szego map x = z + 1/z. The z-form is primary;
// x-coefficients are extracted on demand.
class PrlFamily {
  public:
    PrlFamily(PrlKind kind, const VerblunskySeq& seq) : kind_(kind), seq_(seq) {}

    PrlKind kind() const { return kind_; }
    const VerblunskySeq& seq() const { return seq_; }

    // P_n or Q_n as a symmetric Laurent polynomial in z.
    LaurentPoly poly(int n) const;

    // Ascending coefficients in x = z + 1/z; monic of degree n.
    std::vector<Rational> x_coeffs(int n) const;

    // Closed forms u_n, b_n (or the tilde pair) on the sieved sequence,
    // honoring a_{-1} = -1. Returns (b_n, u_n); u_0 is not defined and
    // reported as 0.
    std::pair<Rational, Rational> recurrence_from_formula(int n) const;

    // Independent oracle: solves x*p_n = p_{n+1} + b p_n + u p_{n-1} using the
    // stored polynomials; throws exactness_error on an inconsistent system.
    std::pair<Rational, Rational> recurrence_from_polys(int n) const;

  private:
    PrlKind kind_;
    const VerblunskySeq& seq_;
};

// Sieved ultraspherical closed forms (alpha = beta required).
Rational ultraspherical_u(PrlKind kind, unsigned N, const Rational& alpha, int n);

// Both displayed double-Christoffel identities relating (z-1/z)^2 Q_{n-1}
// to P_{n+1}, P_n, P_{n-1}; n >= 1.
bool christoffel_check(const VerblunskySeq& seq, int n);

// Geronimus identity P_n = Q_n - ... Q_{n-1} - ... Q_{n-2} (n >= 2) plus the
// inverse-map round trip reconstructing psi_{2n-1}, psi_{2n} from P_n, Q_{n-1}.
bool geronimus_check(const VerblunskySeq& seq, int n);

} // namespace sieved

#endif
