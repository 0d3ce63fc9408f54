#ifndef SIEVED_OPERATORS_HPP
#define SIEVED_OPERATORS_HPP

#include "sieved/szego.hpp"

namespace sieved {

// Substitution part of an operator atom: z, q^k/z, or q^k z.
struct Substitution {
    enum class Kind { identity, reflect, rotate };
    Kind kind = Kind::identity;
    long k = 0;

    static Substitution identity() { return {Kind::identity, 0}; }
    static Substitution reflect(long k) { return {Kind::reflect, k}; }
    static Substitution rotate(long k) { return {Kind::rotate, k}; }
};

// Finite sum of atoms coeff(z) * (d^deriv f)(sigma(z)). Linear by
// construction; immutable after building.
class CircleOperator {
  public:
    explicit CircleOperator(unsigned order) : order_(order) {}

    unsigned order() const { return order_; }

    void add_atom(RationalLaurent coeff, int deriv, Substitution subst);

    RationalLaurent apply(const RationalLaurent& f) const;

    // Input known to be mapped to a Laurent polynomial (all the operators
    // here preserve that space); throws exactness_error otherwise.
    LaurentPoly apply_poly(const LaurentPoly& f) const;

  private:
    unsigned order_;
    struct Atom {
        RationalLaurent coeff;
        int deriv;
        Substitution subst;
    };
    std::vector<Atom> atoms_;
};

// A_k(z;N): even N uses sigma_k z^2/(q^k - z^2) with
// sigma_k = alpha+beta+1 + (-1)^k (alpha-beta); odd N uses
// ((alpha+beta+1) z^2 + rho_k (alpha-beta) z)/(q^k - z^2) with rho_k an
// integer power of q (asserted at construction).
RationalLaurent coeff_A(unsigned N, const Rational& alpha, const Rational& beta, unsigned k);

// B(z) = N((alpha+beta+1) z^{2N} + (alpha-beta) z^N)/(z^{2N} - 1) = -sum_k A_k.
RationalLaurent coeff_B(unsigned N, const Rational& alpha, const Rational& beta);

// C(z), the first-derivative coefficient of the explicit H(N).
RationalLaurent coeff_C(unsigned N, const Rational& alpha, const Rational& beta);

// K = z d/dz + G(z)(R - I) at N = 1.
CircleOperator build_K(const Rational& alpha, const Rational& beta);

// L(N) = z d/dz + sum_k A_k (R_k - I).
CircleOperator build_L(unsigned N, const Rational& alpha, const Rational& beta);

// Equivalent form z d/dz + sum_k A_k R_k + B(z) I.
CircleOperator build_L_bform(unsigned N, const Rational& alpha, const Rational& beta);

enum class HForm { reflection, rotation };

// Explicit H(N) = z^2 d^2/dz^2 + C dz + z sum A_k' (R_k - I) (reflection form)
// or with (T_{-k} - I), k >= 1 (rotation form).
CircleOperator build_H_explicit(unsigned N, const Rational& alpha, const Rational& beta,
                                HForm form);

// H applied through the composed route L(L f) - N(alpha+beta+1) L f.
LaurentPoly apply_H_composed(const CircleOperator& L, unsigned N, const Rational& alpha,
                             const Rational& beta, const LaurentPoly& f);

// Explicit Hhat(N) for the ultraspherical second kind (alpha = beta), built
// from Bhat_k and Chat.
CircleOperator build_Hhat_explicit(unsigned N, const Rational& alpha, HForm form);

Rational eigenvalue_mu(int n, const Rational& alpha, const Rational& beta);
Rational eigenvalue_lambda(int n, unsigned N, const Rational& alpha, const Rational& beta);
// Lambda_n(N) = n(n + N(alpha+beta+1)).
Rational eigenvalue_Lambda(int n, unsigned N, const Rational& alpha, const Rational& beta);
// Xi_n(N) = n(n + N(2 alpha + 1) + 2).
Rational eigenvalue_Xi(int n, unsigned N, const Rational& alpha);

struct EigenEntry {
    int n = 0;
    Rational eigenvalue;
    bool pass = false;
};

struct EigenReport {
    std::string family;
    unsigned N = 1;
    Rational alpha, beta;
    std::vector<EigenEntry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

// L(N) psi_n = lambda_n(N) psi_n, residual cleared and zero-tested exactly.
EigenReport eigencheck_psi(unsigned N, const Rational& alpha, const Rational& beta, int n_max);

// H(N) P_n = Lambda_n(N) P_n via the composed route.
EigenReport eigencheck_P(unsigned N, const Rational& alpha, const Rational& beta, int n_max);

// H(N) ((z-1/z) Q_n) = Lambda_{n+1}(N) (z-1/z) Q_n, avoiding conjugation.
EigenReport eigencheck_Q(unsigned N, const Rational& alpha, const Rational& beta, int n_max);

// Hhat(N) Q_n = Xi_n(N) Q_n for alpha = beta, explicit form cross-checked
// against the conjugation route.
EigenReport eigencheck_ultraspherical_Q(unsigned N, const Rational& alpha, int n_max);

// Root-of-unity sums: the general residue identity (0 <= h < N) plus the two
// specializations, verified over Q(zeta_{2N}). The specializations constrain
// j: the first needs j even, the second j = N (mod 2).
bool verify_sum_general(unsigned N, unsigned h);
bool verify_sum_first(unsigned N, unsigned j);
bool verify_sum_second(unsigned N, unsigned j);

// E_k = sum_i A_i(z) A_{i+k}(q^i/z) = 0 for k = 1..N-1.
bool verify_Ek_zero(unsigned N, const Rational& alpha, const Rational& beta);

// B(z) + B(q^k/z) = N(alpha+beta+1) for every k.
bool verify_B_identity(unsigned N, const Rational& alpha, const Rational& beta);

// R_k f = T_{-k} f on the symmetric basis z^e + z^-e, e <= e_max.
bool verify_reflection_rotation_equivalence(unsigned N, int e_max);

} // namespace sieved

#endif
