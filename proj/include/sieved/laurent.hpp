#ifndef SIEVED_LAURENT_HPP
#define SIEVED_LAURENT_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "sieved/cyclo.hpp"

namespace sieved {

// Finite Laurent polynomial over Q(zeta_N). Sparse: the exponent map never
// stores a zero coefficient, and the empty map is the zero polynomial.
class LaurentPoly {
  public:
    explicit LaurentPoly(unsigned order) : order_(order) {}

    static LaurentPoly zero(unsigned order) { return LaurentPoly(order); }
    static LaurentPoly constant(unsigned order, const Rational& v);
    static LaurentPoly monomial(unsigned order, int exp, const Cyclo& c);
    // z^exp with coefficient 1.
    static LaurentPoly z_pow(unsigned order, int exp);

    unsigned order() const { return order_; }
    const std::map<int, Cyclo>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;
    int max_exp() const;
    Cyclo coeff(int exp) const;
    void set_coeff(int exp, const Cyclo& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly scaled(const Cyclo& c) const;
    LaurentPoly scaled(const Rational& r) const;

    // f(c * z^e), e in {+1, -1}; c a unit (power of zeta_N).
    // e = -1 with c = q^k realizes the reflection R_k, e = +1 the rotation T_k.
    LaurentPoly substitute(const Cyclo& c, int e) const;

    // f(z^m), m != 0.
    LaurentPoly power_substitute(int m) const;

    // m = 1: z f'(z); m = 2: z^2 f''(z).
    LaurentPoly z_ddz(int m) const;

    // Plain derivative f'(z).
    LaurentPoly derivative() const;

    // z^n f(1/z) for an ordinary polynomial of degree <= n.
    LaurentPoly reverse(int n) const;

    bool is_symmetric() const;

    // For symmetric f, the unique p with p(z + 1/z) = f(z); ascending coeffs.
    std::vector<Cyclo> to_x_poly() const;

    // Sum of c_k (z + 1/z)^k; inverse of to_x_poly.
    static LaurentPoly from_x_poly(unsigned order, const std::vector<Cyclo>& coeffs);

    // Exact quotient; throws exactness_error when the division leaves a remainder.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    std::complex<double> eval(const std::complex<double>& z) const;

    std::string str() const;

  private:
    void check_same_order(const LaurentPoly& rhs) const;

    unsigned order_;
    std::map<int, Cyclo> terms_;
};

LaurentPoly operator*(const Cyclo& c, const LaurentPoly& f);
LaurentPoly operator*(const Rational& r, const LaurentPoly& f);

// Quotient of two Laurent polynomials. Kept unreduced; equality of p/q and
// r/s is decided by cross-multiplication, so no canonical form is needed.
class RationalLaurent {
  public:
    explicit RationalLaurent(unsigned order)
        : num_(LaurentPoly::zero(order)), den_(LaurentPoly::constant(order, Rational(1))) {}
    RationalLaurent(LaurentPoly num, LaurentPoly den);
    RationalLaurent(const LaurentPoly& num); // NOLINT: deliberate implicit lift

    unsigned order() const { return num_.order(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalLaurent operator-() const;
    RationalLaurent& operator+=(const RationalLaurent& rhs);
    RationalLaurent& operator-=(const RationalLaurent& rhs);
    RationalLaurent& operator*=(const RationalLaurent& rhs);
    RationalLaurent& operator/=(const RationalLaurent& rhs);
    friend RationalLaurent operator+(RationalLaurent a, const RationalLaurent& b) { return a += b; }
    friend RationalLaurent operator-(RationalLaurent a, const RationalLaurent& b) { return a -= b; }
    friend RationalLaurent operator*(RationalLaurent a, const RationalLaurent& b) { return a *= b; }
    friend RationalLaurent operator/(RationalLaurent a, const RationalLaurent& b) { return a /= b; }
    friend bool operator==(const RationalLaurent& a, const RationalLaurent& b);
    friend bool operator!=(const RationalLaurent& a, const RationalLaurent& b) { return !(a == b); }

    RationalLaurent substitute(const Cyclo& c, int e) const;
    RationalLaurent derivative() const; // quotient rule
    RationalLaurent scaled(const Rational& r) const;

    // Collapses to a LaurentPoly; exactness_error if den does not divide num.
    LaurentPoly to_laurent() const;

    std::complex<double> eval(const std::complex<double>& z) const;

  private:
    LaurentPoly num_, den_;
};

} // namespace sieved

#endif
