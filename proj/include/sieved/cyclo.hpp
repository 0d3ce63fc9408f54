#ifndef SIEVED_CYCLO_HPP
#define SIEVED_CYCLO_HPP

#include <complex>
#include <string>
#include <vector>

#include "sieved/rational.hpp"

namespace sieved {

// Phi_N(x), the N-th cyclotomic polynomial, ascending integer coefficients.
// Computed by dividing x^N - 1 by the product of Phi_d over proper divisors d.
std::vector<Rational> cyclotomic_polynomial(unsigned N);

unsigned totient(unsigned N);

// An element of Q(zeta_N): a residue modulo Phi_N(x) with x |-> exp(2*pi*i/N).
// Working modulo Phi_N (not x^N - 1) keeps this a field, so every nonzero
// element is invertible.
class Cyclo {
  public:
    Cyclo() : order_(1), coeffs_(1, Rational(0)) {}
    Cyclo(unsigned order, const Rational& value);

    // zeta_N^k, k reduced modulo N.
    static Cyclo root_power(unsigned N, long k);
    static Cyclo zero(unsigned N) { return Cyclo(N, Rational(0)); }
    static Cyclo one(unsigned N) { return Cyclo(N, Rational(1)); }

    unsigned order() const { return order_; }
    // Length is exactly totient(order).
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& rhs);
    Cyclo& operator-=(const Cyclo& rhs);
    Cyclo& operator*=(const Cyclo& rhs);
    Cyclo& operator/=(const Cyclo& rhs);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo inverse() const;
    Cyclo pow(long e) const;

    // Evaluates the residue at exp(2*pi*i/N) in double precision.
    // Only the quadrature module consumes this.
    std::complex<double> to_complex() const;

    // Array of "p/q" strings in ascending power order, e.g. "[1/2, -1]".
    std::string str() const;

  private:
    void check_same_order(const Cyclo& rhs) const;
    void reduce(std::vector<Rational>& raw) const;

    unsigned order_;
    std::vector<Rational> coeffs_;
};

Cyclo operator*(const Rational& s, Cyclo a);

} // namespace sieved

#endif
