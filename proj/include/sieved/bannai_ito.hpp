#ifndef SIEVED_BANNAI_ITO_HPP
#define SIEVED_BANNAI_ITO_HPP

#include "sieved/rational.hpp"
#include "sieved/errors.hpp"

#include <string>
#include <vector>

namespace sieved {

// Dense polynomial in x over Q, ascending coefficients; the empty vector is 0.
using XPoly = std::vector<Rational>;

XPoly xpoly_add(const XPoly& a, const XPoly& b);
XPoly xpoly_sub(const XPoly& a, const XPoly& b);
XPoly xpoly_mul(const XPoly& a, const XPoly& b);
// f(-x)
XPoly xpoly_reflect(const XPoly& f);
// f(x + 1)
XPoly xpoly_shift(const XPoly& f);
// exact quotient by a linear divisor c0 + c1 x; exactness_error on remainder
XPoly xpoly_divide_linear(const XPoly& f, const Rational& c0, const Rational& c1);
int xpoly_degree(const XPoly& f); // -1 for the zero polynomial
std::string xpoly_str(const XPoly& f);

struct BIParams {
    Rational rho1, rho2, r1, r2;
};

// L f = F(x)(f(x) - f(-x)) + G(x)(f(-x-1) - f(x)) with
// F = (x-rho1)(x-rho2)/(2x), G = (x-r1+1/2)(x-r2+1/2)/(2x+1). Both numerators
// are divided out exactly; a remainder means the convention is off and throws.
XPoly apply_bi(const BIParams& params, const XPoly& f);

struct BIDiagEntry {
    int n = 0;
    Rational computed;   // diagonal of the triangular matrix
    Rational displayed;  // rho1+rho2+r1+r2 - (n+1)/2 on the odd branch, n/2 even
    bool match = false;
};

struct BIDiagReport {
    BIParams params;
    // column-major action on {1, x, ..., x^{n_max}}; matrix[j] holds L x^j
    std::vector<XPoly> columns;
    std::vector<BIDiagEntry> diagonal;
    bool upper_triangular = true;
    bool even_branch_ok = true; // computed == n/2 on every even n
};

BIDiagReport bi_matrix(const BIParams& params, int n_max);

} // namespace sieved

#endif
