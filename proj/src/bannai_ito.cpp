#include "sieved/bannai_ito.hpp"

#include <sstream>

namespace sieved {

namespace {

void trim(XPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

} // namespace

XPoly xpoly_add(const XPoly& a, const XPoly& b) {
    XPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

XPoly xpoly_sub(const XPoly& a, const XPoly& b) {
    XPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

XPoly xpoly_mul(const XPoly& a, const XPoly& b) {
    if (a.empty() || b.empty()) return {};
    XPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

XPoly xpoly_reflect(const XPoly& f) {
    XPoly out = f;
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return out;
}

XPoly xpoly_shift(const XPoly& f) {
    // binomial expansion of (x+1)^i, accumulated row by row
    XPoly out(f.size(), Rational(0));
    XPoly row{Rational(1)}; // coefficients of (x+1)^i
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < row.size(); ++j) out[j] += f[i] * row[j];
        XPoly next(row.size() + 1, Rational(0));
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += row[j];
            next[j + 1] += row[j];
        }
        row = std::move(next);
    }
    trim(out);
    return out;
}

XPoly xpoly_divide_linear(const XPoly& f, const Rational& c0, const Rational& c1) {
    if (c1 == 0) throw usage_error("divisor must be linear");
    if (f.empty()) return {};
    XPoly q(f.size() - 1, Rational(0));
    XPoly rem = f;
    for (long i = static_cast<long>(f.size()) - 1; i >= 1; --i) {
        Rational c = rem[i] / c1;
        q[i - 1] = c;
        rem[i] = 0;
        rem[i - 1] -= c * c0;
    }
    if (rem[0] != 0) throw exactness_error("linear division leaves remainder " + rational_str(rem[0]));
    return q;
}

int xpoly_degree(const XPoly& f) {
    for (long i = static_cast<long>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return static_cast<int>(i);
    return -1;
}

std::string xpoly_str(const XPoly& f) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << ", ";
        os << rational_str(f[i]);
    }
    os << "]";
    return os.str();
}

XPoly apply_bi(const BIParams& p, const XPoly& f) {
    // F(x)(f(x) - f(-x)): the difference is odd, so divisible by 2x
    XPoly diff1 = xpoly_sub(f, xpoly_reflect(f));
    XPoly fnum = xpoly_mul({p.rho1 * p.rho2, -(p.rho1 + p.rho2), Rational(1)}, diff1);
    XPoly term1 = xpoly_divide_linear(fnum, Rational(0), Rational(2));

    // G(x)(f(-x-1) - f(x)): the difference vanishes at x = -1/2
    XPoly diff2 = xpoly_sub(xpoly_shift(xpoly_reflect(f)), f);
    Rational s1 = p.r1 - Rational(1) / 2;
    Rational s2 = p.r2 - Rational(1) / 2;
    XPoly gnum = xpoly_mul({s1 * s2, -(s1 + s2), Rational(1)}, diff2);
    XPoly term2 = xpoly_divide_linear(gnum, Rational(1), Rational(2));

    XPoly out = xpoly_add(term1, term2);
    if (xpoly_degree(out) > xpoly_degree(f))
        throw exactness_error("degree raised: " + xpoly_str(out));
    return out;
}

BIDiagReport bi_matrix(const BIParams& params, int n_max) {
    if (n_max < 0) throw usage_error("bi_matrix: n_max must be >= 0");
    BIDiagReport report;
    report.params = params;
    for (int n = 0; n <= n_max; ++n) {
        XPoly basis(n + 1, Rational(0));
        basis[n] = 1;
        XPoly image = apply_bi(params, basis);
        if (xpoly_degree(image) > n) report.upper_triangular = false;
        BIDiagEntry entry;
        entry.n = n;
        entry.computed = (static_cast<int>(image.size()) > n) ? image[n] : Rational(0);
        if (n % 2 == 0) {
            entry.displayed = Rational(n) / 2;
            if (entry.computed != entry.displayed) report.even_branch_ok = false;
        } else {
            entry.displayed =
                params.rho1 + params.rho2 + params.r1 + params.r2 - Rational(n + 1) / 2;
        }
        entry.match = (entry.computed == entry.displayed);
        report.columns.push_back(std::move(image));
        report.diagonal.push_back(std::move(entry));
    }
    return report;
}

} // namespace sieved
