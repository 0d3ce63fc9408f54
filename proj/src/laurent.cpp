#include "sieved/laurent.hpp"

#include <sstream>

namespace sieved {

namespace {

// (z + 1/z)^m expanded by the binomial theorem.
LaurentPoly from_x_poly_term(unsigned order, int m) {
    LaurentPoly f(order);
    mpz_class binom = 1;
    for (int i = 0; i <= m; ++i) {
        f.set_coeff(m - 2 * i, Cyclo(order, Rational(binom)));
        binom = binom * (m - i) / (i + 1);
    }
    return f;
}

} // namespace

LaurentPoly LaurentPoly::constant(unsigned order, const Rational& v) {
    LaurentPoly f(order);
    if (v != 0) f.terms_[0] = Cyclo(order, v);
    return f;
}

LaurentPoly LaurentPoly::monomial(unsigned order, int exp, const Cyclo& c) {
    if (c.order() != order) throw usage_error("monomial: coefficient order mismatch");
    LaurentPoly f(order);
    if (!c.is_zero()) f.terms_[exp] = c;
    return f;
}

LaurentPoly LaurentPoly::z_pow(unsigned order, int exp) {
    return monomial(order, exp, Cyclo::one(order));
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw usage_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw usage_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Cyclo LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Cyclo::zero(order_) : it->second;
}

void LaurentPoly::set_coeff(int exp, const Cyclo& c) {
    if (c.is_zero())
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

void LaurentPoly::check_same_order(const LaurentPoly& rhs) const {
    if (order_ != rhs.order_) throw usage_error("Laurent order mismatch");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly f(order_);
    for (const auto& [e, c] : terms_) f.terms_[e] = -c;
    return f;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    check_same_order(rhs);
    for (const auto& [e, c] : rhs.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    return *this += -rhs;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_order(b);
    LaurentPoly f(a.order_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Cyclo prod = ca * cb;
            if (prod.is_zero()) continue;
            auto it = f.terms_.find(ea + eb);
            if (it == f.terms_.end()) {
                f.terms_[ea + eb] = prod;
            } else {
                it->second += prod;
                if (it->second.is_zero()) f.terms_.erase(it);
            }
        }
    return f;
}

LaurentPoly LaurentPoly::scaled(const Cyclo& c) const {
    LaurentPoly f(order_);
    if (c.is_zero()) return f;
    for (const auto& [e, t] : terms_) {
        Cyclo prod = c * t;
        if (!prod.is_zero()) f.terms_[e] = prod;
    }
    return f;
}

LaurentPoly LaurentPoly::scaled(const Rational& r) const {
    return scaled(Cyclo(order_, r));
}

LaurentPoly operator*(const Cyclo& c, const LaurentPoly& f) { return f.scaled(c); }
LaurentPoly operator*(const Rational& r, const LaurentPoly& f) { return f.scaled(r); }

LaurentPoly LaurentPoly::substitute(const Cyclo& c, int e) const {
    if (e != 1 && e != -1) throw usage_error("substitute: exponent must be +1 or -1");
    if (c.order() != order_) throw usage_error("substitute: coefficient order mismatch");
    LaurentPoly f(order_);
    for (const auto& [k, t] : terms_) {
        Cyclo factor = c.pow(k);
        Cyclo coeff = factor * t;
        int exp = e * k;
        auto it = f.terms_.find(exp);
        if (it == f.terms_.end()) {
            if (!coeff.is_zero()) f.terms_[exp] = coeff;
        } else {
            it->second += coeff;
            if (it->second.is_zero()) f.terms_.erase(it);
        }
    }
    return f;
}

LaurentPoly LaurentPoly::power_substitute(int m) const {
    if (m == 0) throw usage_error("power_substitute: m must be nonzero");
    LaurentPoly f(order_);
    for (const auto& [e, c] : terms_) f.terms_[m * e] = c;
    return f;
}

LaurentPoly LaurentPoly::z_ddz(int m) const {
    LaurentPoly f(order_);
    for (const auto& [e, c] : terms_) {
        Rational factor;
        if (m == 1)
            factor = Rational(e);
        else if (m == 2)
            factor = Rational(e) * Rational(e - 1);
        else
            throw usage_error("z_ddz: m must be 1 or 2");
        Cyclo v = factor * c;
        if (!v.is_zero()) f.terms_[e] = v;
    }
    return f;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly f(order_);
    for (const auto& [e, c] : terms_) {
        if (e == 0) continue;
        Cyclo v = Rational(e) * c;
        if (!v.is_zero()) f.terms_[e - 1] = v;
    }
    return f;
}

LaurentPoly LaurentPoly::reverse(int n) const {
    if (!is_zero() && (min_exp() < 0 || max_exp() > n))
        throw usage_error("reverse: input is not a polynomial of degree <= n");
    LaurentPoly f(order_);
    for (const auto& [e, c] : terms_) f.terms_[n - e] = c;
    return f;
}

bool LaurentPoly::is_symmetric() const {
    for (const auto& [e, c] : terms_)
        if (coeff(-e) != c) return false;
    return true;
}

std::vector<Cyclo> LaurentPoly::to_x_poly() const {
    if (!is_symmetric()) throw usage_error("to_x_poly: input is not symmetric");
    if (is_zero()) return {};
    std::vector<Cyclo> p(static_cast<std::size_t>(max_exp()) + 1, Cyclo::zero(order_));
    LaurentPoly work = *this;
    // Peel the top symmetric pair: the leading x^M coefficient is the z^M one.
    while (!work.is_zero()) {
        int M = work.max_exp();
        Cyclo c = work.coeff(M);
        p[M] = c;
        work -= c * from_x_poly_term(order_, M);
    }
    return p;
}

LaurentPoly LaurentPoly::from_x_poly(unsigned order, const std::vector<Cyclo>& coeffs) {
    LaurentPoly f(order);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero())
            f += coeffs[k] * from_x_poly_term(order, static_cast<int>(k));
    return f;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    check_same_order(divisor);
    if (divisor.is_zero()) throw division_by_zero("Laurent division by zero");
    LaurentPoly q(order_);
    if (is_zero()) return q;
    // z is a unit, so the quotient may pick up negative exponents freely.
    LaurentPoly rem = *this;
    const int dtop = divisor.max_exp();
    const Cyclo dlead = divisor.coeff(dtop);
    while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= dtop - divisor.min_exp()) {
        int e = rem.max_exp() - dtop;
        Cyclo f = rem.coeff(rem.max_exp()) / dlead;
        q.set_coeff(e, f);
        rem -= LaurentPoly::monomial(order_, e, f) * divisor;
    }
    if (!rem.is_zero()) throw exactness_error("Laurent division left a remainder");
    return q;
}

std::complex<double> LaurentPoly::eval(const std::complex<double>& z) const {
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [e, c] : terms_) sum += c.to_complex() * std::pow(z, e);
    return sum;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << c.str() << "*z^" << e;
        first = false;
    }
    return os.str();
}

RationalLaurent::RationalLaurent(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.order() != den_.order()) throw usage_error("RationalLaurent order mismatch");
    if (den_.is_zero()) throw division_by_zero("RationalLaurent with zero denominator");
}

RationalLaurent::RationalLaurent(const LaurentPoly& num)
    : num_(num), den_(LaurentPoly::constant(num.order(), Rational(1))) {}

RationalLaurent RationalLaurent::operator-() const {
    return RationalLaurent(-num_, den_);
}

RationalLaurent& RationalLaurent::operator+=(const RationalLaurent& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ = den_ * rhs.den_;
    }
    return *this;
}

RationalLaurent& RationalLaurent::operator-=(const RationalLaurent& rhs) {
    return *this += -rhs;
}

RationalLaurent& RationalLaurent::operator*=(const RationalLaurent& rhs) {
    num_ = num_ * rhs.num_;
    den_ = den_ * rhs.den_;
    return *this;
}

RationalLaurent& RationalLaurent::operator/=(const RationalLaurent& rhs) {
    if (rhs.is_zero()) throw division_by_zero("RationalLaurent division by zero");
    num_ = num_ * rhs.den_;
    den_ = den_ * rhs.num_;
    return *this;
}

bool operator==(const RationalLaurent& a, const RationalLaurent& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

RationalLaurent RationalLaurent::substitute(const Cyclo& c, int e) const {
    return RationalLaurent(num_.substitute(c, e), den_.substitute(c, e));
}

RationalLaurent RationalLaurent::derivative() const {
    return RationalLaurent(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalLaurent RationalLaurent::scaled(const Rational& r) const {
    return RationalLaurent(num_.scaled(r), den_);
}

LaurentPoly RationalLaurent::to_laurent() const {
    return num_.divide_exact(den_);
}

std::complex<double> RationalLaurent::eval(const std::complex<double>& z) const {
    return num_.eval(z) / den_.eval(z);
}

} // namespace sieved
