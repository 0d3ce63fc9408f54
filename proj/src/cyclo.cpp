#include "sieved/cyclo.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace sieved {

namespace {

using Poly = std::vector<Rational>; // dense, ascending, no trailing zeros

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    trim(c);
    return c;
}

// Quotient of a by b, remainder written back into a.
Poly divmod(Poly& a, const Poly& b) {
    if (b.empty()) throw division_by_zero("polynomial division by zero");
    if (a.size() < b.size()) return {};
    Poly q(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (long i = static_cast<long>(a.size()) - static_cast<long>(b.size()); i >= 0; --i) {
        Rational f = a[i + b.size() - 1] / lead;
        if (f == 0) continue;
        q[i] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= f * b[j];
    }
    trim(a);
    trim(q);
    return q;
}

} // namespace

unsigned totient(unsigned N) {
    unsigned result = N, n = N;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<Rational> cyclotomic_polynomial(unsigned N) {
    static std::map<unsigned, Poly> cache;
    static std::mutex mtx;
    if (N == 0) throw usage_error("cyclotomic_polynomial: N must be positive");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    // x^N - 1 divided by the product of Phi_d over proper divisors d of N.
    std::function<Poly(unsigned)> compute = [&](unsigned n) -> Poly {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        Poly num(n + 1, Rational(0));
        num[0] = -1;
        num[n] = 1;
        for (unsigned d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            Poly phi_d = compute(d);
            Poly rem = num;
            num = divmod(rem, phi_d);
            if (!rem.empty())
                throw exactness_error("cyclotomic division left a remainder");
        }
        cache[n] = num;
        return num;
    };
    return compute(N);
}

Cyclo::Cyclo(unsigned order, const Rational& value) : order_(order) {
    if (order == 0) throw usage_error("Cyclo order must be positive");
    coeffs_.assign(totient(order), Rational(0));
    coeffs_[0] = value;
}

Cyclo Cyclo::root_power(unsigned N, long k) {
    long r = k % static_cast<long>(N);
    if (r < 0) r += N;
    Cyclo result = Cyclo::zero(N);
    std::vector<Rational> raw(static_cast<std::size_t>(r) + 1, Rational(0));
    raw.back() = 1;
    result.reduce(raw);
    result.coeffs_ = std::move(raw);
    return result;
}

bool Cyclo::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclo::rational_value() const {
    if (!is_rational()) throw usage_error("Cyclo value is not rational");
    return coeffs_[0];
}

void Cyclo::check_same_order(const Cyclo& rhs) const {
    if (order_ != rhs.order_)
        throw usage_error("cyclotomic order mismatch: " + std::to_string(order_) +
                          " vs " + std::to_string(rhs.order_));
}

void Cyclo::reduce(std::vector<Rational>& raw) const {
    const Poly phi = cyclotomic_polynomial(order_);
    const std::size_t deg = phi.size() - 1;
    if (raw.size() > deg) {
        trim(raw);
        if (raw.size() > deg) divmod(raw, phi);
    } else {
        trim(raw);
    }
    raw.resize(deg, Rational(0));
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
    check_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) {
    check_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& rhs) {
    check_same_order(rhs);
    std::vector<Rational> raw = mul(coeffs_, rhs.coeffs_);
    reduce(raw);
    coeffs_ = std::move(raw);
    return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& rhs) {
    return *this *= rhs.inverse();
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero in Q(zeta)");
    // Extended Euclid in Q[x]: u * this + v * Phi_N = gcd = nonzero constant.
    Poly r0 = cyclotomic_polynomial(order_);
    Poly r1 = coeffs_;
    trim(r1);
    Poly s0 = {}, s1 = {Rational(1)}; // coefficients of `this`
    while (!r1.empty() && r1.size() > 1) {
        Poly rem = r0;
        Poly q = divmod(rem, r1);
        Poly s2 = s0;
        Poly qs1 = mul(q, s1);
        s2.resize(std::max(s2.size(), qs1.size()), Rational(0));
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty())
        throw exactness_error("residue shares a factor with Phi_N; not a field element");
    // r1 is a nonzero constant: gcd(this, Phi_N) = r1[0].
    Cyclo inv = Cyclo::zero(order_);
    std::vector<Rational> raw = s1;
    for (auto& c : raw) c /= r1[0];
    reduce(raw);
    inv.coeffs_ = std::move(raw);
    return inv;
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo acc = Cyclo::one(order_), b = *this;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

std::complex<double> Cyclo::to_complex() const {
    std::complex<double> sum(0.0, 0.0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
        sum += coeffs_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

std::string Cyclo::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << rational_str(coeffs_[i]);
    }
    os << "]";
    return os.str();
}

Cyclo operator*(const Rational& s, Cyclo a) {
    return Cyclo(a.order(), s) * a;
}

} // namespace sieved
