#include "sieved/rational.hpp"

#include <cctype>

namespace sieved {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw usage_error("empty rational literal");
    auto check_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!check_int(s)) throw usage_error("bad rational literal: " + s);
        return Rational(mpz_class(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!check_int(num) || !check_int(den))
        throw usage_error("bad rational literal: " + s);
    mpz_class d(den);
    if (d == 0) throw usage_error("zero denominator in rational literal: " + s);
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw division_by_zero("0^negative");
        return rational_pow(Rational(1) / base, -e);
    }
    Rational acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace sieved
