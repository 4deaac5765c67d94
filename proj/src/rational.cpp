#include "qaskey/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace qaskey {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw Error("rational with zero denominator: " + s);
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

Rational rpow(const Rational& r, long e) {
    if (e == 0) return 1;
    if (r == 0) {
        if (e < 0) throw Error("0 raised to negative power");
        return 0;
    }
    Rational base = e > 0 ? r : Rational(1) / r;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc = 1;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

static bool int_sqrt(const Int& n, Int& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

bool is_square(const Rational& r) {
    Int rn, rd;
    return r >= 0 && int_sqrt(numerator(r), rn) && int_sqrt(denominator(r), rd);
}

Rational rsqrt(const Rational& r) {
    Int rn, rd;
    if (r < 0 || !int_sqrt(numerator(r), rn) || !int_sqrt(denominator(r), rd))
        throw NotRationalSquare(to_string(r) + " is not a rational square");
    return Rational(rn, rd);
}

} // namespace qaskey
