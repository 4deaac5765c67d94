#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qaskey {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroPoint : Error {
    ZeroPoint() : Error("evaluation at z = 0") {}
};

struct NotRationalSquare : Error {
    explicit NotRationalSquare(const std::string& what) : Error(what) {}
};

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

// Parses "p", "p/q", or "-p/q".  Whitespace is not tolerated.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& r);

// r^e with integer (possibly negative) exponent; throws on 0^negative.
Rational rpow(const Rational& r, long e);

// Exact square root if r is the square of a rational, else throws NotRationalSquare.
Rational rsqrt(const Rational& r);

bool is_square(const Rational& r);

} // namespace qaskey
