#pragma once

#include "qaskey/laurent.hpp"

namespace qaskey {

// Quotient of Laurent polynomials, kept normalized: common factors cancelled,
// denominator an ordinary polynomial with nonzero constant term and leading
// coefficient 1.  z-power units are absorbed into the numerator.
class RatFun {
public:
    RatFun() : num_(), den_(Laurent(Rational(1))) {}
    RatFun(const Rational& c) : num_(Laurent(c)), den_(Laurent(Rational(1))) {}
    RatFun(Laurent n) : num_(std::move(n)), den_(Laurent(Rational(1))) {}
    RatFun(Laurent n, Laurent d);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend RatFun operator-(const RatFun& a) { return RatFun() - a; }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    Rational eval(const Rational& z0) const;

    // Substitution z -> q^e z^s applied to numerator and denominator.
    RatFun substitute(const Rational& q, int e, int s) const;

    // Throws NotPolynomial (with the remainder in the message) unless the
    // denominator divides the numerator exactly.
    Laurent to_laurent() const;

    std::string str(const std::string& var = "z") const;

private:
    void normalize();
    Laurent num_, den_;
};

} // namespace qaskey
