#include "qaskey/ratfun.hpp"

namespace qaskey {

RatFun::RatFun(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = Laurent(Rational(1));
        return;
    }
    // absorb z-power units of the denominator into the numerator
    int dlo = den_.lo();
    if (dlo != 0) {
        den_ *= Laurent::monomial(-dlo);
        num_ *= Laurent::monomial(-dlo);
    }
    Laurent g = laurent_gcd(num_ * Laurent::monomial(-num_.lo()), den_);
    if (!g.is_constant()) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
    }
    // make denominator's leading coefficient 1
    Rational lead = den_.coeff(den_.hi());
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFun& RatFun::operator+=(const RatFun& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFun& RatFun::operator*=(const RatFun& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.num_.is_zero()) throw Error("division by zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational RatFun::eval(const Rational& z0) const {
    Rational d = den_.eval(z0);
    if (d == 0) throw Error("rational function pole at " + to_string(z0));
    return num_.eval(z0) / d;
}

RatFun RatFun::substitute(const Rational& q, int e, int s) const {
    return RatFun(num_.substitute(q, e, s), den_.substitute(q, e, s));
}

Laurent RatFun::to_laurent() const {
    return exact_divide(num_, den_);
}

std::string RatFun::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

} // namespace qaskey
