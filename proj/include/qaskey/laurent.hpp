#pragma once

#include "qaskey/rational.hpp"

#include <map>
#include <string>

namespace qaskey {

struct NotPolynomial : Error {
    explicit NotPolynomial(std::string what) : Error(std::move(what)) {}
};

// Laurent polynomial in one variable with exact rational coefficients.
// Zero coefficients are never stored.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Rational& c) {
        if (c != 0) c_[0] = c;
    }
    static Laurent monomial(int k, const Rational& c = 1) {
        Laurent f;
        if (c != 0) f.c_[k] = c;
        return f;
    }
    static Laurent variable() { return monomial(1); }

    const std::map<int, Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
    Rational coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rational(0) : it->second;
    }
    int lo() const { return c_.empty() ? 0 : c_.begin()->first; }
    int hi() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    void set(int k, const Rational& v) {
        if (v == 0)
            c_.erase(k);
        else
            c_[k] = v;
    }
    void add(int k, const Rational& v) {
        auto it = c_.find(k);
        if (it == c_.end()) {
            if (v != 0) c_[k] = v;
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    Laurent& operator*=(const Rational& s);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
    friend Laurent operator*(Laurent a, const Rational& s) { return a *= s; }
    friend Laurent operator*(const Rational& s, Laurent a) { return a *= s; }
    friend Laurent operator-(const Laurent& a) { return a * Rational(-1); }
    bool operator==(const Laurent& o) const { return c_ == o.c_; }

    // Exact evaluation at z0 != 0.
    Rational eval(const Rational& z0) const;

    // f[q^e * z^s]: coefficient of z^k becomes q^{e k} * old, exponent k -> s k.
    // s must be +1 or -1.
    Laurent substitute(const Rational& q, int e, int s) const;
    Laurent reflect() const { return substitute(1, 0, -1); }

    bool is_symmetric() const;

    std::string str(const std::string& var = "z") const;

private:
    std::map<int, Rational> c_;
};

// Quotient/remainder of Laurent division after clearing to ordinary
// polynomials: a = b*q + r with r either zero or not divisible further.
// exact_divide throws NotPolynomial (carrying the remainder) unless b | a
// in the Laurent ring.
Laurent exact_divide(const Laurent& a, const Laurent& b);
bool divides(const Laurent& b, const Laurent& a);

// Greatest common divisor, normalized monic with lowest exponent 0.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

} // namespace qaskey
