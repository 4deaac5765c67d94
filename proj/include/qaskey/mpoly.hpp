#pragma once

#include "qaskey/ratfun.hpp"

#include <array>
#include <map>

namespace qaskey {

// Sparse Laurent polynomial in three commuting variables, used to carry
// operator coefficients through parameter substitutions that depend on a
// deformation variable.  Variable 0 is the surviving argument, the others
// are auxiliary (deformation parameter, extra parameter).
class MPoly {
public:
    using Key = std::array<int, 3>;

    MPoly() = default;
    explicit MPoly(const Rational& c) {
        if (c != 0) c_[{0, 0, 0}] = c;
    }
    static MPoly monomial(Key k, const Rational& c = 1) {
        MPoly f;
        if (c != 0) f.c_[k] = c;
        return f;
    }
    static MPoly variable(int i, int power = 1) {
        Key k{0, 0, 0};
        k[static_cast<size_t>(i)] = power;
        return monomial(k);
    }

    const std::map<Key, Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void add(Key k, const Rational& v) {
        auto it = c_.find(k);
        if (it == c_.end()) {
            if (v != 0) c_[k] = v;
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rational& s);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
    friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
    bool operator==(const MPoly& o) const { return c_ == o.c_; }

    // minimal exponent of variable i appearing (0 if zero polynomial)
    int min_exp(int i) const;
    // multiply by variable i to the given power
    MPoly shifted(int i, int power) const;
    // substitute a nonzero rational value for variable i
    MPoly subst(int i, const Rational& v) const;
    // the part with exponent 0 in variable i (other terms dropped)
    MPoly at_zero(int i) const;

    // collapse to a univariate Laurent polynomial in variable 0
    // (requires all other exponents to be 0)
    Laurent to_laurent() const;

private:
    std::map<Key, Rational> c_;
};

// Ratio of MPolys; no cancellation is attempted beyond factoring out powers
// of a deformation variable when taking limits.
struct MRat {
    MPoly num, den;

    MRat() : num(), den(MPoly(Rational(1))) {}
    MRat(const Rational& c) : num(MPoly(c)), den(MPoly(Rational(1))) {}
    MRat(MPoly n) : num(std::move(n)), den(MPoly(Rational(1))) {}
    MRat(MPoly n, MPoly d);

    MRat& operator+=(const MRat& o);
    MRat& operator-=(const MRat& o);
    MRat& operator*=(const MRat& o);
    friend MRat operator+(MRat a, const MRat& b) { return a += b; }
    friend MRat operator-(MRat a, const MRat& b) { return a -= b; }
    friend MRat operator*(MRat a, const MRat& b) { return a *= b; }
    friend MRat operator/(MRat a, const MRat& b) { return a *= b.reciprocal(); }
    MRat reciprocal() const;

    // substitute a rational value for variable i (value nonzero unless no
    // negative powers of i occur)
    MRat subst(int i, const Rational& v) const;

    // Limit of this ratio as variable i -> 0, assuming the limit is finite.
    // Factors out the minimal power of variable i from numerator and
    // denominator; throws if the limit diverges or the denominator vanishes.
    MRat limit_at_zero(int i) const;

    // collapse to a univariate rational function in variable 0
    RatFun to_ratfun() const;
};

} // namespace qaskey
