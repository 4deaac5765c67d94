#include "qaskey/mpoly.hpp"

namespace qaskey {

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [k, v] : o.c_) add(k, v);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [k, v] : o.c_) add(k, -v);
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    std::map<Key, Rational> out;
    for (const auto& [i, u] : c_)
        for (const auto& [j, v] : o.c_) {
            Key k{i[0] + j[0], i[1] + j[1], i[2] + j[2]};
            auto it = out.find(k);
            if (it == out.end())
                out[k] = u * v;
            else
                it->second += u * v;
        }
    c_.clear();
    for (auto& [k, v] : out)
        if (v != 0) c_[k] = std::move(v);
    return *this;
}

MPoly& MPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [k, v] : c_) v *= s;
    return *this;
}

int MPoly::min_exp(int i) const {
    if (c_.empty()) return 0;
    int m = c_.begin()->first[static_cast<size_t>(i)];
    for (const auto& [k, v] : c_) m = std::min(m, k[static_cast<size_t>(i)]);
    return m;
}

MPoly MPoly::shifted(int i, int power) const {
    MPoly out;
    for (const auto& [k, v] : c_) {
        Key kk = k;
        kk[static_cast<size_t>(i)] += power;
        out.c_[kk] = v;
    }
    return out;
}

MPoly MPoly::subst(int i, const Rational& v) const {
    MPoly out;
    for (const auto& [k, u] : c_) {
        Key kk = k;
        int e = kk[static_cast<size_t>(i)];
        kk[static_cast<size_t>(i)] = 0;
        out.add(kk, u * rpow(v, e));
    }
    return out;
}

MPoly MPoly::at_zero(int i) const {
    MPoly out;
    for (const auto& [k, v] : c_)
        if (k[static_cast<size_t>(i)] == 0) out.c_[k] = v;
    return out;
}

Laurent MPoly::to_laurent() const {
    Laurent f;
    for (const auto& [k, v] : c_) {
        if (k[1] != 0 || k[2] != 0)
            throw Error("multivariate coefficient did not collapse to one variable");
        f.add(k[0], v);
    }
    return f;
}

MRat::MRat(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw Error("MRat with zero denominator");
}

MRat& MRat::operator+=(const MRat& o) {
    num = num * o.den + o.num * den;
    den = den * o.den;
    return *this;
}

MRat& MRat::operator-=(const MRat& o) {
    num = num * o.den - o.num * den;
    den = den * o.den;
    return *this;
}

MRat& MRat::operator*=(const MRat& o) {
    num *= o.num;
    den *= o.den;
    return *this;
}

MRat MRat::reciprocal() const {
    if (num.is_zero()) throw Error("reciprocal of zero");
    return MRat(den, num);
}

MRat MRat::subst(int i, const Rational& v) const {
    MRat out(num.subst(i, v), den.subst(i, v));
    if (out.den.is_zero()) throw Error("substitution made denominator vanish");
    return out;
}

MRat MRat::limit_at_zero(int i) const {
    if (num.is_zero()) return MRat(Rational(0));
    int vn = num.min_exp(i), vd = den.min_exp(i);
    if (vn < vd) throw Error("limit diverges");
    MPoly n0 = num.shifted(i, -vd).at_zero(i);
    MPoly d0 = den.shifted(i, -vd).at_zero(i);
    if (d0.is_zero()) throw Error("limit denominator vanished");
    return MRat(std::move(n0), std::move(d0));
}

RatFun MRat::to_ratfun() const {
    Laurent n = num.to_laurent(), d = den.to_laurent();
    return RatFun(std::move(n), std::move(d));
}

} // namespace qaskey
