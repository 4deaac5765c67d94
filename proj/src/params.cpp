#include "qaskey/params.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace qaskey {

std::string family_name(Family f) {
    switch (f) {
    case Family::AW: return "aw";
    case Family::CDqH: return "cdqh";
    case Family::ASC: return "asc";
    case Family::BqJ: return "bqj";
    case Family::LqJ: return "lqj";
    case Family::AWqBessel: return "awqbessel";
    }
    throw Error("unknown family");
}

Family family_from_name(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });
    for (Family f : {Family::AW, Family::CDqH, Family::ASC, Family::BqJ,
                     Family::LqJ, Family::AWqBessel})
        if (family_name(f) == s) return f;
    throw InvalidParams("unknown family name: " + name);
}

int ParamSet::arity() const {
    switch (family) {
    case Family::AW: return 4;
    case Family::CDqH:
    case Family::BqJ: return 3;
    default: return 2;
    }
}

void ParamSet::validate(int m_max) const {
    if (q == 0) throw InvalidParams("q must be nonzero");
    if (q == 1 || q == -1) throw InvalidParams("q must not be a root of unity");
    const Rational* slots[4] = {&a, &b, &c, &d};
    const char* names = "abcd";
    for (int i = 0; i < arity(); ++i)
        if (*slots[i] == 0)
            throw InvalidParams(std::string("parameter ") + names[i] +
                                " must be nonzero for family " + family_name(family));

    // q-shifted factorials that appear in series or recurrence denominators
    // must not vanish within working degree: base != q^{-m}, 0 <= m <= m_max.
    std::vector<Rational> bases;
    switch (family) {
    case Family::AW: bases = {a * b, a * c, a * d, abcd()}; break;
    case Family::CDqH: bases = {a * b, a * c}; break;
    case Family::ASC:
    case Family::AWqBessel: bases = {a * b}; break;
    case Family::BqJ: bases = {q * a, q * c, q * a * b}; break;
    case Family::LqJ: bases = {q * a, q * a * b}; break;
    }
    for (const Rational& base : bases) {
        Rational p(1);
        for (int m = 0; m <= m_max; ++m) {
            if (base * p == 1)
                throw InvalidParams("parameter product " + to_string(base) +
                                    " equals q^-" + std::to_string(m));
            p *= q;
        }
    }
}

ParamSet param_set_P1() {
    return {Family::AW, rat(1, 4), rat(1, 2), rat(1, 2), rat(1, 3), rat(3)};
}

ParamSet param_set_P2(Family f) {
    ParamSet p{f, rat(1, 2), rat(1, 3), rat(1, 5), rat(2, 7), rat(3, 11)};
    if (p.arity() < 4) p.d = 0;
    if (p.arity() < 3) p.c = 0;
    return p;
}

ParamSet DualParams::as_params() const {
    return {Family::AW, q, at, bt, ct, dt};
}

DualParams dual_params(const ParamSet& p, int branch) {
    if (p.family != Family::AW)
        throw InvalidParams("dual parameters are defined at the top level");
    Rational at = rsqrt(p.abcd() / p.q);
    if (branch < 0) at = -at;
    return {p.q, at, p.a * p.b / at, p.a * p.c / at, p.a * p.d / at,
            branch < 0 ? -1 : 1};
}

ParamSet dual_triple(const ParamSet& p) {
    if (p.family != Family::CDqH)
        throw InvalidParams("dual_triple expects a CDqH parameter set");
    return {Family::BqJ, p.q, p.a * p.b / p.q, p.a / p.b, p.a * p.c / p.q, 0};
}

ParamSet dual_pair(const ParamSet& p) {
    if (p.family != Family::ASC)
        throw InvalidParams("dual_pair expects an ASC parameter set");
    return {Family::LqJ, p.q, p.a * p.b / p.q, p.a / p.b, 0, 0};
}

ParamSet bqj_to_cdqh(const ParamSet& p, int branch) {
    if (p.family != Family::BqJ)
        throw InvalidParams("bqj_to_cdqh expects a BqJ parameter set");
    Rational s = branch < 0 ? Rational(-1) : Rational(1);
    Rational at = s * rsqrt(p.q * p.a * p.b);
    Rational bt = s * rsqrt(p.q * p.a / p.b);
    return {Family::CDqH, p.q, at, bt, s * rsqrt(p.q / (p.a * p.b)) * p.c, 0};
}

ParamSet lqj_to_asc(const ParamSet& p, int branch) {
    if (p.family != Family::LqJ)
        throw InvalidParams("lqj_to_asc expects an LqJ parameter set");
    Rational s = branch < 0 ? Rational(-1) : Rational(1);
    return {Family::ASC, p.q, s * rsqrt(p.q * p.a * p.b), s * rsqrt(p.q * p.a / p.b),
            0, 0};
}

Rational spectral(GridKind kind, const ParamSet& p, int n) {
    const Rational& q = p.q;
    switch (kind) {
    case GridKind::Z:
        return (n >= 0 ? p.a : 1 / p.a) * rpow(q, n);
    case GridKind::Nu:
        return n >= 0 ? rpow(q, 1 - n) / p.abcd() : rpow(q, -n);
    case GridKind::Mu:
        return n >= 0 ? 1 / (p.a * p.b * rpow(q, 1 + n)) : rpow(q, -n);
    case GridKind::Sigma: {
        if (n >= 0) {
            if (n == 0) return 0;
            return rpow(q, 1 - n) * (1 - rpow(q, n)) * (1 - rpow(q, n - 1) * p.c * p.d);
        }
        int m = -n;
        return rpow(q, 1 - m) * (1 - rpow(q, m) * p.a * p.b) *
               (1 - rpow(q, m - 1) * p.abcd()) / (p.a * p.b);
    }
    }
    throw Error("unknown grid kind");
}

Rational mu_row(const Rational& ab, const Rational& q, int n) {
    if (n >= 0) return ab * rpow(q, -n) * (1 - rpow(q, n));
    int m = -n;
    return rpow(q, -m) * (1 - rpow(q, m) * ab);
}

} // namespace qaskey
