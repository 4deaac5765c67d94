#include "qaskey/families.hpp"

namespace qaskey {

Rational eval_family(const ParamSet& p, int n, const Rational& point) {
    if (n < 0) throw Error("family degree must be nonnegative");
    const Rational &q = p.q, &a = p.a, &b = p.b, &c = p.c;
    switch (p.family) {
    case Family::AW: {
        if (point == 0) throw ZeroPoint();
        return phi_terminating(
            {rpow(q, -n), p.abcd() * rpow(q, n - 1), a * point, a / point},
            {a * b, a * c, a * p.d}, q, q, n);
    }
    case Family::CDqH:
        if (point == 0) throw ZeroPoint();
        return phi_terminating({rpow(q, -n), a * point, a / point},
                               {a * b, a * c}, q, q, n);
    case Family::ASC:
        if (point == 0) throw ZeroPoint();
        return phi_terminating({rpow(q, -n), a * point, a / point},
                               {a * b, Rational(0)}, q, q, n);
    case Family::BqJ:
        return phi_terminating({rpow(q, -n), a * b * rpow(q, n + 1), point},
                               {a * q, c * q}, q, q, n);
    case Family::LqJ:
        return phi_terminating({rpow(q, -n), a * b * rpow(q, n + 1)}, {a * q},
                               q, q * point, n);
    case Family::AWqBessel:
        throw Error("the q-Bessel level is not polynomial; use eval_qbessel");
    }
    throw Error("unknown family");
}

Rational eval_lqj_alternate(const ParamSet& p, int n, const Rational& x) {
    if (p.family != Family::LqJ)
        throw InvalidParams("eval_lqj_alternate expects an LqJ parameter set");
    if (n < 0) throw Error("family degree must be nonnegative");
    const Rational &q = p.q, &a = p.a, &b = p.b;
    Rational pref = rpow(-q * b, -n) * rpow(q, -(long)n * (n - 1) / 2) *
                    qpoch(q * b, q, n) / qpoch(q * a, q, n);
    // same value as the c -> 0 limit of P_n(qbx; b, a, c)
    ParamSet swapped{Family::BqJ, q, b, a, 0, 0};
    return pref * eval_family(swapped, n, q * b * x);
}

Rational eigenvalue(const ParamSet& p, int n) {
    const Rational& q = p.q;
    switch (p.family) {
    case Family::AW:
        return rpow(q, -n) + p.abcd() * rpow(q, n - 1);
    case Family::CDqH:
    case Family::ASC:
        return rpow(q, -n);
    case Family::BqJ:
    case Family::LqJ:
        return rpow(q, -n) + p.a * p.b * rpow(q, n + 1);
    case Family::AWqBessel:
        return rpow(q, n);
    }
    throw Error("unknown family");
}

namespace {

bool laurent_family(Family f) {
    return f == Family::AW || f == Family::CDqH || f == Family::ASC;
}

// The two-component objects at the little q-Jacobi level are built from the
// c -> 0 limit of the big q-Jacobi family, not from the 2phi1 form (the two
// are related by a fixed renormalization with a and b interchanged).
ParamSet vector_params(const ParamSet& p) {
    if (p.family != Family::LqJ) return p;
    ParamSet s = p;
    s.family = Family::BqJ;
    s.c = 0;
    return s;
}

// parameters of the companion family appearing in the second component
ParamSet companion(const ParamSet& p) {
    ParamSet s = p;
    if (laurent_family(p.family)) {
        s.a *= p.q;
        s.b *= p.q;
    } else {
        s.a *= p.q * p.q;
        s.c *= p.q;
    }
    return s;
}

} // namespace

Rational eval_nonsym_E(const ParamSet& p, int n, const Rational& z) {
    if (!laurent_family(p.family))
        throw InvalidParams("eval_nonsym_E expects a Laurent-argument family");
    if (z == 0) throw ZeroPoint();
    const Rational &q = p.q, &a = p.a, &b = p.b;
    int m = n >= 0 ? n : -n;
    Rational R = eval_family(p, m, z);
    if (n == 0) return R;
    Rational denom = (1 - q * a * b) * (1 - a * b) * (1 - a * p.c) * (1 - a * p.d);
    Rational coef;
    if (n > 0)
        coef = a * rpow(q, 1 - m) * (1 - rpow(q, m)) *
               (1 - rpow(q, m - 1) * p.c * p.d) / denom;
    else
        coef = rpow(q, 1 - m) * (1 - rpow(q, m) * a * b) *
               (1 - rpow(q, m - 1) * p.abcd()) / (b * denom);
    if (coef == 0) return R;
    return R - coef / z * (1 - a * z) * (1 - b * z) *
                   eval_family(companion(p), m - 1, z);
}

std::array<Rational, 2> eval_vector_E(const ParamSet& p_in, int n,
                                      const Rational& point) {
    const ParamSet p = vector_params(p_in);
    const Rational &q = p.q, &a = p.a, &b = p.b;
    int m = n >= 0 ? n : -n;
    Rational first = eval_family(p, m, point);
    if (n == 0) return {first, Rational(0)};
    Rational coef;
    if (laurent_family(p.family)) {
        Rational denom =
            (1 - q * a * b) * (1 - a * b) * (1 - a * p.c) * (1 - a * p.d);
        coef = -spectral(GridKind::Sigma, p, n) / denom;
    } else {
        Rational denom = (1 - q * a) * (1 - q * q * a) * (1 - q * p.c);
        if (n > 0)
            coef = -rpow(q, 1 - m) * (1 - rpow(q, m)) * (1 - rpow(q, m) * b) /
                   denom;
        else
            coef = -rpow(q, -m) * (1 - rpow(q, m + 1) * a) *
                   (1 - rpow(q, m + 1) * a * b) / (a * denom);
    }
    if (coef == 0) return {first, Rational(0)};
    Rational shifted_point = laurent_family(p.family) ? point : q * point;
    return {first, coef * eval_family(companion(p), m - 1, shifted_point)};
}

Laurent family_poly(const ParamSet& p, int n) {
    if (n < 0) throw Error("family degree must be nonnegative");
    if (p.family == Family::AWqBessel)
        throw Error("the q-Bessel level is not polynomial; use eval_qbessel");
    const Rational &q = p.q, &a = p.a, &b = p.b, &c = p.c;
    std::vector<Rational> num, den;
    switch (p.family) {
    case Family::AW:
        num = {rpow(q, -n), p.abcd() * rpow(q, n - 1)};
        den = {a * b, a * c, a * p.d};
        break;
    case Family::CDqH:
        num = {rpow(q, -n)};
        den = {a * b, a * c};
        break;
    case Family::ASC:
        num = {rpow(q, -n)};
        den = {a * b, Rational(0)};
        break;
    case Family::BqJ:
        num = {rpow(q, -n), a * b * rpow(q, n + 1)};
        den = {a * q, c * q};
        break;
    case Family::LqJ:
        num = {rpow(q, -n), a * b * rpow(q, n + 1)};
        den = {a * q};
        break;
    default: throw Error("unknown family");
    }

    Laurent one{Rational(1)};
    Laurent sum, term = one;
    Rational qk(1); // q^k
    for (int k = 0; k <= n; ++k) {
        sum += term;
        if (k == n) break;
        Rational s = q; // scalar part of the term ratio, argument included
        for (const Rational& u : num) s *= 1 - u * qk;
        for (const Rational& u : den) s /= 1 - u * qk;
        s /= 1 - q * qk;
        term = term * s;
        switch (p.family) {
        case Family::AW:
        case Family::CDqH:
        case Family::ASC:
            term = term * (one - Laurent::monomial(1, a * qk)) *
                   (one - Laurent::monomial(-1, a * qk));
            break;
        case Family::BqJ:
            term = term * (one - Laurent::monomial(1, qk));
            break;
        case Family::LqJ:
            term = term * Laurent::monomial(1);
            break;
        default: break;
        }
        qk *= q;
    }
    return sum;
}

Laurent nonsym_poly(const ParamSet& p, int n) {
    if (!laurent_family(p.family))
        throw InvalidParams("nonsym_poly expects a Laurent-argument family");
    const Rational &q = p.q, &a = p.a, &b = p.b;
    int m = n >= 0 ? n : -n;
    Laurent R = family_poly(p, m);
    if (n == 0) return R;
    Rational denom = (1 - q * a * b) * (1 - a * b) * (1 - a * p.c) * (1 - a * p.d);
    Rational coef;
    if (n > 0)
        coef = a * rpow(q, 1 - m) * (1 - rpow(q, m)) *
               (1 - rpow(q, m - 1) * p.c * p.d) / denom;
    else
        coef = rpow(q, 1 - m) * (1 - rpow(q, m) * a * b) *
               (1 - rpow(q, m - 1) * p.abcd()) / (b * denom);
    if (coef == 0) return R;
    Laurent one{Rational(1)};
    Laurent fac = Laurent::monomial(-1, coef) * (one - Laurent::monomial(1, a)) *
                  (one - Laurent::monomial(1, b));
    return R - fac * family_poly(companion(p), m - 1);
}

Laurent operator_eigen_poly(const ParamSet& p, int n) {
    return family_poly(vector_params(p), n);
}

VecPoly vector_poly(const ParamSet& p_in, int n) {
    const ParamSet p = vector_params(p_in);
    const Rational &q = p.q, &a = p.a, &b = p.b;
    int m = n >= 0 ? n : -n;
    Laurent first = family_poly(p, m);
    if (n == 0) return {first, Laurent()};
    Rational coef;
    if (laurent_family(p.family)) {
        Rational denom =
            (1 - q * a * b) * (1 - a * b) * (1 - a * p.c) * (1 - a * p.d);
        coef = -spectral(GridKind::Sigma, p, n) / denom;
    } else {
        Rational denom = (1 - q * a) * (1 - q * q * a) * (1 - q * p.c);
        if (n > 0)
            coef = -rpow(q, 1 - m) * (1 - rpow(q, m)) * (1 - rpow(q, m) * b) /
                   denom;
        else
            coef = -rpow(q, -m) * (1 - rpow(q, m + 1) * a) *
                   (1 - rpow(q, m + 1) * a * b) / (a * denom);
    }
    if (coef == 0) return {first, Laurent()};
    Laurent second = family_poly(companion(p), m - 1);
    if (!laurent_family(p.family)) second = second.substitute(q, 1, 1);
    return {first, second * coef};
}

std::complex<double> eval_qbessel(std::complex<double> gamma,
                                  std::complex<double> z, double a, double b,
                                  double q, double tol) {
    if (z == 0.0) throw ZeroPoint();
    std::complex<double> arg = -q * gamma / a;
    if (std::abs(arg) >= 1)
        throw Error("q-Bessel argument requires |q gamma / a| < 1");
    return phi_infinite_float({a * z, a / z}, {std::complex<double>(a * b)}, q,
                              arg, tol);
}

} // namespace qaskey
