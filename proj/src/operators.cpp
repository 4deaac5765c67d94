#include "qaskey/operators.hpp"

#include "qaskey/families.hpp"
#include "qaskey/mpoly.hpp"

namespace qaskey {

namespace {

bool is_laurent_family(Family f) {
    return f == Family::AW || f == Family::CDqH || f == Family::ASC;
}

bool is_x_family(Family f) { return f == Family::BqJ || f == Family::LqJ; }

// -------------------------------------------------------------------------
// generic coefficient builders, shared between the exact rational-function
// instantiation and the deformation-variable instantiation used for limits

template <class F>
using Entry = std::vector<std::pair<F, int>>;  // sum of coeff * f[q^k z]

template <class F>
using Entries2x2 = std::array<std::array<Entry<F>, 2>, 2>;

template <class F>
Entry<F> scaled(Entry<F> e, const F& s) {
    for (auto& t : e) t.first = t.first * s;
    return e;
}

template <class F>
F neg(const F& x) {
    return F(Rational(-1)) * x;
}

// terms of the second-order q-difference operator with parameters (a,b,c,d)
template <class F>
Entry<F> L_terms(const Rational& q, const F& z, const F& a, const F& b,
                 const F& c, const F& d) {
    F one{Rational(1)}, qf{q};
    F z2 = z * z;
    F A = (one - a * z) * (one - b * z) * (one - c * z) * (one - d * z) /
          ((one - z2) * (one - qf * z2));
    F B = (a - z) * (b - z) * (c - z) * (d - z) / ((one - z2) * (qf - z2));
    F cst = one + F(Rational(1) / q) * a * b * c * d - A - B;
    return {{cst, 0}, {A, 1}, {B, -1}};
}

template <class F>
Entries2x2<F> matrix_terms(MGen g, const Rational& q, const F& z, const F& a,
                           const F& b, const F& c, const F& d) {
    F one{Rational(1)}, qf{q};
    F ab = a * b;
    F z2 = z * z;
    F zi = one / z;
    switch (g) {
    case MGen::T1:
        return {{{Entry<F>{{neg(ab), 0}}, Entry<F>{}},
                 {Entry<F>{}, Entry<F>{{F(Rational(-1)), 0}}}}};
    case MGen::T1inv:
        return {{{Entry<F>{{neg(one / ab), 0}}, Entry<F>{}},
                 {Entry<F>{}, Entry<F>{{F(Rational(-1)), 0}}}}};
    case MGen::Z: {
        F pref = one / (ab - one);
        F prod = (one - a * z) * (one - a * zi) * (one - b * z) * (one - b * zi);
        Entry<F> e00{{(a + b - z - zi) * pref, 0}};
        Entry<F> e01{{neg(a * prod) * pref, 0}};
        Entry<F> e10{{(one / a) * pref, 0}};
        Entry<F> e11{{(ab * (z + zi) - (a + b)) * pref, 0}};
        return {{{e00, e01}, {e10, e11}}};
    }
    case MGen::Zinv: {
        F pref = one / (ab - one);
        F prod = (one - a * z) * (one - a * zi) * (one - b * z) * (one - b * zi);
        Entry<F> e00{{(ab * (z + zi) - (a + b)) * pref, 0}};
        Entry<F> e01{{a * prod * pref, 0}};
        Entry<F> e10{{neg(one / a) * pref, 0}};
        Entry<F> e11{{(a + b - z - zi) * pref, 0}};
        return {{{e00, e01}, {e10, e11}}};
    }
    case MGen::Y: {
        F pref = one / (one - ab);
        F c11 = ab * (F(Rational(1) / q) * c * d + one) * pref;
        Entry<F> e11 = scaled(L_terms(q, z, a, b, c, d), neg(ab * pref));
        e11.push_back({c11, 0});
        Entry<F> e22 =
            scaled(L_terms(q, z, qf * a, qf * b, c, d), F(Rational(1) / q) * pref);
        e22.push_back({neg(c11), 0});
        F C = z * (c - z) * (d - z) / (a * (one - ab) * (one - z2) * (qf - z2));
        F Dq = z * (one - c * z) * (one - d * z) /
               (a * (one - ab) * (one - z2) * (one - qf * z2));
        Entry<F> e21{{C, -1}, {Dq, 1}, {neg(C + Dq), 0}};
        F a2b = a * a * b;
        F t0 = a2b * (a - z) * (b - z) * (one - a * z) * (one - b * z) /
               ((one - ab) * z * (qf - z2) * (one - qf * z2)) *
               ((c * d + qf) * (one + z2) - (one + qf) * (c + d) * z);
        F tm = neg(a2b * (a - z) * (b - z) * (c - z) * (d - z) * (a * qf - z) *
                   (b * qf - z) / (qf * (one - ab) * z * (one - z2) * (qf - z2)));
        F tp = neg(a2b * (one - a * z) * (one - b * z) * (one - c * z) *
                   (one - d * z) * (one - a * qf * z) * (one - b * qf * z) /
                   (qf * (one - ab) * z * (one - z2) * (one - qf * z2)));
        Entry<F> e12{{t0, 0}, {tm, -1}, {tp, 1}};
        return {{{e11, e12}, {e21, e22}}};
    }
    case MGen::Yinv:
        throw Error("matrix Yinv is built by composition");
    }
    throw Error("unknown matrix generator");
}

PolyOp entry_to_op(const Rational& q, const Entry<RatFun>& e) {
    std::vector<ShiftTerm> ts;
    for (const auto& [coeff, k] : e)
        if (!coeff.is_zero()) ts.push_back({coeff, k, 1});
    return PolyOp::shifts(q, ts);
}

MatOp matrix_direct(MGen g, const ParamSet& p) {
    RatFun z{Laurent::variable()};
    auto ent = matrix_terms<RatFun>(g, p.q, z, RatFun(p.a), RatFun(p.b),
                                    RatFun(p.c), RatFun(p.d));
    MatOp out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.a[i][j] = entry_to_op(p.q, ent[i][j]);
    return out;
}

// Limit realization for BqJ/LqJ: substitute z, a, b, c, d ->
// x/h, h, qa/h, qc/h, (b/c)h with h a deformation variable and c kept
// symbolic, multiply Z and Zinv by an extra factor h, and let h -> 0.
// The two-component decomposition passes through this substitution without
// any rescaling of the second component (the coupling factor
// a z^{-1}(1-az)(1-bz) tends to qa(x-1)), so the matrix entries need no
// diagonal conjugation.  Variables: 0 = x, 1 = h, 2 = c.
MatOp matrix_limit(MGen g, const ParamSet& p) {
    const Rational& q = p.q;
    MRat z{MPoly::monomial({1, -1, 0})};
    MRat a{MPoly::variable(1)};
    MRat b{MPoly::monomial({0, -1, 0}, q * p.a)};
    MRat c{MPoly::monomial({0, -1, 1}, q)};
    MRat d{MPoly::monomial({0, 1, -1}, p.b)};
    auto ent = matrix_terms<MRat>(g, q, z, a, b, c, d);
    int extra = (g == MGen::Z || g == MGen::Zinv) ? 1 : 0;
    MatOp out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::vector<ShiftTerm> ts;
            for (const auto& [coeff, k] : ent[i][j]) {
                int pw = extra;
                MRat m = coeff;
                if (pw != 0) m = m * MRat(MPoly::monomial({0, pw, 0}));
                m = m.limit_at_zero(1);
                m = (p.family == Family::BqJ) ? m.subst(2, p.c)
                                              : m.limit_at_zero(2);
                RatFun rf = m.to_ratfun();
                if (!rf.is_zero()) ts.push_back({rf, k, 1});
            }
            out.a[i][j] = PolyOp::shifts(q, ts);
        }
    return out;
}

Rational nonzero(const Rational& x, const char* what) {
    if (x == 0) throw InvalidParams(std::string(what) + " vanishes");
    return x;
}

} // namespace

// -------------------------------------------------------------------------

PolyOp op_L(const ParamSet& p) {
    const Rational &q = p.q, &a = p.a, &b = p.b, &c = p.c;
    if (is_laurent_family(p.family)) {
        RatFun z{Laurent::variable()};
        return entry_to_op(
            q, L_terms<RatFun>(q, z, RatFun(a), RatFun(b), RatFun(c), RatFun(p.d)));
    }
    if (is_x_family(p.family)) {
        RatFun x{Laurent::variable()}, one{Rational(1)};
        RatFun xm2{Laurent::monomial(-2)};
        RatFun A1 = RatFun(q * a) * xm2 * (one - x) * (RatFun(c) - RatFun(b) * x);
        RatFun A2 = xm2 * (RatFun(q * a) - x) * (RatFun(q * c) - x);
        RatFun cst = RatFun(1 + q * a * b) - A1 - A2;
        return PolyOp::shifts(q, {{cst, 0, 1}, {A1, 1, 1}, {A2, -1, 1}});
    }
    throw InvalidParams("no q-difference operator at the q-Bessel level");
}

SeqOp op_M(const ParamSet& p) {
    const Rational &q = p.q, &a = p.a, &b = p.b, &c = p.c, &d = p.d;
    if (is_laurent_family(p.family)) {
        Rational abcd = p.abcd();
        auto row = [=](int n) -> std::vector<std::pair<int, Rational>> {
            if (n < 0) throw Error("recurrence index must be nonnegative");
            Rational qn = rpow(q, n);
            Rational A;
            if (n == 0)
                A = (1 - a * b) * (1 - a * c) * (1 - a * d) /
                    nonzero(a * (1 - abcd), "recurrence denominator");
            else
                A = (1 - a * b * qn) * (1 - a * c * qn) * (1 - a * d * qn) *
                    (1 - abcd * qn / q) /
                    nonzero(a * (1 - abcd * qn * qn / q) * (1 - abcd * qn * qn),
                            "recurrence denominator");
            Rational C = 0;
            if (n > 0)
                C = a * (1 - qn) * (1 - b * c * qn / q) * (1 - b * d * qn / q) *
                    (1 - c * d * qn / q) /
                    nonzero((1 - abcd * qn * qn / (q * q)) *
                                (1 - abcd * qn * qn / q),
                            "recurrence denominator");
            return {{n + 1, A}, {n - 1, C}, {n, a + 1 / a - A - C}};
        };
        return SeqOp::banded(row);
    }
    if (is_x_family(p.family)) {
        auto row = [=](int n) -> std::vector<std::pair<int, Rational>> {
            if (n < 0) throw Error("recurrence index must be nonnegative");
            Rational qn = rpow(q, n);
            Rational A = (1 - a * b * q * qn) * (1 - a * q * qn) *
                         (1 - c * q * qn) /
                         nonzero((1 - a * b * q * qn * qn) *
                                     (1 - a * b * q * q * qn * qn),
                                 "recurrence denominator");
            Rational C = 0;
            if (n > 0)
                C = -q * qn * a * (1 - qn) * (1 - b * qn) * (c - a * b * qn) /
                    nonzero((1 - a * b * qn * qn) * (1 - a * b * q * qn * qn),
                            "recurrence denominator");
            return {{n + 1, A}, {n - 1, C}, {n, 1 - A - C}};
        };
        return SeqOp::banded(row);
    }
    throw InvalidParams("no recurrence operator at the q-Bessel level");
}

SeqOp op_Lambda(const ParamSet& p) {
    return SeqOp::diagonal([p](int n) { return eigenvalue(p, n); });
}

SeqOp op_N(const ParamSet& p) {
    if (p.family != Family::AW)
        throw InvalidParams("the spectral multiplication operator needs the "
                            "top-level family");
    return SeqOp::diagonal([p](int m) -> Rational {
        return 1 / spectral(GridKind::Nu, p, m);
    });
}

// -------------------------------------------------------------------------

std::string gen_name(Gen g) {
    switch (g) {
    case Gen::Z: return "Z";
    case Gen::Zinv: return "Zinv";
    case Gen::T1: return "T1";
    case Gen::T1inv: return "T1inv";
    case Gen::T0: return "T0";
    case Gen::T0inv: return "T0inv";
    case Gen::Y: return "Y";
    case Gen::Yinv: return "Yinv";
    case Gen::D: return "D";
    case Gen::T0prime: return "T0prime";
    case Gen::Yprime: return "Yprime";
    case Gen::T0tilde: return "T0tilde";
    }
    throw Error("unknown generator");
}

PolyOp op_daha(Gen g, const ParamSet& p) {
    if (is_x_family(p.family))
        throw InvalidParams("BqJ/LqJ generators act through the 2x2 matrix "
                            "realization; use op_matrix");
    bool qbessel = p.family == Family::AWqBessel;
    if (qbessel && g != Gen::Z && g != Gen::Zinv && g != Gen::T1 &&
        g != Gen::T1inv && g != Gen::T0tilde)
        throw InvalidParams("generator " + gen_name(g) +
                            " is not defined at the q-Bessel level");

    const Rational& q = p.q;
    RatFun z{Laurent::variable()}, one{Rational(1)};
    RatFun a{p.a}, b{p.b}, c{p.c}, d{p.d}, qf{q};
    RatFun z2 = z * z;
    switch (g) {
    case Gen::Z:
        return PolyOp::mult(Laurent::variable());
    case Gen::Zinv:
        return PolyOp::mult(Laurent::monomial(-1));
    case Gen::T1: {
        RatFun c1 = ((a + b) * z - (one + a * b)) / (one - z2);
        RatFun c2 = (one - a * z) * (one - b * z) / (one - z2);
        return PolyOp::shifts(q, {{c1, 0, 1}, {c2, 0, -1}});
    }
    case Gen::T1inv: {
        RatFun den = a * b * (one - z2);
        RatFun c1 = z * ((one + a * b) * z - (a + b)) / den;
        RatFun c2 = -(one - a * z) * (one - b * z) / den;
        return PolyOp::shifts(q, {{c1, 0, 1}, {c2, 0, -1}});
    }
    case Gen::T0: {
        RatFun c1 = RatFun(1 / q) * z * ((c * d + qf) * z - (c + d) * qf) /
                    (qf - z2);
        RatFun c2 = -(c - z) * (d - z) / (qf - z2);
        return PolyOp::shifts(q, {{c1, 0, 1}, {c2, 1, -1}});
    }
    case Gen::T0inv: {
        if (p.c * p.d == 0)
            throw InvalidParams("T0inv needs cd != 0");
        RatFun den = c * d * (qf - z2);
        RatFun c1 = qf * ((c + d) * z - (c * d + qf)) / den;
        RatFun c2 = qf * (c - z) * (d - z) / den;
        return PolyOp::shifts(q, {{c1, 0, 1}, {c2, 1, -1}});
    }
    case Gen::Y: {
        RatFun t1 = z * (one + a * b - (a + b) * z) *
                    ((c + d) * qf - (c * d + qf) * z) /
                    (qf * (one - z2) * (qf - z2));
        RatFun t2 = (one - a * z) * (one - b * z) * (one - c * z) *
                    (one - d * z) / ((one - z2) * (one - qf * z2));
        RatFun t3 = (one - a * z) * (one - b * z) *
                    ((c + d) * qf * z - (c * d + qf)) /
                    (qf * (one - z2) * (one - qf * z2));
        RatFun t4 = (c - z) * (d - z) * (one + a * b - (a + b) * z) /
                    ((one - z2) * (qf - z2));
        return PolyOp::shifts(q, {{t1, 0, 1}, {t2, 1, 1}, {t3, 0, -1}, {t4, 1, -1}});
    }
    case Gen::Yinv: {
        if (p.abcd() == 0)
            throw InvalidParams("Yinv needs abcd != 0");
        RatFun ip{p.abcd()};
        RatFun t1 = qf * z * (a + b - (one + a * b) * z) *
                    (c * d + qf - (c + d) * z) / (ip * (one - z2) * (qf - z2));
        RatFun t2 = qf * (a * qf - z) * (b * qf - z) * (c - z) * (d - z) /
                    (ip * (qf - z2) * (qf * qf - z2));
        RatFun t3 = qf * (one - a * z) * (one - b * z) *
                    (c * d + qf - (c + d) * z) / (ip * (one - z2) * (qf - z2));
        RatFun t4 = qf * qf * (c - z) * (d - z) *
                    ((a + b) * z - qf * (one + a * b)) /
                    (ip * (qf - z2) * (qf * qf - z2));
        return PolyOp::shifts(q,
                              {{t1, 0, 1}, {t2, -1, 1}, {t3, 0, -1}, {t4, 1, -1}});
    }
    case Gen::D:
        return op_daha(Gen::Y, p) + (p.abcd() / q) * op_daha(Gen::Yinv, p);
    case Gen::T0prime:
        return Rational(-1) * op_daha(Gen::T0, p) -
               PolyOp::scalar(1 + p.c * p.d / q);
    case Gen::Yprime: {
        // q^{-1}cd times the inverse of Y, with the cd cancelled against the
        // abcd denominators so that the formula survives c = 0 or d = 0
        RatFun den = a * b;
        RatFun t1 = z * (a + b - (one + a * b) * z) *
                    (c * d + qf - (c + d) * z) / (den * (one - z2) * (qf - z2));
        RatFun t2 = (a * qf - z) * (b * qf - z) * (c - z) * (d - z) /
                    (den * (qf - z2) * (qf * qf - z2));
        RatFun t3 = (one - a * z) * (one - b * z) *
                    (c * d + qf - (c + d) * z) / (den * (one - z2) * (qf - z2));
        RatFun t4 = qf * (c - z) * (d - z) *
                    ((a + b) * z - qf * (one + a * b)) /
                    (den * (qf - z2) * (qf * qf - z2));
        return PolyOp::shifts(q,
                              {{t1, 0, 1}, {t2, -1, 1}, {t3, 0, -1}, {t4, 1, -1}});
    }
    case Gen::T0tilde: {
        RatFun c1 = -z / (qf - z2);
        return PolyOp::shifts(q, {{c1, 0, 1}, {-c1, 1, -1}});
    }
    }
    throw Error("unknown generator");
}

// -------------------------------------------------------------------------

VecPoly vec2_decompose(const Laurent& f, const ParamSet& p) {
    if (!is_laurent_family(p.family))
        throw InvalidParams("decomposition needs a Laurent-argument family");
    RatFun z{Laurent::variable()}, one{Rational(1)};
    RatFun a{p.a}, b{p.b};
    RatFun F{f}, Fr{f.reflect()};
    RatFun den = (a * b - one) * (one - z * z);
    RatFun f1 = ((z - a) * (z - b) * F - (one - a * z) * (one - b * z) * Fr) / den;
    RatFun f2 = (F - Fr) / (a * (a * b - one) * (z - RatFun(Laurent::monomial(-1))));
    return {f1.to_laurent(), f2.to_laurent()};
}

Laurent vec2_recompose(const VecPoly& v, const ParamSet& p) {
    Laurent one{Rational(1)}, z = Laurent::variable();
    Laurent fac = Laurent::monomial(-1) * p.a * (one - z * p.a) * (one - z * p.b);
    return v.e[0] + fac * v.e[1];
}

MatRF mat_S(const ParamSet& p) {
    RatFun z{Laurent::variable()}, zi{Laurent::monomial(-1)}, one{Rational(1)};
    RatFun a{p.a}, b{p.b};
    MatRF m;
    m.a[0][0] = one;
    m.a[0][1] = a * (one - a * z) * (one - b * z) * zi;
    m.a[1][0] = one;
    m.a[1][1] = a * (a - z) * (b - z) * zi;
    return m;
}

MatRF mat_S_inv(const ParamSet& p) {
    RatFun z{Laurent::variable()}, zi{Laurent::monomial(-1)}, one{Rational(1)};
    RatFun a{p.a}, b{p.b};
    RatFun pref = one / ((one - a * b) * (z - zi));
    MatRF m;
    // Note: this is the true inverse of S, consistent with the displayed
    // decomposition formulas; the first-row polynomial factors come out as
    // (a-z)(b-z) and (1-az)(1-bz), in this order.
    m.a[0][0] = pref * (a - z) * (b - z) * zi;
    m.a[0][1] = -pref * (one - a * z) * (one - b * z) * zi;
    m.a[1][0] = -pref / a;
    m.a[1][1] = pref / a;
    return m;
}

namespace {
MatRF mat_Z_entries(const ParamSet& p, bool inverse) {
    RatFun z{Laurent::variable()}, zi{Laurent::monomial(-1)}, one{Rational(1)};
    RatFun a{p.a}, b{p.b};
    RatFun pref = one / (a * b - one);
    RatFun s = a + b - z - zi;
    RatFun t = a * b * (z + zi) - (a + b);
    RatFun prod = a * (one - a * z) * (one - a * zi) * (one - b * z) * (one - b * zi);
    MatRF m;
    if (!inverse) {
        m.a[0][0] = pref * s;
        m.a[0][1] = -pref * prod;
        m.a[1][0] = pref / a;
        m.a[1][1] = pref * t;
    } else {
        m.a[0][0] = pref * t;
        m.a[0][1] = pref * prod;
        m.a[1][0] = -pref / a;
        m.a[1][1] = pref * s;
    }
    return m;
}
} // namespace

MatRF mat_Z(const ParamSet& p) { return mat_Z_entries(p, false); }
MatRF mat_Z_inv(const ParamSet& p) { return mat_Z_entries(p, true); }

std::string mgen_name(MGen g) {
    switch (g) {
    case MGen::T1: return "T1";
    case MGen::T1inv: return "T1inv";
    case MGen::Y: return "Y";
    case MGen::Yinv: return "Yinv";
    case MGen::Z: return "Z";
    case MGen::Zinv: return "Zinv";
    }
    throw Error("unknown matrix generator");
}

MatOp op_matrix(MGen g, const ParamSet& p) {
    if (p.family == Family::AWqBessel)
        throw InvalidParams("no 2x2 realization at the q-Bessel level");
    if (g == MGen::Yinv) {
        Rational r;
        if (is_laurent_family(p.family)) {
            if (p.c * p.d == 0)
                throw InvalidParams("matrix Yinv needs cd != 0");
            r = p.q / (p.c * p.d);
        } else {
            r = 1 / nonzero(p.b, "parameter b");
        }
        MatOp t1i = op_matrix(MGen::T1inv, p);
        MatOp y = op_matrix(MGen::Y, p);
        return (-r) * (t1i * y * t1i) - (1 + r) * t1i;
    }
    if (is_laurent_family(p.family)) return matrix_direct(g, p);
    return matrix_limit(g, p);
}

// -------------------------------------------------------------------------

namespace {

SeqOp::Row nonsym_row(const ParamSet& p) {
    if (p.family != Family::AW)
        throw InvalidParams("the four-term recurrence needs the top-level "
                            "family");
    const Rational q = p.q, a = p.a, b = p.b, c = p.c, d = p.d;
    const Rational abcd = p.abcd();
    ParamSet ps = p;
    return [=](int n) -> std::vector<std::pair<int, Rational>> {
        Rational v = spectral(GridKind::Nu, ps, n);
        Rational v2 = v * v;
        Rational h1 = 1 + a * b - a * b * (c * d / q + 1) * v;
        Rational h2 = (1 - abcd * v / q) * (1 - a * b * v);
        Rational den1 =
            nonzero((q - abcd * v2) * (q - abcd * v2 / q), "recurrence denominator");
        Rational den2 = nonzero((1 - abcd * v2 / q) * (1 - abcd * v2),
                                "recurrence denominator");
        Rational w0 = v * h1 * (q * (c + d) - c * d * (a + b) * v) / den1;
        Rational w1 = h2 * (1 - a * c * v) * (1 - a * d * v) / (a * den2);
        Rational w2 = h2 * (a * b * (c + d) * v - (a + b)) / (a * b * den2);
        Rational w3 = q * q * (1 - b * c * v / q) * (1 - b * d * v / q) * h1 /
                      (b * den1);
        return {{n, w0}, {n - 1, w1}, {-n, w2}, {-n - 1, w3}};
    };
}

SeqOp::Row nonsym_row_bqj(const ParamSet& p) {
    if (!is_x_family(p.family))
        throw InvalidParams("the two-term recurrence needs a BqJ/LqJ family");
    const Rational q = p.q, a = p.a, b = p.b, c = p.c;
    ParamSet ps = p;
    return [=](int n) -> std::vector<std::pair<int, Rational>> {
        Rational u = spectral(GridKind::Mu, ps, n);
        Rational u2 = u * u;
        Rational ca = u * (a * b * u - c) * (a * (1 + b) * q * u - 1 - q * a) /
                      nonzero((a * b * u2 - 1) * (a * b * q * u2 - 1),
                              "recurrence denominator");
        Rational cb = (1 - a * q * u) * (1 - a * b * q * u) * (1 - c * q * u) /
                      nonzero((a * b * q * q * u2 - 1) * (a * b * q * u2 - 1),
                              "recurrence denominator");
        return {{n, ca}, {-1 - n, -ca}, {n - 1, cb}, {-n, -cb}};
    };
}

} // namespace

SeqOp op_nonsym_recurrence(const ParamSet& p) {
    return SeqOp::banded(nonsym_row(p));
}

SeqOpV op_nonsym_recurrence_vec(const ParamSet& p) {
    return SeqOpV::banded(nonsym_row(p));
}

SeqOp op_nonsym_recurrence_bqj(const ParamSet& p) {
    return SeqOp::banded(nonsym_row_bqj(p));
}

SeqOpV op_nonsym_recurrence_bqj_vec(const ParamSet& p) {
    return SeqOpV::banded(nonsym_row_bqj(p));
}

// -------------------------------------------------------------------------

SeqR restrict_to_grid(const Laurent& f, const ParamSet& p, int lo, int hi) {
    return SeqR::tabulate(lo, hi, [&](int m) {
        return f.eval(1 / spectral(GridKind::Z, p, m));
    });
}

SeqOp op_T_script(const ParamSet& p) {
    const Rational a = p.a, b = p.b;
    ParamSet ps = p;
    return SeqOp::banded([=](int m) -> std::vector<std::pair<int, Rational>> {
        Rational w = 1 / spectral(GridKind::Z, ps, m);
        if (w * w == 1)
            throw GridCollision("grid point " + std::to_string(m) +
                                " has square 1");
        Rational den = 1 - w * w;
        Rational c1 = ((a + b) * w - (1 + a * b)) / den;
        Rational c2 = (1 - a * w) * (1 - b * w) / den;
        return {{m, c1}, {-m, c2}};
    });
}

SeqOp op_U(const ParamSet& p) {
    if (!is_laurent_family(p.family))
        throw InvalidParams("the transform-side Hecke operator needs a "
                            "Laurent-argument family");
    const Rational ab = p.a * p.b;
    ParamSet ps = p;
    return SeqOp::banded([=](int n) -> std::vector<std::pair<int, Rational>> {
        if (n == 0) return {{0, -ab}};
        Rational sp = spectral(GridKind::Sigma, ps, n);
        Rational sm = spectral(GridKind::Sigma, ps, -n);
        Rational beta = -sp * (ab - 1) / nonzero(sp - sm, "sigma difference");
        return {{n, -ab - beta}, {-n, beta}};
    });
}

// -------------------------------------------------------------------------

std::vector<OpInfo> operator_catalog() {
    std::vector<OpInfo> out;
    auto add = [&](const std::string& name, Family f, const std::string& dom) {
        out.push_back({name, family_name(f), dom});
    };
    for (Family f : {Family::AW, Family::CDqH, Family::ASC}) {
        add("L", f, "laurent");
        add("M", f, "sequence");
        add("Lambda", f, "sequence");
        for (Gen g : {Gen::Z, Gen::Zinv, Gen::T1, Gen::T1inv, Gen::T0,
                      Gen::T0prime, Gen::Y, Gen::Yprime})
            add(gen_name(g), f, "laurent");
        for (MGen g : {MGen::T1, MGen::T1inv, MGen::Y, MGen::Z, MGen::Zinv})
            add("mat-" + mgen_name(g), f, "matrix");
        add("T-script", f, "sequence");
        add("U", f, "sequence");
    }
    for (Gen g : {Gen::T0inv, Gen::Yinv, Gen::D})
        add(gen_name(g), Family::AW, "laurent");
    add("mat-Yinv", Family::AW, "matrix");
    add("N", Family::AW, "sequence");
    add("nonsym-recurrence", Family::AW, "sequence");
    add("nonsym-recurrence", Family::AW, "vector-sequence");
    for (Family f : {Family::BqJ, Family::LqJ}) {
        add("L", f, "x-polynomial");
        add("M", f, "sequence");
        add("Lambda", f, "sequence");
        for (MGen g : {MGen::T1, MGen::T1inv, MGen::Y, MGen::Yinv, MGen::Z,
                       MGen::Zinv})
            add("mat-" + mgen_name(g), f, "matrix");
        add("nonsym-recurrence", f, "sequence");
        add("nonsym-recurrence", f, "vector-sequence");
    }
    for (Gen g : {Gen::Z, Gen::Zinv, Gen::T1, Gen::T1inv, Gen::T0tilde})
        add(gen_name(g), Family::AWqBessel, "laurent");
    add("Lambda", Family::AWqBessel, "sequence");
    return out;
}

} // namespace qaskey
