#include "qaskey/algebra.hpp"

namespace qaskey {

namespace {

NCPoly G(const std::string& s) { return NCPoly::gen(s); }
NCPoly C(const Rational& r) { return NCPoly(r); }

struct Elem {
    Rational e1, e2, e3, e4;
};

Elem elementary(const ParamSet& p) {
    const Rational &a = p.a, &b = p.b, &c = p.c, &d = p.d;
    Elem e;
    e.e1 = a + b + c + d;
    e.e2 = a * b + a * c + b * c + a * d + b * d + c * d;
    e.e3 = a * b * c + a * b * d + a * c * d + b * c * d;
    e.e4 = a * b * c * d;
    return e;
}

// Constants for the Laurent-argument families, assembled from the
// elementary symmetric polynomials with the unused parameter slots at zero.
// (The degenerate closed forms follow by dropping the vanishing monomials;
// note that the B constant keeps the third elementary symmetric polynomial,
// not the second.)
StructureConstants laurent_constants(const ParamSet& p) {
    const Rational& q = p.q;
    Elem e = elementary(p);
    StructureConstants sc;
    sc.family = p.family;
    Rational u = (1 - 1 / q) * (1 - 1 / q);
    sc.B = u * (e.e3 + q * e.e1);
    sc.C0 = (q - 1 / q) * (q - 1 / q);
    sc.C1 = sc.C0 * e.e4 / q;
    Rational w = -(1 - q) * (1 - q) * (1 + q) / (q * q * q);
    sc.D0 = w * (e.e4 + q * e.e2 + q * q);
    sc.D1 = w * (e.e1 * e.e4 + q * e.e3);
    sc.Q0 = (1 - q) * (1 - q) / (q * q * q * q) *
            (q * q * q * q * (e.e4 - e.e2) +
             q * q * q * (e.e1 * e.e1 - e.e1 * e.e3 - 2 * e.e2) -
             q * q * (e.e2 * e.e4 + 2 * e.e4 + e.e2) +
             q * (e.e3 * e.e3 - 2 * e.e2 * e.e4 - e.e1 * e.e3) +
             e.e4 * (1 - e.e2));
    return sc;
}

StructureConstants x_constants(const ParamSet& p) {
    const Rational &q = p.q, &a = p.a, &b = p.b, &c = p.c;
    StructureConstants sc;
    sc.family = p.family;
    Rational w = (1 - q) * (1 - q);
    sc.B = w * (c + a + a * b + a * c);
    sc.C0 = 0;
    sc.C1 = q * (q - 1 / q) * (q - 1 / q) * a * b;
    sc.D0 = -w * (1 + q) * a * c;
    sc.D1 = -w * (1 + q) * a * (c + b + a * b + b * c);
    if (p.family == Family::LqJ) {
        sc.Q0 = w * a * a * (b - q) * (q * b - 1);
    } else {
        // no closed form recorded; measure the Casimir on the constant
        sc.Q0 = 0;
        Laurent v = nc_eval(casimir_element(sc, q), basic_rep(p))(
            Laurent{Rational(1)});
        sc.Q0 = v.eval(Rational(1));
        if (!(v - Laurent{sc.Q0}).is_zero())
            throw Error("Casimir did not act as a constant");
    }
    return sc;
}

} // namespace

StructureConstants structure_constants(const ParamSet& p) {
    switch (p.family) {
    case Family::AW:
    case Family::CDqH:
    case Family::ASC: return laurent_constants(p);
    case Family::BqJ:
    case Family::LqJ: return x_constants(p);
    default:
        throw InvalidParams("no quadratic algebra attached to this level");
    }
}

NCPoly quadratic_relation(int i, const StructureConstants& sc,
                          const Rational& q) {
    NCPoly K0 = G("K0"), K1 = G("K1");
    Rational s = q + 1 / q;
    if (i == 0)
        return s * (K1 * K0 * K1) - K1 * K1 * K0 - K0 * K1 * K1 - sc.B * K1 -
               sc.C0 * K0 - C(sc.D0);
    if (i == 1)
        return s * (K0 * K1 * K0) - K0 * K0 * K1 - K1 * K0 * K0 - sc.B * K0 -
               sc.C1 * K1 - C(sc.D1);
    throw Error("relation index must be 0 or 1");
}

NCPoly casimir_element(const StructureConstants& sc, const Rational& q) {
    NCPoly K0 = G("K0"), K1 = G("K1");
    Rational s = q + 1 / q, t = q + 1 + 1 / q;
    return K1 * K0 * K1 * K0 -
           (q * q + 1 + 1 / (q * q)) * (K0 * K1 * K0 * K1) +
           s * (K0 * K0 * K1 * K1) + (s * sc.C0) * (K0 * K0) +
           (s * sc.C1) * (K1 * K1) + (sc.B * t) * (K0 * K1) +
           sc.B * (K1 * K0) + (t * sc.D0) * K0 + (t * sc.D1) * K1;
}

std::map<std::string, PolyOp> basic_rep(const ParamSet& p) {
    Laurent mult = (p.family == Family::BqJ || p.family == Family::LqJ)
                       ? Laurent::monomial(1)
                       : Laurent::monomial(1) + Laurent::monomial(-1);
    return {{"K0", op_L(p)}, {"K1", PolyOp::mult(mult)}};
}

std::map<std::string, SeqOp> seq_rep(const ParamSet& p) {
    return {{"K0", op_Lambda(p)}, {"K1", op_M(p)}};
}

std::vector<Laurent> rep_basis(const ParamSet& p, int max_deg) {
    return (p.family == Family::BqJ || p.family == Family::LqJ)
               ? x_basis(max_deg)
               : symmetric_basis(max_deg);
}

CheckResult seq_relation_zero(const std::string& id, const NCPoly& rel,
                              const std::map<std::string, SeqOp>& bind, int lo,
                              int hi, int pad) {
    SeqOp A = nc_eval(rel, bind);
    for (int k = lo; k <= hi + pad; ++k) {
        SeqR delta = SeqR::tabulate(
            lo, hi + pad, [&](int n) { return Rational(n == k ? 1 : 0); });
        SeqR out = A(delta);
        for (int n = lo; n <= hi; ++n) {
            if (!out.has(n))
                return {id, false,
                        "window shrank below index " + std::to_string(n)};
            if (out.at(n) != 0)
                return {id, false,
                        "nonzero at n=" + std::to_string(n) +
                            " on delta_" + std::to_string(k) + ": " +
                            to_string(out.at(n))};
        }
    }
    return {id, true, ""};
}

namespace {

void add_quadratic_checks(Report& r, const ParamSet& p,
                          const std::function<CheckResult(
                              const std::string&, const NCPoly&)>& zero) {
    StructureConstants sc = structure_constants(p);
    const Rational& q = p.q;
    r.add(zero("relation 0", quadratic_relation(0, sc, q)));
    r.add(zero("relation 1", quadratic_relation(1, sc, q)));
    NCPoly Q = casimir_element(sc, q);
    r.add(zero("Casimir commutes with K0", Q * G("K0") - G("K0") * Q));
    r.add(zero("Casimir commutes with K1", Q * G("K1") - G("K1") * Q));
    r.add(zero("Casimir acts as the constant", Q - C(sc.Q0)));
}

} // namespace

Report check_quadratic_basic(const ParamSet& p, int max_deg) {
    Report r{family_name(p.family) + " quadratic algebra, basic representation", {}};
    auto bind = basic_rep(p);
    auto basis = rep_basis(p, max_deg);
    auto zero = [&](const std::string& id, const NCPoly& rel) {
        return op_zero_on_basis(id, nc_eval(rel, bind), basis);
    };
    add_quadratic_checks(r, p, zero);
    return r;
}

Report check_quadratic_seq(const ParamSet& p, int max_deg) {
    Report r{family_name(p.family) + " quadratic algebra, sequence representation", {}};
    auto bind = seq_rep(p);
    auto zero = [&](const std::string& id, const NCPoly& rel) {
        return seq_relation_zero(id, rel, bind, 0, max_deg, 8);
    };
    add_quadratic_checks(r, p, zero);
    return r;
}

// ---------------------------------------------------------------------------

SymmetricForm symmetric_form(const StructureConstants& sc, const Rational& q,
                             const Rational& qh, const Rational& r0,
                             const Rational& r1) {
    if (qh * qh != q || r0 * r0 != sc.C0 || r1 * r1 != sc.C1)
        throw InvalidParams("supplied values are not the required square roots");
    SymmetricForm t;
    t.qh = qh;
    t.r0 = r0;
    t.r1 = r1;
    Rational s = q - 1 / q;
    t.al0 = -s * sc.D0 / (sc.C0 * r1);
    t.al1 = -s * sc.D1 / (r0 * sc.C1);
    t.al2 = (qh + 1 / qh) * sc.B / (r0 * r1);
    return t;
}

std::map<std::string, PolyOp>
symmetric_rep(const std::map<std::string, PolyOp>& krep, const SymmetricForm& t,
              const Rational& q) {
    const PolyOp &K0 = krep.at("K0"), &K1 = krep.at("K1");
    Rational s = q - 1 / q;
    Rational B = t.al2 * t.r0 * t.r1 / (t.qh + 1 / t.qh);
    PolyOp comm = t.qh * (K0 * K1) - (1 / t.qh) * (K1 * K0);
    PolyOp A2 =
        (s / (t.r0 * t.r1)) *
        (Rational(-1) * comm + PolyOp::scalar(B / (t.qh - 1 / t.qh)));
    return {{"A0", (s / t.r1) * K0}, {"A1", (s / t.r0) * K1}, {"A2", A2}};
}

NCPoly symmetric_relation(int i, const SymmetricForm& t, const Rational& q) {
    auto A = [](int j) { return G("A" + std::to_string(((j % 3) + 3) % 3)); };
    Rational al[3] = {t.al0, t.al1, t.al2};
    if (i < 0 || i > 2) throw Error("relation index must be 0, 1 or 2");
    NCPoly comm = t.qh * (A(i + 1) * A(i + 2)) -
                  (1 / t.qh) * (A(i + 2) * A(i + 1));
    return (1 / (q - 1 / q)) * comm + A(i) - C(al[i]);
}

NCPoly symmetric_casimir(const SymmetricForm& t, const Rational& q) {
    NCPoly A0 = G("A0"), A1 = G("A1"), A2 = G("A2");
    return t.qh * (A0 * A1 * A2) + q * (A0 * A0) + (1 / q) * (A1 * A1) +
           q * (A2 * A2) - ((1 + q) * t.al0) * A0 -
           ((1 + 1 / q) * t.al1) * A1 - ((1 + q) * t.al2) * A2;
}

StructureConstants symmetric_back(const SymmetricForm& t, const Rational& q,
                                  const Rational& c0, const Rational& c1) {
    if (c0 == 0 || c1 == 0) throw InvalidParams("rescaling constants must be nonzero");
    StructureConstants sc;
    Rational s2 = (q - 1 / q) * (q - 1 / q);
    sc.C0 = s2 / (c1 * c1);
    sc.C1 = s2 / (c0 * c0);
    sc.B = s2 * t.al2 / ((t.qh + 1 / t.qh) * c0 * c1);
    sc.D0 = -s2 * t.al0 / (c0 * c1 * c1);
    sc.D1 = -s2 * t.al1 / (c0 * c0 * c1);
    sc.Q0 = 0; // fixed separately through the Casimir of the symmetric form
    return sc;
}

// ---------------------------------------------------------------------------

std::string presentation_name(Presentation pr) {
    switch (pr) {
    case Presentation::AW71: return "top level, braid generators";
    case Presentation::AW110: return "top level, T1 T0 Z";
    case Presentation::AW75: return "top level, T1 Y Z";
    case Presentation::CDqH75d: return "d=0 level, T1 T0 Z";
    case Presentation::CDqH112: return "d=0 level, T1 Y Y' Z";
    case Presentation::CDqH151: return "d=0 level, T1 Y Z";
    case Presentation::ASC: return "c=d=0 level, T1 T0 Z";
    case Presentation::AWqB150: return "nilpotent-T0 level";
    case Presentation::BqJHgamma: return "2x2 limit, T1 T0 X X'";
    case Presentation::BqJ113: return "2x2 limit, T1 Y X X'";
    case Presentation::LqJ: return "2x2 limit at c=0, T1 Y X X'";
    case Presentation::LqJt146: return "rescaled-X 2x2 limit, T0 form";
    case Presentation::LqJt147: return "rescaled-X 2x2 limit, Y form";
    }
    throw Error("unknown presentation");
}

bool presentation_is_matrix(Presentation pr) {
    switch (pr) {
    case Presentation::BqJHgamma:
    case Presentation::BqJ113:
    case Presentation::LqJ:
    case Presentation::LqJt146:
    case Presentation::LqJt147: return true;
    default: return false;
    }
}

std::vector<std::pair<std::string, NCPoly>> daha_relations(Presentation pr,
                                                           const ParamSet& p) {
    const Rational &q = p.q, &a = p.a, &b = p.b, &c = p.c, &d = p.d;
    NCPoly T1 = G("T1"), T1i = G("T1i"), T0 = G("T0"), T0i = G("T0i");
    NCPoly Z = G("Z"), Zi = G("Zi"), Y = G("Y"), Yi = G("Yi"), Yp = G("Yp");
    NCPoly one = C(Rational(1));
    std::vector<std::pair<std::string, NCPoly>> rels;
    auto unit = [&] {
        rels.push_back({"Z Zi = 1", Z * Zi - one});
        rels.push_back({"Zi Z = 1", Zi * Z - one});
    };
    switch (pr) {
    case Presentation::AW71: {
        NCPoly Tc1 = G("Tc1"), Tc0 = G("Tc0");
        rels.push_back({"T1 quadratic", (T1 + C(a * b)) * (T1 + one)});
        rels.push_back({"T0 quadratic", (T0 + C(c * d / q)) * (T0 + one)});
        rels.push_back({"Tc1 quadratic", (a * Tc1 + one) * (b * Tc1 + one)});
        rels.push_back({"Tc0 quadratic", (c * Tc0 + C(q)) * (d * Tc0 + C(q))});
        rels.push_back({"product is 1", Tc1 * T1 * T0 * Tc0 - one});
        break;
    }
    case Presentation::AW110:
        rels.push_back({"T1 quadratic", (T1 + C(a * b)) * (T1 + one)});
        rels.push_back({"T0 quadratic", (T0 + C(c * d / q)) * (T0 + one)});
        rels.push_back(
            {"cross a,b", (a * (Zi * T1i) + one) * (b * (Zi * T1i) + one)});
        rels.push_back(
            {"cross c,d", (c * (T0i * Z) + C(q)) * (d * (T0i * Z) + C(q))});
        unit();
        break;
    case Presentation::AW75:
        rels.push_back({"T1 quadratic", (T1 + C(a * b)) * (T1 + one)});
        rels.push_back(
            {"Y quadratic", (T1i * Y + C(c * d / q)) * (T1i * Y + one)});
        rels.push_back(
            {"cross a,b", (a * (Zi * T1i) + one) * (b * (Zi * T1i) + one)});
        rels.push_back({"cross c,d", (C(c) + q * (Zi * T1i * Y)) *
                                         (C(d) + q * (Zi * T1i * Y))});
        unit();
        break;
    case Presentation::CDqH75d:
    case Presentation::ASC:
        rels.push_back({"T1 quadratic", (T1 + C(a * b)) * (T1 + one)});
        rels.push_back(
            {"cross a,b", (a * (Zi * T1i) + one) * (b * (Zi * T1i) + one)});
        rels.push_back({"mixed T0 Z", q * (Zi * T0) - T0 * Z - Z + C(c)});
        rels.push_back({"T0 idempotent pair", T0 * (T0 + one)});
        unit();
        break;
    case Presentation::CDqH112:
        rels.push_back({"T1 quadratic", (T1 + C(a * b)) * (T1 + one)});
        rels.push_back({"Y Y' linear", T1i * Y + Yp * T1 + one});
        rels.push_back(
            {"cross a,b", (a * (Zi * T1i) + one) * (b * (Zi * T1i) + one)});
        rels.push_back({"mixed Y Z", q * (Zi * T1i * Y) + Yp * T1 * Z + C(c)});
        rels.push_back({"Y Y' = 0", Y * Yp});
        rels.push_back({"Y' Y = 0", Yp * Y});
        unit();
        break;
    case Presentation::CDqH151:
        rels.push_back({"T1 quadratic", (T1 + C(a * b)) * (T1 + one)});
        rels.push_back(
            {"cross a,b", (a * (Zi * T1i) + one) * (b * (Zi * T1i) + one)});
        rels.push_back(
            {"mixed Y Z", q * (Zi * T1i * Y) - T1i * Y * Z - Z + C(c)});
        // the substituted pair-vanishing relation: Y T1^{-1} Y + Y = 0
        rels.push_back({"Y sandwich", Y * T1i * Y + Y});
        unit();
        break;
    case Presentation::AWqB150: {
        NCPoly Tt0 = G("Tt0");
        rels.push_back({"T1 quadratic", (T1 + C(a * b)) * (T1 + one)});
        rels.push_back(
            {"cross a,b", (a * (Zi * T1i) + one) * (b * (Zi * T1i) + one)});
        rels.push_back({"mixed Tt0 Z", q * (Zi * Tt0) - Tt0 * Z + one});
        rels.push_back({"Tt0 nilpotent", Tt0 * Tt0});
        unit();
        break;
    }
    case Presentation::BqJHgamma: {
        NCPoly X = G("X"), Xp = G("Xp");
        rels.push_back({"T1 quadratic", (T1 + C(q * a)) * (T1 + one)});
        rels.push_back({"T0 quadratic", (T0 + C(b)) * (T0 + one)});
        rels.push_back({"mixed T1 X", T1 * X + (q * a) * (Xp * T1i) + C(q * a)});
        rels.push_back(
            {"mixed T0 X", b * (T0i * X) + q * (Xp * T0) + C(q * c)});
        rels.push_back({"X X' = 0", X * Xp});
        rels.push_back({"X' X = 0", Xp * X});
        break;
    }
    case Presentation::BqJ113:
    case Presentation::LqJ: {
        NCPoly X = G("X"), Xp = G("Xp");
        rels.push_back({"T1 quadratic", (T1 + C(q * a)) * (T1 + one)});
        rels.push_back({"Y quadratic", (T1i * Y + C(b)) * (T1i * Y + one)});
        rels.push_back({"mixed T1 X", T1 * X + (q * a) * (Xp * T1i) + C(q * a)});
        rels.push_back(
            {"mixed Y X", b * (Yi * T1 * X) + q * (Xp * T1i * Y) + C(q * c)});
        rels.push_back({"X X' = 0", X * Xp});
        rels.push_back({"X' X = 0", Xp * X});
        break;
    }
    case Presentation::LqJt146:
    case Presentation::LqJt147: {
        // relations of the rescaled-X algebra, with the coefficients fixed
        // against the 2x2 realization through the substitution
        // Xt = -X Y^{-1}, Xt' = -q a^{-2} Y X'
        NCPoly Xt = G("Xt"), Xtp = G("Xtp");
        rels.push_back({"T1 quadratic", (T1 + C(q * a)) * (T1 + one)});
        if (pr == Presentation::LqJt146)
            rels.push_back({"T0 quadratic", (T0 + C(b)) * (T0 + one)});
        else
            rels.push_back({"Y quadratic", (T1i * Y + C(b)) * (T1i * Y + one)});
        rels.push_back(
            {"mixed T1 Xt", T1 * Xt + (a * a / b) * (Xtp * T1i)});
        if (pr == Presentation::LqJt146)
            rels.push_back({"mixed T0 Xt",
                            b * (T0i * Xt) + (a / b) * (Xtp * T0) + C(q)});
        else
            rels.push_back({"mixed Y Xt", b * (Yi * T1 * Xt) +
                                              (a / b) * (Xtp * T1i * Y) +
                                              C(q)});
        rels.push_back({"Xt Xt' = 0", Xt * Xtp});
        rels.push_back({"Xt' Xt = 0", Xtp * Xt});
        break;
    }
    }
    return rels;
}

std::map<std::string, PolyOp> daha_scalar_bindings(Presentation pr,
                                                   const ParamSet& p) {
    std::map<std::string, PolyOp> bind;
    bind["T1"] = op_daha(Gen::T1, p);
    bind["T1i"] = op_daha(Gen::T1inv, p);
    bind["Z"] = op_daha(Gen::Z, p);
    bind["Zi"] = op_daha(Gen::Zinv, p);
    switch (pr) {
    case Presentation::AW71:
        bind["T0"] = op_daha(Gen::T0, p);
        bind["Tc1"] = bind["Zi"] * bind["T1i"];
        bind["Tc0"] = op_daha(Gen::T0inv, p) * bind["Z"];
        break;
    case Presentation::AW110:
        bind["T0"] = op_daha(Gen::T0, p);
        bind["T0i"] = op_daha(Gen::T0inv, p);
        break;
    case Presentation::AW75: bind["Y"] = op_daha(Gen::Y, p); break;
    case Presentation::CDqH75d:
    case Presentation::ASC: bind["T0"] = op_daha(Gen::T0, p); break;
    case Presentation::CDqH112:
        bind["Y"] = op_daha(Gen::Y, p);
        bind["Yp"] = op_daha(Gen::Yprime, p);
        break;
    case Presentation::CDqH151: bind["Y"] = op_daha(Gen::Y, p); break;
    case Presentation::AWqB150: bind["Tt0"] = op_daha(Gen::T0tilde, p); break;
    default: throw Error("not a scalar presentation");
    }
    return bind;
}

std::map<std::string, MatOp> daha_matrix_bindings(Presentation pr,
                                                  const ParamSet& p) {
    if (!presentation_is_matrix(pr)) throw Error("not a matrix presentation");
    std::map<std::string, MatOp> bind;
    bind["T1"] = op_matrix(MGen::T1, p);
    bind["T1i"] = op_matrix(MGen::T1inv, p);
    MatOp Y = op_matrix(MGen::Y, p), Yi = op_matrix(MGen::Yinv, p);
    MatOp X = op_matrix(MGen::Z, p), Xp = op_matrix(MGen::Zinv, p);
    bind["Y"] = Y;
    bind["Yi"] = Yi;
    bind["T0"] = bind["T1i"] * Y;
    bind["T0i"] = Yi * bind["T1"];
    if (pr == Presentation::LqJt146 || pr == Presentation::LqJt147) {
        bind["Xt"] = Rational(-1) * (X * Yi);
        bind["Xtp"] = (-p.q / (p.a * p.a)) * (Y * Xp);
    } else {
        bind["X"] = X;
        bind["Xp"] = Xp;
    }
    return bind;
}

Report check_daha(Presentation pr, const ParamSet& p, int max_deg) {
    Report r{presentation_name(pr), {}};
    auto rels = daha_relations(pr, p);
    if (presentation_is_matrix(pr)) {
        auto bind = daha_matrix_bindings(pr, p);
        auto basis = vec_x_basis(max_deg);
        for (const auto& [name, rel] : rels)
            r.add(op_zero_on_basis(name, nc_eval(rel, bind), basis));
    } else {
        auto bind = daha_scalar_bindings(pr, p);
        auto basis = laurent_basis(max_deg);
        for (const auto& [name, rel] : rels)
            r.add(op_zero_on_basis(name, nc_eval(rel, bind), basis));
    }
    return r;
}

// ---------------------------------------------------------------------------

std::string algebra_duality_name(AlgebraDuality d) {
    switch (d) {
    case AlgebraDuality::AW: return "top-level duality";
    case AlgebraDuality::CDqHBqJ: return "d=0 level to x-level duality";
    case AlgebraDuality::ASCLqJ: return "c=d=0 level to x-level duality";
    case AlgebraDuality::QInverse: return "base-inversion symmetry";
    }
    throw Error("unknown duality");
}

namespace {

void constant_check(Report& r, const std::string& id, const Rational& got,
                    const Rational& want) {
    r.add(id, got == want,
          "got " + to_string(got) + ", want " + to_string(want));
}

// transported generators satisfy the target-side relations and Casimir
void rep_check(Report& r, const ParamSet& src, const StructureConstants& tgt,
               const PolyOp& K0, const PolyOp& K1, int max_deg) {
    std::map<std::string, PolyOp> bind{{"K0", K0}, {"K1", K1}};
    auto basis = rep_basis(src, max_deg);
    const Rational& q = src.q;
    r.add(op_zero_on_basis(
        "transported relation 0",
        nc_eval(quadratic_relation(0, tgt, q), bind), basis));
    r.add(op_zero_on_basis(
        "transported relation 1",
        nc_eval(quadratic_relation(1, tgt, q), bind), basis));
    r.add(op_zero_on_basis(
        "transported Casimir constant",
        nc_eval(casimir_element(tgt, q) - NCPoly(tgt.Q0), bind), basis));
}

} // namespace

Report check_algebra_duality(AlgebraDuality d, const ParamSet& p, int max_deg) {
    Report r{algebra_duality_name(d), {}};
    StructureConstants sc = structure_constants(p);
    auto bind = basic_rep(p);
    const Rational& a = p.a;
    switch (d) {
    case AlgebraDuality::AW: {
        DualParams dp = dual_params(p);
        ParamSet pd = dp.as_params();
        StructureConstants scd = structure_constants(pd);
        const Rational& at = dp.at;
        constant_check(r, "B transform", scd.B, a / (at * at) * sc.B);
        constant_check(r, "C0 transform", scd.C0, sc.C1 / (at * at));
        constant_check(r, "C1 transform", scd.C1, a * a * sc.C0);
        constant_check(r, "D0 transform", scd.D0, a / (at * at) * sc.D1);
        constant_check(r, "D1 transform", scd.D1, a * a / at * sc.D0);
        constant_check(r, "Q0 transform", scd.Q0,
                       a * a / (at * at) * sc.Q0);
        rep_check(r, p, scd, a * bind.at("K1"), (1 / at) * bind.at("K0"),
                  max_deg);
        break;
    }
    case AlgebraDuality::CDqHBqJ:
    case AlgebraDuality::ASCLqJ: {
        ParamSet pd = d == AlgebraDuality::CDqHBqJ ? dual_triple(p)
                                                   : dual_pair(p);
        StructureConstants scd = structure_constants(pd);
        constant_check(r, "B transform", scd.B, a * sc.B);
        constant_check(r, "C0 transform", scd.C0, sc.C1);
        constant_check(r, "C1 transform", scd.C1, a * a * sc.C0);
        constant_check(r, "D0 transform", scd.D0, a * sc.D1);
        constant_check(r, "D1 transform", scd.D1, a * a * sc.D0);
        constant_check(r, "Q0 transform", scd.Q0, a * a * sc.Q0);
        rep_check(r, p, scd, a * bind.at("K1"), bind.at("K0"), max_deg);
        break;
    }
    case AlgebraDuality::QInverse: {
        ParamSet pi = p;
        pi.q = 1 / p.q;
        pi.a = 1 / p.a;
        pi.b = 1 / p.b;
        pi.c = 1 / p.c;
        pi.d = 1 / p.d;
        StructureConstants sci = structure_constants(pi);
        Rational c0 = p.q / p.abcd();
        constant_check(r, "B transform", sci.B, c0 * sc.B);
        constant_check(r, "C0 transform", sci.C0, sc.C0);
        constant_check(r, "C1 transform", sci.C1, c0 * c0 * sc.C1);
        constant_check(r, "D0 transform", sci.D0, c0 * sc.D0);
        constant_check(r, "D1 transform", sci.D1, c0 * c0 * sc.D1);
        constant_check(r, "Q0 transform", sci.Q0, c0 * c0 * sc.Q0);
        rep_check(r, p, sci, c0 * bind.at("K0"), bind.at("K1"), max_deg);
        break;
    }
    }
    return r;
}

} // namespace qaskey
