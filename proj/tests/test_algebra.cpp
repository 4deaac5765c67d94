#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaskey/algebra.hpp"

using namespace qaskey;

namespace {

const std::vector<Family> kAlgebraFamilies = {Family::AW, Family::CDqH,
                                              Family::ASC, Family::BqJ,
                                              Family::LqJ};

void require_pass(const Report& r) {
    for (const CheckResult& c : r.checks) {
        INFO(r.suite << " / " << c.id << ": " << c.witness);
        CHECK(c.pass);
    }
}

} // namespace

TEST_CASE("structure constants: spot values and degenerations") {
    ParamSet p2 = param_set_P2(Family::AW);
    StructureConstants sc = structure_constants(p2);
    CHECK(sc.C0 == (p2.q - 1 / p2.q) * (p2.q - 1 / p2.q));

    // d = 0 degeneration agrees with the three-parameter family
    ParamSet c3 = param_set_P2(Family::CDqH);
    ParamSet awd0 = c3;
    awd0.family = Family::AW;
    StructureConstants a0 = structure_constants(awd0);
    StructureConstants sc3 = structure_constants(c3);
    CHECK(a0.B == sc3.B);
    CHECK(a0.C0 == sc3.C0);
    CHECK(a0.C1 == sc3.C1);
    CHECK(a0.D0 == sc3.D0);
    CHECK(a0.D1 == sc3.D1);
    CHECK(a0.Q0 == sc3.Q0);

    // closed-form Casimir constant of the two-parameter x-level family
    ParamSet pl = param_set_P2(Family::LqJ);
    StructureConstants scl = structure_constants(pl);
    CHECK(scl.Q0 == rat(3, 400));
    // cross-check against the Casimir acting on the constant polynomial
    Laurent v = nc_eval(casimir_element(scl, pl.q), basic_rep(pl))(
        Laurent{Rational(1)});
    CHECK(v == Laurent{scl.Q0});
}

TEST_CASE("quadratic relations and Casimir in the basic representation") {
    for (Family f : kAlgebraFamilies)
        require_pass(check_quadratic_basic(param_set_P2(f), 6));
    require_pass(check_quadratic_basic(param_set_P1(), 6));
}

TEST_CASE("quadratic relations and Casimir in the sequence representation") {
    for (Family f : kAlgebraFamilies)
        require_pass(check_quadratic_seq(param_set_P2(f), 6));
    require_pass(check_quadratic_seq(param_set_P1(), 6));
}

TEST_CASE("checker soundness: perturbed constants are rejected") {
    for (Family f : {Family::AW, Family::BqJ}) {
        ParamSet p = param_set_P2(f);
        StructureConstants sc = structure_constants(p);
        auto bind = basic_rep(p);
        auto basis = rep_basis(p, 4);
        auto rel_fails = [&](const StructureConstants& bad) {
            CheckResult c0 = op_zero_on_basis(
                "r0", nc_eval(quadratic_relation(0, bad, p.q), bind), basis);
            CheckResult c1 = op_zero_on_basis(
                "r1", nc_eval(quadratic_relation(1, bad, p.q), bind), basis);
            return !(c0.pass && c1.pass);
        };
        for (int which = 0; which < 5; ++which) {
            StructureConstants bad = sc;
            Rational* slot[] = {&bad.B, &bad.C0, &bad.C1, &bad.D0, &bad.D1};
            *slot[which] += rat(1, 7);
            INFO("family " << family_name(f) << ", slot " << which);
            CHECK(rel_fails(bad));
        }
        StructureConstants bad = sc;
        bad.Q0 += rat(1, 7);
        CheckResult cq = op_zero_on_basis(
            "q0", nc_eval(casimir_element(bad, p.q) - NCPoly(bad.Q0), bind),
            basis);
        CHECK_FALSE(cq.pass);
        CHECK_FALSE(cq.witness.empty());
        // perturbed generator
        std::map<std::string, PolyOp> pb = bind;
        pb["K0"] = pb["K0"] + PolyOp::scalar(rat(1, 7));
        CheckResult cp = op_zero_on_basis(
            "pg", nc_eval(quadratic_relation(1, sc, p.q), pb), basis);
        CHECK_FALSE(cp.pass);
        CHECK_FALSE(cp.witness.empty());
    }
}

TEST_CASE("word-reversal invariance of the relations and the Casimir") {
    ParamSet p = param_set_P2(Family::AW);
    StructureConstants sc = structure_constants(p);
    for (int i = 0; i < 2; ++i) {
        NCPoly r = quadratic_relation(i, sc, p.q);
        CHECK(r.reversed() == r);
    }
    // the Casimir is not reversal-invariant word by word, but its reversal
    // acts by the same constant (invariance modulo the relations)
    NCPoly Q = casimir_element(sc, p.q);
    CheckResult c = op_zero_on_basis(
        "reversed Casimir", nc_eval(Q.reversed() - NCPoly(sc.Q0), basic_rep(p)),
        rep_basis(p, 5));
    INFO(c.witness);
    CHECK(c.pass);
}

TEST_CASE("the constants determine the parameters (elementary symmetric)") {
    ParamSet p = param_set_P2(Family::AW);
    const Rational &q = p.q, &a = p.a, &b = p.b, &c = p.c, &d = p.d;
    StructureConstants sc = structure_constants(p);
    // triangular solve for the elementary symmetric polynomials
    Rational e4 = q * sc.C1 / ((q - 1 / q) * (q - 1 / q));
    Rational w = -(1 - q) * (1 - q) * (1 + q) / (q * q * q);
    Rational e2 = (sc.D0 / w - e4 - q * q) / q;
    Rational beta = sc.B / ((1 - 1 / q) * (1 - 1 / q)); // e3 + q e1
    Rational delta = sc.D1 / w;                         // e1 e4 + q e3
    Rational e1 = (delta - q * beta) / (e4 - q * q);
    Rational e3 = beta - q * e1;
    CHECK(e1 == a + b + c + d);
    CHECK(e2 == a * b + a * c + b * c + a * d + b * d + c * d);
    CHECK(e3 == a * b * c + a * b * d + a * c * d + b * c * d);
    CHECK(e4 == a * b * c * d);
}

TEST_CASE("symmetric three-generator form") {
    ParamSet p = param_set_P1();
    const Rational& q = p.q;
    StructureConstants sc = structure_constants(p);
    Rational s = q - 1 / q;
    SymmetricForm t = symmetric_form(sc, q, rat(1, 2), s, s);
    auto krep = basic_rep(p);
    auto arep = symmetric_rep(krep, t, q);
    auto basis = symmetric_basis(6);
    for (int i = 0; i < 3; ++i)
        require_pass(Report{
            "symmetric relations",
            {op_zero_on_basis("relation " + std::to_string(i),
                              nc_eval(symmetric_relation(i, t, q), arep),
                              basis)}});

    // the Casimir of the symmetric form acts as a constant...
    PolyOp W = nc_eval(symmetric_casimir(t, q), arep);
    Laurent w1 = W(Laurent{Rational(1)});
    CHECK(w1.is_constant());
    Rational om0 = w1.eval(rat(5));
    require_pass(Report{"symmetric Casimir",
                        {op_zero_on_basis(
                            "acts as a constant",
                            nc_eval(symmetric_casimir(t, q), arep) -
                                PolyOp::scalar(om0),
                            basis)}});
    // ... and the constant matches the Casimir constant of the quadratic
    // form, with an alpha_2^2 offset
    CHECK(om0 == s * s / (sc.C0 * sc.C1) * sc.Q0 - t.al2 * t.al2);

    // invariance of the Casimir under the order-two anti-isomorphism that
    // swaps the first two generators and the first two central constants
    SymmetricForm t2 = t;
    std::swap(t2.al0, t2.al1);
    std::swap(t2.r0, t2.r1);
    std::map<std::string, PolyOp> swapped{
        {"A0", arep.at("A1")}, {"A1", arep.at("A0")}, {"A2", arep.at("A2")}};
    require_pass(Report{"swapped symmetric form",
                        {op_zero_on_basis(
                            "Casimir invariant",
                            nc_eval(symmetric_casimir(t2, q).reversed(),
                                    swapped) -
                                PolyOp::scalar(om0),
                            basis)}});
    // the swapped form still satisfies its cyclic relations
    for (int i = 0; i < 3; ++i)
        require_pass(Report{
            "swapped symmetric relations",
            {op_zero_on_basis("relation " + std::to_string(i),
                              nc_eval(symmetric_relation(i, t2, q).reversed(),
                                      swapped),
                              basis)}});

    // round trip back to the quadratic-relation constants
    Rational c0 = s / t.r1, c1 = s / t.r0;
    StructureConstants back = symmetric_back(t, q, c0, c1);
    CHECK(back.B == sc.B);
    CHECK(back.C0 == sc.C0);
    CHECK(back.C1 == sc.C1);
    CHECK(back.D0 == sc.D0);
    CHECK(back.D1 == sc.D1);
    CHECK(sc.Q0 == s * s / ((c0 * c1) * (c0 * c1)) * (om0 + t.al2 * t.al2));

    // generic rescaling constants: the recovered structure constants are the
    // rescaled originals and the rescaled generators satisfy their relations
    Rational g0 = rat(2), g1 = rat(3);
    StructureConstants gen = symmetric_back(t, q, g0, g1);
    gen.Q0 = s * s / ((g0 * g1) * (g0 * g1)) * (om0 + t.al2 * t.al2);
    Rational f0 = s / (g0 * t.r1), f1 = s / (g1 * t.r0);
    CHECK(gen.B == f0 * f1 * sc.B);
    CHECK(gen.C0 == f1 * f1 * sc.C0);
    CHECK(gen.C1 == f0 * f0 * sc.C1);
    CHECK(gen.D0 == f0 * f1 * f1 * sc.D0);
    CHECK(gen.D1 == f0 * f0 * f1 * sc.D1);
    CHECK(gen.Q0 == f0 * f0 * f1 * f1 * sc.Q0);
    std::map<std::string, PolyOp> kg{{"K0", (1 / g0) * arep.at("A0")},
                                     {"K1", (1 / g1) * arep.at("A1")}};
    Report rg{"rescaled generators", {}};
    rg.add(op_zero_on_basis("relation 0",
                            nc_eval(quadratic_relation(0, gen, q), kg), basis));
    rg.add(op_zero_on_basis("relation 1",
                            nc_eval(quadratic_relation(1, gen, q), kg), basis));
    rg.add(op_zero_on_basis(
        "Casimir constant",
        nc_eval(casimir_element(gen, q) - NCPoly(gen.Q0), kg), basis));
    require_pass(rg);

    CHECK_THROWS_AS(symmetric_form(sc, q, rat(1, 3), s, s), InvalidParams);
}

TEST_CASE("Hecke-type presentations: scalar realizations") {
    require_pass(check_daha(Presentation::AW71, param_set_P1(), 5));
    for (Presentation pr :
         {Presentation::AW71, Presentation::AW110, Presentation::AW75})
        require_pass(check_daha(pr, param_set_P2(Family::AW), 5));
    for (Presentation pr : {Presentation::CDqH75d, Presentation::CDqH112,
                            Presentation::CDqH151})
        require_pass(check_daha(pr, param_set_P2(Family::CDqH), 5));
    require_pass(check_daha(Presentation::ASC, param_set_P2(Family::ASC), 5));
    require_pass(
        check_daha(Presentation::AWqB150, param_set_P2(Family::AWqBessel), 5));
}

TEST_CASE("Hecke-type presentations: 2x2 matrix realizations") {
    for (Presentation pr : {Presentation::BqJHgamma, Presentation::BqJ113})
        require_pass(check_daha(pr, param_set_P2(Family::BqJ), 4));
    for (Presentation pr : {Presentation::LqJ, Presentation::LqJt146,
                            Presentation::LqJt147})
        require_pass(check_daha(pr, param_set_P2(Family::LqJ), 4));
}

TEST_CASE("nilpotent-T0 presentation is the c=0 algebra in disguise") {
    ParamSet pb = param_set_P2(Family::AWqBessel);
    ParamSet pa{Family::ASC, pb.q, pb.a, pb.b, 0, 0};
    auto basis = laurent_basis(5);
    // T1 and Z act identically in the two basic representations
    for (Gen g : {Gen::T1, Gen::T1inv, Gen::Z, Gen::Zinv})
        require_pass(
            Report{"shared generators",
                   {op_equal_on_basis(gen_name(g), op_daha(g, pb),
                                      op_daha(g, pa), basis)}});
    // the substituted generator satisfies every relation of the c=0 suite
    auto bind = daha_scalar_bindings(Presentation::AWqB150, pb);
    bind["T0"] = Rational(-pb.q) * (bind.at("Tt0") * bind.at("Zi")) -
                 PolyOp::identity();
    Report r{"substituted suite"};
    for (const auto& [name, rel] : daha_relations(Presentation::ASC, pa))
        r.add(op_zero_on_basis(name, nc_eval(rel, bind), basis));
    require_pass(r);
    // and conversely the nilpotent generator recovered from the c=0 side
    auto binda = daha_scalar_bindings(Presentation::ASC, pa);
    binda["Tt0"] = (-1 / pa.q) * ((binda.at("T0") + PolyOp::identity()) *
                                  binda.at("Z"));
    Report r2{"recovered nilpotent generator"};
    for (const auto& [name, rel] : daha_relations(Presentation::AWqB150, pb))
        r2.add(op_zero_on_basis(name, nc_eval(rel, binda), basis));
    require_pass(r2);
}

TEST_CASE("dualities between the quadratic algebras") {
    require_pass(check_algebra_duality(AlgebraDuality::AW, param_set_P1(), 6));
    require_pass(check_algebra_duality(AlgebraDuality::CDqHBqJ,
                                       param_set_P2(Family::CDqH), 6));
    require_pass(check_algebra_duality(AlgebraDuality::ASCLqJ,
                                       param_set_P2(Family::ASC), 6));
    require_pass(check_algebra_duality(AlgebraDuality::QInverse,
                                       param_set_P2(Family::AW), 6));
    require_pass(
        check_algebra_duality(AlgebraDuality::QInverse, param_set_P1(), 6));
}
