#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaskey/duality.hpp"
#include "qaskey/families.hpp"

using namespace qaskey;

namespace {

void require_pass(const Report& r) {
    CHECK(!r.checks.empty());
    for (const CheckResult& c : r.checks) {
        INFO(r.suite << " / " << c.id << ": " << c.witness);
        CHECK(c.pass);
    }
}

// self-dual top-level set with a rational dual parameter and a
// collision-free spectral grid (q^{-1}abcd = 1/4 != 1)
ParamSet param_set_self_dual() {
    ParamSet p;
    p.family = Family::AW;
    p.q = rat(1, 2);
    p.a = rat(1, 2);
    p.b = rat(1, 3);
    p.c = rat(1, 4);
    p.d = rat(3);
    p.validate();
    return p;
}

// canonical rational-direction triple: its square-root dual is again rational
ParamSet param_set_triple() {
    ParamSet p;
    p.family = Family::CDqH;
    p.q = rat(1, 2);
    p.a = rat(1, 4);
    p.b = rat(2);
    p.c = rat(1, 3);
    p.validate();
    return p;
}

Laurent symmetric_sample() {
    // (z + 1/z)^2 + 2(z + 1/z) + 5
    Laurent s = Laurent::monomial(1) + Laurent::monomial(-1);
    return s * s + s * rat(2) + Laurent{Rational(5)};
}

Laurent x_sample() {
    return Laurent::monomial(2) + Laurent::monomial(1) * rat(2) +
           Laurent{Rational(3)};
}

Laurent laurent_sample() {
    return Laurent::monomial(2) + Laurent::monomial(1) * rat(3) +
           Laurent::monomial(-1) * rat(-1) + Laurent{Rational(1)};
}

} // namespace

TEST_CASE("polynomial duality: top-level family at the self-inverse set") {
    ParamSet p1 = param_set_P1();
    require_pass(check_poly_duality(PolyDuality::AW, p1, 6, 6));

    // independent spot check of one entry against direct evaluation
    ParamSet pd = dual_params(p1).as_params();
    CHECK(pd.a == 1);
    Rational lhs = eval_family(p1, 3, 1 / (p1.a * rpow(p1.q, 2)));
    Rational rhs = eval_family(pd, 2, 1 / (pd.a * rpow(p1.q, 3)));
    CHECK(lhs == rhs);

    // the m = n diagonal at a genuinely self-dual set
    ParamSet ps = param_set_self_dual();
    CHECK(dual_params(ps).as_params() == ps);
    require_pass(check_poly_duality(PolyDuality::AW, ps, 5, 5));
}

TEST_CASE("polynomial duality: degenerate levels, rational direction") {
    ParamSet c3 = param_set_P2(Family::CDqH);
    require_pass(check_poly_duality(PolyDuality::CDqHBqJ, c3, 6, 6));

    ParamSet asc = param_set_P2(Family::ASC);
    require_pass(check_poly_duality(PolyDuality::ASCLqJ, asc, 6, 6));

    // the dual side of the two-parameter duality is the c = 0 member of the
    // x-level family, not the hypergeometric renormalization of it
    ParamSet pair = dual_pair(asc);
    ParamSet pd0 = pair;
    pd0.family = Family::BqJ;
    pd0.c = 0;
    Rational at_grid = eval_family(asc, 2, 1 / (asc.a * rpow(asc.q, 3)));
    CHECK(at_grid == eval_family(pd0, 3, rpow(asc.q, -2)));
    CHECK(at_grid != eval_family(pair, 3, rpow(asc.q, -2)));
}

TEST_CASE("polynomial duality: nonsymmetric and two-component forms") {
    ParamSet ps = param_set_self_dual();
    require_pass(check_poly_duality(PolyDuality::NonsymAW, ps, 4, 4));
    require_pass(check_poly_duality(PolyDuality::Mixed2D, ps, 4, 4));

    ParamSet c3 = param_set_P2(Family::CDqH);
    require_pass(check_poly_duality(PolyDuality::DegenerateNonsym, c3, 4, 4));

    // soundness: the two-component row coefficient is not arbitrary
    ParamSet pd = dual_params(ps).as_params();
    int m = 2, n = -3;
    Rational lhs =
        eval_nonsym_E(ps, n, 1 / spectral(GridKind::Z, ps, m));
    Rational nu = spectral(GridKind::Nu, ps, n);
    Rational coef =
        (1 - ps.abcd() / ps.q * nu) * (1 - ps.a * ps.b * nu) / nu;
    auto v = eval_vector_E(pd, m, 1 / spectral(GridKind::Z, pd, n));
    CHECK(lhs == v[0] + coef * v[1]);
    CHECK(lhs != v[0] + (coef + rat(1, 7)) * v[1]);
}

TEST_CASE("q-Bessel against little x-level polynomials") {
    ParamSet p;
    p.family = Family::AWqBessel;
    p.q = rat(1, 2);
    p.a = rat(1, 2);
    p.b = rat(1, 3);
    // m is kept moderate: the series evaluation cancels catastrophically
    // for large q^{-m}, an artifact of double precision, not of the identity
    Report r = check_qbessel_duality(rat(1, 10), p, -2, 4, 6, 1e-10);
    require_pass(r);
    CHECK(r.checks.size() == 7); // every n in [-2, 4] passes the guard
}

TEST_CASE("operator duality: top-level family") {
    ParamSet p1 = param_set_P1();
    Laurent f = symmetric_sample();
    require_pass(check_operator_duality(OperatorDuality::AW_L, p1, f, 6));
    require_pass(check_operator_duality(OperatorDuality::AW_Lambda, p1, f, 6));
    // a family member restricts to an eigen-sequence of the dual recurrence
    require_pass(check_operator_duality(OperatorDuality::AW_L, p1,
                                        family_poly(p1, 4), 6));

    require_pass(check_restriction_functorial(p1, f, 5));
}

TEST_CASE("operator duality: degenerate levels at the rational triple") {
    Laurent fs = symmetric_sample();
    Laurent fx = x_sample();

    ParamSet c3 = param_set_triple();
    require_pass(check_operator_duality(OperatorDuality::CDqH_L, c3, fs, 6));
    // the rational direction needs no special parameter set
    require_pass(check_operator_duality(OperatorDuality::CDqH_L,
                                        param_set_P2(Family::CDqH), fs, 6));
    require_pass(check_operator_duality(OperatorDuality::ASC_L,
                                        param_set_P2(Family::ASC), fs, 6));

    ParamSet b3 = c3;
    b3.family = Family::BqJ;
    require_pass(check_operator_duality(OperatorDuality::BqJ_L, b3, fx, 6));

    ParamSet a2 = c3;
    a2.family = Family::ASC;
    a2.c = 0;
    require_pass(check_operator_duality(OperatorDuality::ASC_L, a2, fs, 6));

    ParamSet l2 = a2;
    l2.family = Family::LqJ;
    require_pass(check_operator_duality(OperatorDuality::LqJ_L, l2, fx, 6));

    // the square-root dual of the canonical triple is again rational
    CHECK(rsqrt(c3.q * c3.a * c3.b) == rat(1, 2));
    CHECK(rsqrt(c3.q * c3.a / c3.b) == rat(1, 4));
    CHECK(rsqrt(c3.q / (c3.a * c3.b)) * c3.c == rat(1, 3));
}

TEST_CASE("operator duality: Hecke generators on the spectral grid") {
    ParamSet ps = param_set_self_dual();
    Laurent f = laurent_sample();
    require_pass(check_operator_duality(OperatorDuality::DAHA_Y, ps, f, 4));
    require_pass(check_operator_duality(OperatorDuality::DAHA_Z, ps, f, 4));

    // the nonsymmetric polynomials restrict to eigen-sequences
    require_pass(check_operator_duality(OperatorDuality::DAHA_Y, ps,
                                        nonsym_poly(ps, -3), 4));
}

TEST_CASE("two-parameter duality is the small-c limit of the three-parameter one") {
    ParamSet asc = param_set_P2(Family::ASC);
    std::vector<Rational> cs = {rat(1, 1000), rat(1, 10000), rat(1, 100000)};
    require_pass(check_duality_limit_consistency(asc, 4, cs));
}

TEST_CASE("two-component polynomials under the parameter permutation") {
    ParamSet b3 = param_set_P2(Family::BqJ);
    require_pass(check_vector_param_symmetry(b3, 1, rat(5, 7)));
    require_pass(check_vector_param_symmetry(b3, 3, rat(5, 7)));
    require_pass(check_vector_param_symmetry(b3, 4, rat(-2, 3)));
}
