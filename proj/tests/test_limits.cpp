#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaskey/limits.hpp"
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

const std::vector<Rational> kLambdas = {rat(1, 1000), rat(1, 10000),
                                        rat(1, 100000)};

} // namespace

TEST_CASE("polynomial limits between adjacent levels") {
    ParamSet cd = param_set_P2(Family::CDqH);
    ParamSet asc = param_set_P2(Family::ASC);
    ParamSet bqj = param_set_P2(Family::BqJ);
    ParamSet lqj = param_set_P2(Family::LqJ);
    Rational x = rat(5, 7);

    for (int n = 1; n <= 4; ++n) {
        require_pass(check_limit(LimitTransition::AWtoCDqH, n, x, cd, kLambdas));
        require_pass(check_limit(LimitTransition::AWtoBqJ, n, x, bqj, kLambdas));
        require_pass(check_limit(LimitTransition::CDqHtoASC, n, x, asc, kLambdas));
        require_pass(check_limit(LimitTransition::BqJtoLqJ0, n, x, lqj, kLambdas));
        require_pass(check_limit(LimitTransition::BqJtoLqJInf, n, x, lqj, kLambdas));
    }

    // degree 0: every family starts at the constant 1, deviation vanishes
    Report r0 = check_limit(LimitTransition::AWtoCDqH, 0, x, cd, kLambdas);
    require_pass(r0);
    CHECK(r0.checks.front().id.find("identically zero") != std::string::npos);
}

TEST_CASE("nonsymmetric and vector polynomial limits") {
    ParamSet cd = param_set_P2(Family::CDqH);
    ParamSet bqj = param_set_P2(Family::BqJ);
    Rational x = rat(5, 7);
    for (int n : {-4, -2, 1, 3, 4}) {
        require_pass(
            check_limit(LimitTransition::NonsymAWtoCDqH, n, x, cd, kLambdas));
        require_pass(
            check_limit(LimitTransition::VecAWtoBqJ, n, x, bqj, kLambdas));
    }
}

TEST_CASE("operator limits between adjacent levels") {
    ParamSet cd = param_set_P2(Family::CDqH);
    ParamSet asc = param_set_P2(Family::ASC);
    ParamSet bqj = param_set_P2(Family::BqJ);
    ParamSet lqj = param_set_P2(Family::LqJ);
    Rational x = rat(5, 7);

    require_pass(check_limit(LimitTransition::OpL_AWtoCDqH, 3, x, cd, kLambdas));
    require_pass(check_limit(LimitTransition::OpM_AWtoCDqH, 4, x, cd, kLambdas));
    require_pass(check_limit(LimitTransition::OpL_AWtoBqJ, 3, x, bqj, kLambdas));
    require_pass(check_limit(LimitTransition::OpM_AWtoBqJ, 4, x, bqj, kLambdas));
    require_pass(check_limit(LimitTransition::OpL_CDqHtoASC, 3, x, asc, kLambdas));
    require_pass(check_limit(LimitTransition::OpM_CDqHtoASC, 4, x, asc, kLambdas));
    require_pass(check_limit(LimitTransition::OpL_BqJtoLqJ, 3, x, lqj, kLambdas));
    require_pass(check_limit(LimitTransition::OpM_BqJtoLqJ, 4, x, lqj, kLambdas));
}

TEST_CASE("structure constant limits, including the rescaled Casimir") {
    Rational x = rat(5, 7);
    require_pass(check_limit(LimitTransition::ConstsAWtoCDqH, 0, x,
                             param_set_P2(Family::CDqH), kLambdas));
    require_pass(check_limit(LimitTransition::ConstsAWtoBqJ, 0, x,
                             param_set_P2(Family::BqJ), kLambdas));
    require_pass(check_limit(LimitTransition::ConstsCDqHtoASC, 0, x,
                             param_set_P2(Family::ASC), kLambdas));
    require_pass(check_limit(LimitTransition::ConstsBqJtoLqJ, 0, x,
                             param_set_P2(Family::LqJ), kLambdas));
}

TEST_CASE("matrix generator limits into the 2x2 realization") {
    ParamSet bqj = param_set_P2(Family::BqJ);
    Rational x = rat(5, 7);
    Report t1 = check_limit(LimitTransition::MatT1_AWtoBqJ, 0, x, bqj, kLambdas);
    require_pass(t1);
    // the substituted T1 matrix is already exact at finite deformation
    CHECK(t1.checks.front().id.find("identically zero") != std::string::npos);
    require_pass(check_limit(LimitTransition::MatZ_AWtoBqJ, 0, x, bqj, kLambdas));
    require_pass(
        check_limit(LimitTransition::MatZinv_AWtoBqJ, 0, x, bqj, kLambdas));
}

TEST_CASE("expected orders are frozen") {
    CHECK(limit_expected_order(LimitTransition::AWtoCDqH) == 1);
    CHECK(limit_expected_order(LimitTransition::AWtoBqJ) == 2);
    CHECK(limit_expected_order(LimitTransition::CDqHtoASC) == 1);
    CHECK(limit_expected_order(LimitTransition::BqJtoLqJ0) == 1);
    CHECK(limit_expected_order(LimitTransition::BqJtoLqJInf) == 1);
    CHECK(limit_expected_order(LimitTransition::NonsymAWtoCDqH) == 1);
    CHECK(limit_expected_order(LimitTransition::VecAWtoBqJ) == 2);
    CHECK(limit_expected_order(LimitTransition::OpM_AWtoBqJ) == 2);
    CHECK(limit_expected_order(LimitTransition::ConstsAWtoBqJ) == 2);
    CHECK(limit_expected_order(LimitTransition::MatZ_AWtoBqJ) == 2);
    CHECK(limit_expected_order(LimitTransition::OpL_CDqHtoASC) == 1);
}

TEST_CASE("q-Bessel functions as large-degree limits") {
    ParamSet p;
    p.family = Family::AWqBessel;
    p.q = rat(1, 2);
    p.a = rat(1, 2);
    p.b = rat(1, 3);
    // the deviation scales like gamma * q^N; gamma = 1/1000 brings the
    // N = 25 term safely under the float tolerance
    for (int n : {-2, 0, 1, 3})
        require_pass(check_qbessel_limit(rat(1, 1000), p, n, rat(3, 4),
                                         {15, 20, 25}, 1e-10));
}

TEST_CASE("the two little q-Jacobi limit routes agree exactly") {
    require_pass(
        check_lqj_route_consistency(param_set_P2(Family::LqJ), 4, rat(5, 7)));
    require_pass(
        check_lqj_route_consistency(param_set_P2(Family::LqJ), 4, rat(-2, 3)));
}
