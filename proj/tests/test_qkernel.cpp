#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaskey/qkernel.hpp"

#include <random>

using namespace qaskey;

TEST_CASE("q-shifted factorial basics") {
    CHECK(qpoch(Rational(5, 7), Rational(1, 3), 0) == 1);
    CHECK(qpoch(Rational(1), Rational(1, 2), 1) == 0);
    CHECK(qpoch(Rational(1), Rational(1, 2), 4) == 0);
    // (1/2; 1/4)_2 = (1 - 1/2)(1 - 1/8) = 7/16
    CHECK(qpoch(Rational(1, 2), Rational(1, 4), 2) == Rational(7, 16));
}

TEST_CASE("q-shifted factorial splitting identity") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 7), len(0, 6);
    for (int iter = 0; iter < 40; ++iter) {
        Rational x(num(rng), den(rng));
        Rational q(num(rng), 11);
        int m = len(rng), n = len(rng);
        CHECK(qpoch(x, q, m + n) == qpoch(x, q, m) * qpoch(x * rpow(q, m), q, n));
    }
}

TEST_CASE("terminating series basics") {
    Rational q(1, 2);
    CHECK(phi_terminating({Rational(1, 3)}, {Rational(1, 5)}, q, Rational(2), 0) == 1);
    // argument 0 with generic parameters -> 1
    CHECK(phi_terminating({Rational(1, 3), Rational(1, 7)}, {Rational(1, 5)}, q,
                          Rational(0), 6) == 1);
}

TEST_CASE("terminating 4phi3 against a two-term hand expansion") {
    // n = 1: 1 + [(1-q^-1)(1-A)(1-B)(1-C)] / [(1-q)(1-D)(1-E)(1-F)] * q
    Rational q(1, 2), a(1, 3), b(1, 5), c(2, 7), d(3, 11);
    Rational z(3);
    Rational abcd = a * b * c * d;
    std::vector<Rational> num{rpow(q, -1), abcd / q, a * z, a / z};
    std::vector<Rational> den{a * b, a * c, a * d};
    Rational got = phi_terminating(num, den, q, q, 1);
    Rational expect =
        1 + ((1 - rpow(q, -1)) * (1 - abcd / q) * (1 - a * z) * (1 - a / z) * q) /
                ((1 - q) * (1 - a * b) * (1 - a * c) * (1 - a * d));
    CHECK(got == expect);
}

TEST_CASE("series truncates on vanishing upper parameter") {
    Rational q(1, 2);
    // first numerator parameter q^{-2}: all terms beyond k=2 vanish, so a
    // larger n_terms must give the same value
    std::vector<Rational> num{rpow(q, -2), Rational(1, 3)};
    std::vector<Rational> den{Rational(1, 7)};
    CHECK(phi_terminating(num, den, q, q, 2) == phi_terminating(num, den, q, q, 9));
}

TEST_CASE("vanishing denominator is reported with its index") {
    Rational q(1, 2);
    // ab = q^{-1}: (q^{-1}; q)_k vanishes at k = 2
    std::vector<Rational> num{rpow(q, -5), Rational(1, 3)};
    std::vector<Rational> den{rpow(q, -1)};
    CHECK_THROWS_AS(phi_terminating(num, den, q, q, 5), DenominatorVanishes);
}

TEST_CASE("float series") {
    using C = std::complex<double>;
    CHECK(phi_infinite_float({C(0.3), C(0.2)}, {C(0.1)}, 0.5, C(0.0), 1e-14) == C(1.0));
    CHECK_THROWS_AS(phi_infinite_float({C(0.3)}, {C(0.1)}, 1.5, C(0.2), 1e-14), Error);
    // terminating case agrees with the exact evaluation
    Rational q(1, 2), x(1, 3);
    Rational exact = phi_terminating({rpow(q, -3), x}, {Rational(1, 7)}, q, q, 3);
    C approx = phi_infinite_float({C(8.0), C(1.0 / 3)}, {C(1.0 / 7)}, 0.5, C(0.5), 1e-15);
    CHECK(std::abs(approx - C(static_cast<double>(exact))) < 1e-10);
}

TEST_CASE("infinite q-product") {
    // (0; q)_inf = 1
    CHECK(std::abs(qpoch_inf({0.0, 0.0}, 0.5) - std::complex<double>(1.0)) < 1e-15);
    // Euler: (q; q)_inf at q=0.5, reference value from the defining product
    std::complex<double> p = 1;
    double qk = 0.5;
    for (int i = 0; i < 60; ++i) {
        p *= 1 - qk;
        qk *= 0.5;
    }
    CHECK(std::abs(qpoch_inf({0.5, 0.0}, 0.5) - p) < 1e-12);
}
