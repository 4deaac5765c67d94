#pragma once

#include "qaskey/rational.hpp"

#include <complex>
#include <vector>

namespace qaskey {

struct DenominatorVanishes : Error {
    int index;
    explicit DenominatorVanishes(int k)
        : Error("denominator q-shifted factorial vanishes at term " + std::to_string(k)),
          index(k) {}
};

struct NonConvergent : Error {
    NonConvergent() : Error("series did not converge within the term budget") {}
};

// (x; q)_n = prod_{k=0}^{n-1} (1 - x q^k), exact.
Rational qpoch(const Rational& x, const Rational& q, int n);

// product over a list of bases
Rational qpoch(const std::vector<Rational>& xs, const Rational& q, int n);

// Terminating basic hypergeometric sum
//   sum_{k=0}^{n_terms} [ (num; q)_k / ((q; q)_k (den; q)_k) ]
//                       * ((-1)^k q^{C(k,2)})^{1 + #den - #num} * arg^k
// summed exactly left to right.  Throws DenominatorVanishes if a factor
// (q;q)_k or (den_j; q)_k hits zero while terms are still nonzero.
Rational phi_terminating(const std::vector<Rational>& num,
                         const std::vector<Rational>& den,
                         const Rational& q, const Rational& arg, int n_terms);

// Floating-point series, same term rule, truncated when
// |term| < tol * |partial sum|; throws NonConvergent past 10^6 terms.
// Requires |q| < 1.
std::complex<double> phi_infinite_float(const std::vector<std::complex<double>>& num,
                                        const std::vector<std::complex<double>>& den,
                                        double q, std::complex<double> arg, double tol,
                                        int* terms_used = nullptr);

// (x; q)_infinity truncated when |x q^K| < tol, |q| < 1.
std::complex<double> qpoch_inf(std::complex<double> x, double q, double tol = 1e-16);

} // namespace qaskey
