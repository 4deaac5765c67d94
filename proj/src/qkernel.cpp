#include "qaskey/qkernel.hpp"

#include <cmath>

namespace qaskey {

Rational qpoch(const Rational& x, const Rational& q, int n) {
    Rational acc = 1, qk = 1;
    for (int k = 0; k < n; ++k) {
        acc *= 1 - x * qk;
        qk *= q;
    }
    return acc;
}

Rational qpoch(const std::vector<Rational>& xs, const Rational& q, int n) {
    Rational acc = 1;
    for (const auto& x : xs) acc *= qpoch(x, q, n);
    return acc;
}

Rational phi_terminating(const std::vector<Rational>& num,
                         const std::vector<Rational>& den,
                         const Rational& q, const Rational& arg, int n_terms) {
    // extra = 1 + s - r sign/power factor of the general series
    int extra = 1 + static_cast<int>(den.size()) - static_cast<int>(num.size());
    Rational sum = 1, term = 1, qk = 1; // qk = q^k
    for (int k = 0; k < n_terms; ++k) {
        // term_{k+1} from term_k
        for (const auto& a : num) term *= 1 - a * qk;
        if (term == 0) break; // series terminated
        Rational qk1 = qk * q;
        if (qk1 == 1) throw DenominatorVanishes(k + 1);
        term /= 1 - qk1;
        for (const auto& b : den) {
            Rational f = 1 - b * qk;
            if (f == 0) throw DenominatorVanishes(k + 1);
            term /= f;
        }
        if (extra != 0) {
            // ((-1)^{k+1} q^{C(k+1,2)}) / ((-1)^k q^{C(k,2)}) = -q^k
            term *= rpow(-qk, extra);
        }
        term *= arg;
        sum += term;
        qk = qk1;
    }
    return sum;
}

std::complex<double> phi_infinite_float(const std::vector<std::complex<double>>& num,
                                        const std::vector<std::complex<double>>& den,
                                        double q, std::complex<double> arg, double tol,
                                        int* terms_used) {
    if (std::abs(q) >= 1) throw Error("phi_infinite_float requires |q| < 1");
    int extra = 1 + static_cast<int>(den.size()) - static_cast<int>(num.size());
    std::complex<double> sum = 1, term = 1;
    double qk = 1;
    const int kmax = 1000000;
    for (int k = 0; k < kmax; ++k) {
        for (const auto& a : num) term *= 1.0 - a * qk;
        double qk1 = qk * q;
        term /= 1.0 - qk1;
        for (const auto& b : den) term /= 1.0 - b * qk;
        for (int e = 0; e < extra; ++e) term *= -qk;
        for (int e = 0; e > extra; --e) term /= -qk;
        term *= arg;
        sum += term;
        qk = qk1;
        if (std::abs(term) < tol * std::abs(sum)) {
            if (terms_used) *terms_used = k + 2;
            return sum;
        }
    }
    throw NonConvergent();
}

std::complex<double> qpoch_inf(std::complex<double> x, double q, double tol) {
    if (std::abs(q) >= 1) throw Error("qpoch_inf requires |q| < 1");
    std::complex<double> acc = 1;
    double scale = std::abs(x);
    double qk = 1;
    while (scale * std::abs(qk) >= tol) {
        acc *= 1.0 - x * qk;
        qk *= q;
        if (qk == 0) break;
    }
    return acc;
}

} // namespace qaskey
