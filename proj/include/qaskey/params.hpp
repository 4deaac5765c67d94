#pragma once

#include "qaskey/rational.hpp"

namespace qaskey {

// The five polynomial families handled by this library, plus the q-Bessel
// functions sitting below the Al-Salam-Chihara level.
enum class Family { AW, CDqH, ASC, BqJ, LqJ, AWqBessel };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct InvalidParams : Error {
    using Error::Error;
};

// Parameter set (q; a, b, c, d).  Slots a family does not use are kept at
// zero: CDqH/BqJ use (a,b,c); ASC/LqJ and the q-Bessel level use (a,b).
struct ParamSet {
    Family family = Family::AW;
    Rational q, a, b, c, d;

    // number of a..d slots the family uses
    int arity() const;

    Rational abcd() const { return a * b * c * d; }

    // Throws InvalidParams when q is zero or a root of unity, a used
    // parameter slot is zero, or a q-shifted factorial appearing in a
    // series or recurrence denominator of the family vanishes within
    // (x; q)_{m_max}.
    void validate(int m_max = 12) const;

    bool operator==(const ParamSet&) const = default;
};

// Canonical parameter sets used throughout the test suites.
// P1 has q^{-1}abcd = 1, a rational square, so the full duality machinery
// stays in exact arithmetic.
ParamSet param_set_P1();           // AW (q=1/4, a=1/2, b=1/2, c=1/3, d=3)
ParamSet param_set_P2(Family f);   // generic (q=1/2, 1/3, 1/5, 2/7, 3/11)
                                   // truncated to the family's arity

// Dual parameters for the top-level family: at^2 = q^{-1}abcd,
// bt = ab/at, ct = ac/at, dt = ad/at.  branch = +-1 picks the root.
struct DualParams {
    Rational q, at, bt, ct, dt;
    int branch = 1;

    ParamSet as_params() const;  // top-level ParamSet (at, bt, ct, dt)
};

// Throws NotRationalSquare when q^{-1}abcd has no rational square root.
DualParams dual_params(const ParamSet& p, int branch = 1);

// Rational-direction dual parameter maps one level down:
// CDqH (a,b,c) -> BqJ (q^{-1}ab, a/b, q^{-1}ac) and
// ASC (a,b) -> LqJ (q^{-1}ab, a/b).
ParamSet dual_triple(const ParamSet& p);
ParamSet dual_pair(const ParamSet& p);

// Inverse (square-root) directions: BqJ (a,b,c) -> CDqH
// ((qab)^{1/2}, (qa/b)^{1/2}, (q/(ab))^{1/2} c), and the c-less variant.
ParamSet bqj_to_cdqh(const ParamSet& p, int branch = 1);
ParamSet lqj_to_asc(const ParamSet& p, int branch = 1);

// Spectral grids and row weights.
enum class GridKind {
    Z,      // z(n) = a q^n (n >= 0), a^{-1} q^n (n < 0)
    Nu,     // nu(n) = (abcd)^{-1} q^{1-n} (n >= 0), q^{-n} (n < 0); AW params
    Mu,     // mu(n) = (ab q^{1+n})^{-1} (n >= 0), q^{-n} (n < 0); BqJ params
    Sigma,  // sigma(n) = q^{1-n}(1-q^n)(1-q^{n-1}cd) (n >= 0, 0 at n=0),
            // sigma(-n) = (ab)^{-1} q^{1-n}(1-q^n ab)(1-q^{n-1}abcd) (n >= 1)
};

Rational spectral(GridKind kind, const ParamSet& p, int n);

// Row weight pairing the non-symmetric dualities one level down:
// mu(n) = ab q^{-n}(1-q^n) for n >= 0, q^{n}(1-q^{-n}ab)... evaluated as
// mu(-n) = q^{-n}(1-q^n ab) for n >= 1.
Rational mu_row(const Rational& ab, const Rational& q, int n);

} // namespace qaskey
