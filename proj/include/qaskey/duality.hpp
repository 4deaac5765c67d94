#pragma once

#include "qaskey/families.hpp"
#include "qaskey/operators.hpp"
#include "qaskey/params.hpp"

#include <string>
#include <vector>

namespace qaskey {

// ---------------------------------------------------------------------------
// polynomial dualities: both sides evaluated independently, compared exactly

enum class PolyDuality {
    AW,               // R_n[a^{-1}q^{-m}] = dual-parameter R_m[at^{-1}q^{-n}]
    CDqHBqJ,          // three-parameter family against the x-level family at
                      // the rational triple (q^{-1}ab, ab^{-1}, q^{-1}ac)
    ASCLqJ,           // the c = 0 specialization of the previous pair
    NonsymAW,         // E_n at the spectral grid, all four sign quadrants
    Mixed2D,          // scalar E_n against the 2-vector dual side, with the
                      // row vector (1, (1-q^{-1}abcd nu)(1-ab nu)/nu)
    DegenerateNonsym, // scalar three-parameter E_n against the 2-vector
                      // x-level side, with the row vector (1, mu(n))
};

std::string poly_duality_name(PolyDuality d);

// Verifies the duality over the index box.  Laurent families use the
// top-level dual parameters; the degenerate cases use the rational-direction
// triple/pair maps.  NonsymAW/Mixed2D/DegenerateNonsym cover
// |m|, |n| <= max; the others cover 0 <= m <= max_m, 0 <= n <= max_n.
Report check_poly_duality(PolyDuality d, const ParamSet& p, int max_m,
                          int max_n);

// q-Bessel functions against little q-Jacobi polynomials, floating point:
// J_{q^n gamma}[a^{-1}q^{-m}; a, b] = p_m(-q^n gamma / a; q^{-1}ab, ab^{-1}).
Report check_qbessel_duality(const Rational& gamma, const ParamSet& p,
                             int min_n, int max_n, int max_m, double tol);

// ---------------------------------------------------------------------------
// operator dualities: the left operator applied and restricted to the
// spectral grid equals a scaled dual-parameter sequence operator applied to
// the restricted values

enum class OperatorDuality {
    AW_L,       // L at z = a^{-1}q^{-m}  vs  at * dual three-term recurrence
    AW_Lambda,  // Z + Z^{-1}             vs  a^{-1} * dual eigenvalue diag
    CDqH_L,     // d = 0 level L          vs  rational-direction x-level
                // recurrence (no prefactor: that side acts in x)
    BqJ_L,      // x-level L at x = q^{-m} vs at * d = 0 level recurrence
    ASC_L,      // c = d = 0 level L      vs  rational-direction little
                // x-level recurrence (no prefactor)
    LqJ_L,      // little x-level L       vs  at * c = d = 0 level recurrence
    DAHA_Y,     // Y on Laurent polynomials vs at * four-term recurrence
    DAHA_Z,     // Z^{-1}                  vs a^{-1} * dual spectral diagonal
};

std::string operator_duality_name(OperatorDuality c);

// For BqJ_L and LqJ_L the dual parameters carry square roots, so the
// supplied parameters must lie in the image of the rational triple/pair
// map; the canonical test set is (a, b, c) = (1/4, 2, 1/3) at q = 1/2,
// whose square-root dual is (1/2, 1/4, 1/3).  CDqH_L and ASC_L use the
// rational direction and work at any valid parameters.
Report check_operator_duality(OperatorDuality c, const ParamSet& p,
                              const Laurent& f, int max_m);

// (AB)-check = A-check B-check for the restriction construction,
// A, B in {L, Z + Z^{-1}} (top-level family)
Report check_restriction_functorial(const ParamSet& p, const Laurent& f,
                                    int max_m);

// ---------------------------------------------------------------------------
// consistency checks

// The c = 0 duality is the c -> 0 limit of the three-parameter one: the
// deviation of the c-dependent values decays at first order along cs.
Report check_duality_limit_consistency(const ParamSet& asc, int max_mn,
                                       const std::vector<Rational>& cs);

// Spot check of the permuted-parameter 2-vector polynomials: the 2-vector
// at (c, ab/c, a) has first component P_n(x; a, b, c) and second component
// a closed-form multiple of P_{n-1}(qx; qa, qb, q^2 c).
Report check_vector_param_symmetry(const ParamSet& bqj, int n,
                                   const Rational& x0);

} // namespace qaskey
