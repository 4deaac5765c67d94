#pragma once

#include "qaskey/linop.hpp"
#include "qaskey/params.hpp"

#include <string>
#include <vector>

namespace qaskey {

// Every limit arrow between adjacent levels, certified by exact-rational
// decay-rate measurement along a decreasing sequence of deformation values
// rather than symbolic limit-taking.
enum class LimitTransition {
    // polynomial values
    AWtoCDqH,        // d -> 0
    AWtoBqJ,         // z,a,b,c,d -> x/l, l, qa/l, qc/l, (b/c)l
    CDqHtoASC,       // c -> 0
    BqJtoLqJ0,       // c -> 0 (3phi2 normalization)
    BqJtoLqJInf,     // c -> infinity at the rescaled point cqx (2phi1 target)
    NonsymAWtoCDqH,  // d -> 0 on the nonsymmetric polynomials
    VecAWtoBqJ,      // substituted 2-vector polynomials
    // q-difference and recurrence operators
    OpL_AWtoCDqH,
    OpM_AWtoCDqH,
    OpL_AWtoBqJ,
    OpM_AWtoBqJ,     // with the extra factor lambda on the recurrence
    OpL_CDqHtoASC,
    OpM_CDqHtoASC,
    OpL_BqJtoLqJ,
    OpM_BqJtoLqJ,
    // structure constants of the attached quadratic algebras
    ConstsAWtoCDqH,
    ConstsAWtoBqJ,   // generator rescaling (K0, x-normalized K1),
                     // Casimir constant rescaled by lambda^2
    ConstsCDqHtoASC,
    ConstsBqJtoLqJ,
    // 2x2 matrix generators of the x-level realization
    MatT1_AWtoBqJ,   // exact already at finite lambda
    MatZ_AWtoBqJ,    // one overall factor lambda
    MatZinv_AWtoBqJ, // one overall factor lambda
};

std::string limit_transition_name(LimitTransition t);

// leading order in the deformation parameter of the deviation from the limit
int limit_expected_order(LimitTransition t);

// Verifies the transition: deviations delta(lambda) are computed exactly and
// must either vanish identically or decay with ratio within a factor 2 of
// (lambda')^order / lambda^order between consecutive lambdas.
//   n     : degree (polynomials, signed where the family allows it) or
//           output window size (operators)
//   point : evaluation point on the *target* side (x or z)
//   p     : target-family parameter set
Report check_limit(LimitTransition t, int n, const Rational& point,
                   const ParamSet& p, const std::vector<Rational>& lambdas);

// q-Bessel functions as the large-index limit of the three-parameter
// Laurent family: the exact value at (a, b, -q^{-N}/gamma), degree N - n,
// approaches the floating-point series within tol by the last N.
Report check_qbessel_limit(const Rational& gamma, const ParamSet& p, int n,
                           const Rational& z, const std::vector<int>& Ns,
                           double tol);

// The two little-x-level routes (limit at the rescaled point vs the
// closed-form renormalization with interchanged parameters) agree exactly.
Report check_lqj_route_consistency(const ParamSet& lqj, int max_n,
                                   const Rational& x);

} // namespace qaskey
