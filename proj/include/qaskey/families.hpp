#pragma once

#include "qaskey/linop.hpp"
#include "qaskey/params.hpp"
#include "qaskey/qkernel.hpp"

#include <array>
#include <complex>

namespace qaskey {

// Value of the degree-n family member at the given point, exactly:
// R_n[z] for the Laurent-argument families (AW/CDqH/ASC), P_n(x) for BqJ,
// p_n(x) for LqJ.  The point must be nonzero for the Laurent families.
Rational eval_family(const ParamSet& p, int n, const Rational& point);

// Alternate little q-Jacobi expression
//   (-qb)^{-n} q^{-n(n-1)/2} (qb;q)_n/(qa;q)_n * 3phi2 with argument qbx,
// used as a cross-check of the 2phi1 form.
Rational eval_lqj_alternate(const ParamSet& p, int n, const Rational& x);

// Eigenvalue of the family's second-order q-difference operator L on the
// degree-n member: q^{-n} + abcd q^{n-1} (AW), q^{-n} (CDqH/ASC),
// q^{-n} + q^{n+1}ab (BqJ/LqJ), q^n (q-Bessel level).
Rational eigenvalue(const ParamSet& p, int n);

// Non-symmetric polynomial E_n[z] (n of any sign) for the Laurent-argument
// families; the degenerate levels are the c = 0 and d = 0 specializations
// of the top-level formula.
Rational eval_nonsym_E(const ParamSet& p, int n, const Rational& z);

// Two-component form of E_n: (E_n)_1 + a z^{-1}(1-az)(1-bz) (E_n)_2 = E_n[z]
// for the Laurent families; for BqJ/LqJ the components are built from
// P_n(x; a,b,c) and P_{n-1}(qx; q^2 a, b, qc).
std::array<Rational, 2> eval_vector_E(const ParamSet& p, int n,
                                      const Rational& point);

// The same objects as Laurent polynomials in the argument (z for the
// Laurent families, x for BqJ/LqJ), for use with the symbolic operators.
Laurent family_poly(const ParamSet& p, int n);
Laurent nonsym_poly(const ParamSet& p, int n);
VecPoly vector_poly(const ParamSet& p, int n);

// Eigenfunctions of the q-difference and recurrence operators.  These are
// the family members themselves except at the little q-Jacobi level, where
// the operators' eigenfunctions are the c -> 0 limit of the big q-Jacobi
// family (related to the 2phi1 form by a fixed renormalization with a and b
// interchanged).
Laurent operator_eigen_poly(const ParamSet& p, int n);

// J_gamma[z; a, b | q] = 2phi1(az, a/z; ab; q, -q gamma / a), floating point.
// Requires |q gamma / a| < 1 (sufficient for convergence) and z != 0.
std::complex<double> eval_qbessel(std::complex<double> gamma,
                                  std::complex<double> z, double a, double b,
                                  double q, double tol = 1e-15);

} // namespace qaskey
