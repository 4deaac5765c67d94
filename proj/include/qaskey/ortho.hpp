#pragma once

#include "qaskey/linop.hpp"
#include "qaskey/params.hpp"

#include <complex>
#include <string>
#include <vector>

namespace qaskey {

// Parameter set for the numeric orthogonality suite: rational values so the
// polynomial and operator coefficients stay exact, satisfying both the
// unit-circle constraints (|a|,|b|,|c|,|d| <= 1, pairwise products != 1) and
// the 2-vector ones (a, b real with ab < 0).
ParamSet param_set_P3();

// Scalar orthogonality weight on the unit circle, prefactor included, so
// that the degree-0 Gram entry is exactly 1.  Infinite q-products are
// truncated once the running power of q drops below tol.
double aw_weight(std::complex<double> z, const ParamSet& p,
                 double tol = 1e-16);

// Positive constant scaling the second diagonal entry of the matrix weight.
Rational weight_constant_C(const ParamSet& p);

// Diagonal of the 2x2 matrix weight:
// (w_{a,b,c,d}, C * w_{qa,qb,c,d}) at z.
std::array<double, 2> weight_matrix_diag(std::complex<double> z,
                                         const ParamSet& p,
                                         double tol = 1e-16);

enum class GramKind {
    Scalar, // family members, degrees 0..max_n
    Vector, // 2-vector polynomials, signed degrees -max_n..max_n
    Matrix, // 2x2 matrix polynomials (columns +-n), block index 1..max_n
            // (the two columns coincide at n = 0, so that block is excluded)
};

// Gram matrix by the midpoint trapezoid rule on the unit circle with the
// given node count (deterministic pairwise-summed reduction).  Row/column
// layout per GramKind; Matrix uses 2x2 blocks flattened in order.
std::vector<std::vector<double>> gram_matrix(const ParamSet& p, GramKind k,
                                             int max_n, int nodes);

// weight positivity, conjugation symmetry, unit normalization, C > 0,
// the weight-ratio factorization and matrix-weight positivity on nodes
Report check_weight(const ParamSet& p, int sample_nodes, double tol);

// off-diagonal Gram entries below tol * max diagonal, diagonals positive,
// unit scalar normalization, and equality of the +-n norms (Matrix kind)
Report check_gram(const ParamSet& p, GramKind k, int max_n, int nodes,
                  double tol);

// the sesquilinear-shift identity moving Z^{-1} across the matrix weight,
// the scalar transform intertwining (eigenvalue and multiplication form),
// self-adjointness of the scalar difference operator, transform zeros
// forced by orthogonality, and the three transform-side operator identities
// (recurrence, spectral diagonal, Hecke) on signed windows
Report check_adjointness_and_transform(const ParamSet& p, int max_n,
                                       int nodes, double tol);

// doubling the node count moves Gram entries by less than tol
Report check_quadrature_convergence(const ParamSet& p, int max_n, int nodes,
                                    double tol);

} // namespace qaskey
