#pragma once

#include "qaskey/linop.hpp"
#include "qaskey/params.hpp"

#include <string>
#include <vector>

namespace qaskey {

// Thrown when a spectral-grid restriction hits a singular point (such as a
// grid value whose square is 1, where the reflection coefficients blow up).
struct GridCollision : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// second-order q-difference operator and three-term recurrence operator

// L acting on symmetric Laurent polynomials (AW/CDqH/ASC, with the unused
// parameter slots at zero) or on polynomials in x (BqJ/LqJ).  Eigenfunctions
// are the family members, with eigenvalues given by eigenvalue().
PolyOp op_L(const ParamSet& p);

// Three-term recurrence in the degree, as an operator on sequences g(n),
// n >= 0.  Eigenvalue equation: M_n applied to n -> value of the degree-n
// member at a fixed point equals (z + 1/z) (Laurent families) resp. x (BqJ,
// LqJ) times that value.
SeqOp op_M(const ParamSet& p);

// Diagonal operator n -> eigenvalue(p, n) * g(n), the transform-side image
// of L.
SeqOp op_Lambda(const ParamSet& p);

// Multiplication by the inverse of the dual spectral value:
// g(m) -> nu(m)^{-1} g(m) with nu(m) = (abcd)^{-1} q^{1-m} (m >= 0),
// q^{-m} (m < 0).  Top-level family only.
SeqOp op_N(const ParamSet& p);

// ---------------------------------------------------------------------------
// generators of the double affine Hecke algebra in the basic representation
// on Laurent polynomials (scalar form)

enum class Gen {
    Z,        // multiplication by z
    Zinv,     // multiplication by z^{-1}
    T1,       // Hecke generator with parameters (a, b)
    T1inv,    // its inverse
    T0,       // Hecke generator with parameters (c, d); valid with c or d = 0
    T0inv,    // inverse of T0 (needs cd != 0, so top level only)
    Y,        // T1 T0
    Yinv,     // inverse of Y (top level only)
    D,        // Y + q^{-1}abcd Y^{-1} (top level only); acts as L on
              // symmetric Laurent polynomials
    T0prime,  // -T0 - (1 + q^{-1}cd), the companion root of the T0 quadratic
    Yprime,   // q^{-1}cd Y^{-1} with the cd cancelled, valid at all levels
    T0tilde,  // nilpotent limit generator at the q-Bessel level
};

std::string gen_name(Gen g);

// Basic representation of the generator for the given family.  The Laurent
// families share one set of formulas (unused parameter slots at zero); the
// q-Bessel level supports Z, Zinv, T1, T1inv, T0tilde.  BqJ/LqJ have no
// scalar representation here; use op_matrix for those.
PolyOp op_daha(Gen g, const ParamSet& p);

// ---------------------------------------------------------------------------
// 2x2 matrix realization on pairs of symmetric Laurent polynomials

// Decomposition f[z] = f1[z] + a z^{-1}(1-az)(1-bz) f2[z] with f1, f2
// symmetric, and its inverse.
VecPoly vec2_decompose(const Laurent& f, const ParamSet& p);
Laurent vec2_recompose(const VecPoly& v, const ParamSet& p);

// Change-of-basis matrices: (f[z], f[1/z])^T = S vec(f), and its inverse.
MatRF mat_S(const ParamSet& p);
MatRF mat_S_inv(const ParamSet& p);
// Multiplication by z resp. z^{-1} in the 2x2 realization, as matrices of
// multiplication operators (Laurent families).
MatRF mat_Z(const ParamSet& p);
MatRF mat_Z_inv(const ParamSet& p);

enum class MGen {
    T1,     // diag(-ab, -1) (Laurent families); diag(-qa, -1) (BqJ/LqJ)
    T1inv,  //
    Y,      //
    Yinv,   // needs cd != 0 at the Laurent level (top family only)
    Z,      // multiplication by z; for BqJ/LqJ the rescaled limit matrix X
    Zinv,   // for BqJ/LqJ the rescaled limit matrix X'
};

std::string mgen_name(MGen g);

// 2x2 matrix-operator realization of the generator.  For the Laurent
// families this is the realization on decompositions vec(f); for BqJ/LqJ
// it is the limit realization obtained from the parameter substitution
// z, a, b, c, d -> x/h, h, qa/h, qc/h, (b/c)h, conjugation by diag(1, 1/h),
// an extra factor h on Z and Zinv, and h -> 0 (exactly, via an auxiliary
// deformation variable).
MatOp op_matrix(MGen g, const ParamSet& p);

// ---------------------------------------------------------------------------
// recurrence operators for the nonsymmetric polynomials (degree index in Z)

// Four-term recurrence operator whose eigenvalue equation multiplies the
// nonsymmetric polynomial by z^{-1}.  Top-level family only (the coefficient
// grid involves (abcd)^{-1}).
SeqOp op_nonsym_recurrence(const ParamSet& p);
SeqOpV op_nonsym_recurrence_vec(const ParamSet& p);

// Two-term analogue at the BqJ/LqJ level, acting on vector values; its
// eigenvalue equation is the matrix X' applied to the vector polynomial.
SeqOp op_nonsym_recurrence_bqj(const ParamSet& p);
SeqOpV op_nonsym_recurrence_bqj_vec(const ParamSet& p);

// ---------------------------------------------------------------------------
// spectral-grid restrictions

// Restriction of a Laurent polynomial to the grid m -> z(m)^{-1} with
// z(m) = a q^m (m >= 0), a^{-1} q^m (m < 0).
SeqR restrict_to_grid(const Laurent& f, const ParamSet& p, int lo, int hi);

// The sequence-side image of T1 under the grid restriction: row
// {(m, c1(w)), (-m, c2(w))} where w = z(m)^{-1} and c1, c2 are the f[z] and
// f[1/z] coefficients of T1 at w.  Throws GridCollision when w^2 = 1.
SeqOp op_T_script(const ParamSet& p);

// Transform-side image of T1: row {(n, alpha_n), (-n, beta_n)} fixed by
// T1 acting on the two nonsymmetric vector polynomials of degree +-n.
SeqOp op_U(const ParamSet& p);

// ---------------------------------------------------------------------------
// catalog

struct OpInfo {
    std::string name;
    std::string family;
    std::string domain;  // "laurent" | "sequence" | "vector-sequence" | "matrix"
};

std::vector<OpInfo> operator_catalog();

} // namespace qaskey
