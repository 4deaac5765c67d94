#pragma once

#include "qaskey/ncpoly.hpp"
#include "qaskey/operators.hpp"
#include "qaskey/params.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qaskey {

// ---------------------------------------------------------------------------
// quadratic two-generator algebra attached to each family

struct StructureConstants {
    Family family = Family::AW;
    Rational B, C0, C1, D0, D1, Q0;
};

// Exact structure constants.  For BqJ the Casimir constant has no closed
// form here; it is computed by applying the Casimir element to the constant
// polynomial in the basic representation (constancy on the rest of the
// basis is a separate check).
StructureConstants structure_constants(const ParamSet& p);

// The two defining relations as elements that must vanish (i = 0, 1), in
// generators "K0", "K1":
//   (q+1/q) K1 K0 K1 - K1^2 K0 - K0 K1^2 - B K1 - C0 K0 - D0,
//   (q+1/q) K0 K1 K0 - K0^2 K1 - K1 K0^2 - B K0 - C1 K1 - D1.
NCPoly quadratic_relation(int i, const StructureConstants& sc, const Rational& q);

// Casimir element commuting with both generators.
NCPoly casimir_element(const StructureConstants& sc, const Rational& q);

// Basic representation: K0 = L, K1 = multiplication by z + 1/z (Laurent
// families) or by x (BqJ/LqJ).
std::map<std::string, PolyOp> basic_rep(const ParamSet& p);
// Representation on sequences: K0 = Lambda (diagonal), K1 = M (recurrence).
std::map<std::string, SeqOp> seq_rep(const ParamSet& p);

// the basis matching basic_rep's domain: symmetric Laurent or x-powers
std::vector<Laurent> rep_basis(const ParamSet& p, int max_deg);

// Verifies both relations, [Q, K0] = [Q, K1] = 0 and Q = Q0 id, in the
// basic representation (on rep_basis) resp. the sequence representation
// (on a window of delta sequences).
Report check_quadratic_basic(const ParamSet& p, int max_deg);
Report check_quadratic_seq(const ParamSet& p, int max_deg);

// zero test of a relation bound to sequence operators on a window
CheckResult seq_relation_zero(const std::string& id, const NCPoly& rel,
                              const std::map<std::string, SeqOp>& bind, int lo,
                              int hi, int pad);

// ---------------------------------------------------------------------------
// symmetric (three-generator) form

// Needs square roots of q, C0, C1; the caller supplies them so everything
// stays rational (NotRationalSquare semantics live with the caller).
struct SymmetricForm {
    Rational qh;             // square root of q
    Rational r0, r1;         // square roots of C0, C1
    Rational al0, al1, al2;  // central constants
};

SymmetricForm symmetric_form(const StructureConstants& sc, const Rational& q,
                             const Rational& qh, const Rational& r0,
                             const Rational& r1);

// A0, A1, A2 bound in the representation "K0", "K1" (bindings given)
std::map<std::string, PolyOp>
symmetric_rep(const std::map<std::string, PolyOp>& krep,
              const SymmetricForm& t, const Rational& q);

// cyclic relation i = 0, 1, 2, as an element that must vanish in "A0".."A2"
NCPoly symmetric_relation(int i, const SymmetricForm& t, const Rational& q);
// Casimir element of the symmetric form (generators "A0".."A2")
NCPoly symmetric_casimir(const SymmetricForm& t, const Rational& q);

// back-map from the symmetric constants to quadratic-relation constants,
// with free rescaling constants c0, c1 != 0
StructureConstants symmetric_back(const SymmetricForm& t, const Rational& q,
                                  const Rational& c0, const Rational& c1);

// ---------------------------------------------------------------------------
// Hecke-type presentations

enum class Presentation {
    AW71,       // four braid-type generators, top level
    AW110,      // generators T1, T0, Z, Z^{-1}
    AW75,       // generators T1, Y, Z^{-1}
    CDqH75d,    // d = 0, generators T1, T0, Z, Z^{-1}
    CDqH112,    // d = 0, generators T1, Y, Y', Z, Z^{-1}
    CDqH151,    // d = 0, Y' eliminated
    ASC,        // c = d = 0 specialization of CDqH75d
    AWqB150,    // nilpotent T0 presentation below ASC
    BqJHgamma,  // 2x2 limit realization, generators T1, T0, X, X'
    BqJ113,     // 2x2 limit realization, generators T1, Y, X, X'
    LqJ,        // c = 0 specialization of BqJ113
    LqJt146,    // rescaled-X variant, T0 form
    LqJt147,    // rescaled-X variant, Y form
};

std::string presentation_name(Presentation pr);
// true when the presentation is realized by 2x2 matrix operators
bool presentation_is_matrix(Presentation pr);

// relations as (name, element that must vanish)
std::vector<std::pair<std::string, NCPoly>> daha_relations(Presentation pr,
                                                           const ParamSet& p);
std::map<std::string, PolyOp> daha_scalar_bindings(Presentation pr,
                                                   const ParamSet& p);
std::map<std::string, MatOp> daha_matrix_bindings(Presentation pr,
                                                  const ParamSet& p);

// every relation of the presentation as an operator identity on the basis
Report check_daha(Presentation pr, const ParamSet& p, int max_deg);

// ---------------------------------------------------------------------------
// dualities between the quadratic algebras

enum class AlgebraDuality {
    AW,        // (a,b,c,d) <-> dual parameters, generators (a K1, at^{-1} K0)
    CDqHBqJ,   // CDqH (a,b,c) <-> BqJ (q^{-1}ab, a/b, q^{-1}ac), (a K1, K0)
    ASCLqJ,    // the c = 0 specialization of the previous pair
    QInverse,  // (a,b,c,d;q) <-> inverses, generators ((q/abcd) K0, K1)
};

std::string algebra_duality_name(AlgebraDuality d);

// Verifies the constant transformations exactly and the isomorphism at the
// representation level: the transported generators satisfy the dual-side
// relations and Casimir constancy on the basis.
Report check_algebra_duality(AlgebraDuality d, const ParamSet& p, int max_deg);

} // namespace qaskey
