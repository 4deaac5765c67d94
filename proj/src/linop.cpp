#include "qaskey/linop.hpp"

namespace qaskey {

PolyOp PolyOp::shifts(const Rational& q, std::vector<ShiftTerm> terms) {
    return PolyOp([q, terms = std::move(terms)](const Laurent& f) {
        RatFun acc;
        for (const auto& t : terms)
            acc += t.coeff * RatFun(f.substitute(q, t.qexp, t.zsign));
        return acc.to_laurent();
    });
}

std::vector<Laurent> laurent_basis(int max_deg) {
    std::vector<Laurent> b;
    for (int k = -max_deg; k <= max_deg; ++k) b.push_back(Laurent::monomial(k));
    return b;
}

std::vector<Laurent> symmetric_basis(int max_deg) {
    std::vector<Laurent> b;
    b.push_back(Laurent(Rational(1)));
    for (int k = 1; k <= max_deg; ++k)
        b.push_back(Laurent::monomial(k) + Laurent::monomial(-k));
    return b;
}

std::vector<Laurent> x_basis(int max_deg) {
    std::vector<Laurent> b;
    for (int k = 0; k <= max_deg; ++k) b.push_back(Laurent::monomial(k));
    return b;
}

std::vector<VecPoly> vec_basis(int max_deg) {
    std::vector<VecPoly> b;
    for (int k = -max_deg; k <= max_deg; ++k) {
        b.emplace_back(Laurent::monomial(k), Laurent());
        b.emplace_back(Laurent(), Laurent::monomial(k));
    }
    return b;
}

std::vector<VecPoly> vec_x_basis(int max_deg) {
    std::vector<VecPoly> b;
    for (int k = 0; k <= max_deg; ++k) {
        b.emplace_back(Laurent::monomial(k), Laurent());
        b.emplace_back(Laurent(), Laurent::monomial(k));
    }
    return b;
}

CheckResult op_equal_on_basis(const std::string& id, const PolyOp& A, const PolyOp& B,
                              const std::vector<Laurent>& basis) {
    for (const auto& f : basis) {
        Laurent x, y;
        try {
            x = A(f);
            y = B(f);
        } catch (const Error& e) {
            return {id, false, "error on " + f.str() + ": " + e.what()};
        }
        if (!(x == y))
            return {id, false,
                    "basis " + f.str() + ": lhs = " + x.str() + ", rhs = " + y.str()};
    }
    return {id, true, ""};
}

CheckResult op_equal_on_basis(const std::string& id, const MatOp& A, const MatOp& B,
                              const std::vector<VecPoly>& basis) {
    for (const auto& f : basis) {
        VecPoly x, y;
        try {
            x = A(f);
            y = B(f);
        } catch (const Error& e) {
            return {id, false,
                    "error on (" + f.e[0].str() + ", " + f.e[1].str() + "): " + e.what()};
        }
        if (!(x == y))
            return {id, false,
                    "basis (" + f.e[0].str() + ", " + f.e[1].str() + "): lhs = (" +
                        x.e[0].str() + ", " + x.e[1].str() + "), rhs = (" + y.e[0].str() +
                        ", " + y.e[1].str() + ")"};
    }
    return {id, true, ""};
}

CheckResult op_zero_on_basis(const std::string& id, const PolyOp& A,
                             const std::vector<Laurent>& basis) {
    for (const auto& f : basis) {
        Laurent x;
        try {
            x = A(f);
        } catch (const Error& e) {
            return {id, false, "error on " + f.str() + ": " + e.what()};
        }
        if (!x.is_zero()) return {id, false, "basis " + f.str() + ": image = " + x.str()};
    }
    return {id, true, ""};
}

CheckResult op_zero_on_basis(const std::string& id, const MatOp& A,
                             const std::vector<VecPoly>& basis) {
    for (const auto& f : basis) {
        VecPoly x;
        try {
            x = A(f);
        } catch (const Error& e) {
            return {id, false,
                    "error on (" + f.e[0].str() + ", " + f.e[1].str() + "): " + e.what()};
        }
        if (!x.e[0].is_zero() || !x.e[1].is_zero())
            return {id, false,
                    "basis (" + f.e[0].str() + ", " + f.e[1].str() + "): image = (" +
                        x.e[0].str() + ", " + x.e[1].str() + ")"};
    }
    return {id, true, ""};
}

} // namespace qaskey
