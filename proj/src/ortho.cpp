#include "qaskey/ortho.hpp"

#include "qaskey/families.hpp"
#include "qaskey/operators.hpp"
#include "qaskey/qkernel.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace qaskey {
namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

double dbl(const Rational& r) { return r.convert_to<double>(); }

std::string fmt(double d) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", d);
    return std::string(buf);
}

cplx ceval(const Laurent& f, cplx z) {
    cplx acc = 0;
    for (const auto& [k, c] : f.coeffs()) acc += dbl(c) * std::pow(z, k);
    return acc;
}

// deterministic pairwise reduction
cplx psum(const std::vector<cplx>& v, size_t lo, size_t hi) {
    if (hi - lo <= 8) {
        cplx acc = 0;
        for (size_t i = lo; i < hi; ++i) acc += v[i];
        return acc;
    }
    size_t mid = lo + (hi - lo) / 2;
    return psum(v, lo, mid) + psum(v, mid, hi);
}
cplx psum(const std::vector<cplx>& v) { return psum(v, 0, v.size()); }

// midpoint nodes on the unit circle (closed under conjugation, avoid +-1)
std::vector<cplx> circle_nodes(int K) {
    std::vector<cplx> z(K);
    for (int j = 0; j < K; ++j) {
        double th = 2 * kPi * (j + 0.5) / K;
        z[j] = {std::cos(th), std::sin(th)};
    }
    return z;
}

// integral of the sampled integrand over dz/(iz) = d(theta)
double integrate(const std::vector<cplx>& samples) {
    return (2 * kPi / samples.size()) * psum(samples).real();
}

ParamSet shifted_ab(const ParamSet& p) {
    ParamSet s = p;
    s.a = p.q * p.a;
    s.b = p.q * p.b;
    return s;
}

// values of a vector polynomial at every node
struct VecSamples {
    std::vector<cplx> e0, e1;
};

VecSamples sample_vec(const VecPoly& v, const std::vector<cplx>& z) {
    VecSamples s;
    s.e0.reserve(z.size());
    s.e1.reserve(z.size());
    for (cplx zz : z) {
        s.e0.push_back(ceval(v.e[0], zz));
        s.e1.push_back(ceval(v.e[1], zz));
    }
    return s;
}

// <f, g>_W = integral of f^t W g over the circle
double pair_w(const VecSamples& f, const VecSamples& g,
              const std::vector<double>& w0, const std::vector<double>& w1) {
    std::vector<cplx> t(w0.size());
    for (size_t j = 0; j < w0.size(); ++j)
        t[j] = f.e0[j] * g.e0[j] * w0[j] + f.e1[j] * g.e1[j] * w1[j];
    return (2 * kPi / w0.size()) * psum(t).real();
}

// dense window matrix of a sequence operator: out[i][j] is the coefficient
// with which input index in_lo + j feeds output index out_lo + i
std::vector<std::vector<Rational>> dense_window(const SeqOp& A, int out_lo,
                                                int out_hi, int in_lo,
                                                int in_hi) {
    int rows = out_hi - out_lo + 1, cols = in_hi - in_lo + 1;
    std::vector<std::vector<Rational>> M(rows,
                                         std::vector<Rational>(cols, 0));
    for (int j = 0; j < cols; ++j) {
        SeqR delta = SeqR::tabulate(in_lo, in_hi, [&](int n) -> Rational {
            return n == in_lo + j ? 1 : 0;
        });
        SeqR out = A(delta);
        for (int i = 0; i < rows; ++i)
            if (out.has(out_lo + i)) M[i][j] = out.at(out_lo + i);
    }
    return M;
}

} // namespace

ParamSet param_set_P3() {
    ParamSet p;
    p.family = Family::AW;
    p.q = rat(1, 2);
    p.a = rat(9, 10);
    p.b = rat(-7, 10);
    p.c = rat(3, 5);
    p.d = rat(3, 10);
    p.validate();
    return p;
}

double aw_weight(cplx z, const ParamSet& p, double tol) {
    double q = dbl(p.q), a = dbl(p.a), b = dbl(p.b), c = dbl(p.c),
           d = dbl(p.d);
    double pre = qpoch_inf(q, q, tol).real();
    for (double x : {a * b, a * c, a * d, b * c, b * d, c * d})
        pre *= qpoch_inf(x, q, tol).real();
    pre /= 4 * kPi * qpoch_inf(a * b * c * d, q, tol).real();
    cplx ratio = qpoch_inf(z * z, q, tol) /
                 (qpoch_inf(a * z, q, tol) * qpoch_inf(b * z, q, tol) *
                  qpoch_inf(c * z, q, tol) * qpoch_inf(d * z, q, tol));
    return pre * std::norm(ratio);
}

Rational weight_constant_C(const ParamSet& p) {
    const Rational &q = p.q, &a = p.a, &b = p.b, &c = p.c, &d = p.d;
    Rational abcd = a * b * c * d;
    return -a * a * a * b * (1 - a * b) * (1 - q * a * b) * (1 - a * c) *
           (1 - a * d) * (1 - b * c) * (1 - b * d) /
           ((1 - abcd) * (1 - q * abcd));
}

std::array<double, 2> weight_matrix_diag(cplx z, const ParamSet& p,
                                         double tol) {
    return {aw_weight(z, p, tol),
            dbl(weight_constant_C(p)) * aw_weight(z, shifted_ab(p), tol)};
}

std::vector<std::vector<double>> gram_matrix(const ParamSet& p, GramKind k,
                                             int max_n, int nodes) {
    std::vector<cplx> z = circle_nodes(nodes);

    if (k == GramKind::Scalar) {
        std::vector<double> w(nodes);
        for (int j = 0; j < nodes; ++j) w[j] = aw_weight(z[j], p);
        std::vector<std::vector<cplx>> R(max_n + 1);
        for (int n = 0; n <= max_n; ++n) {
            Laurent f = family_poly(p, n);
            R[n].reserve(nodes);
            for (cplx zz : z) R[n].push_back(ceval(f, zz));
        }
        std::vector<std::vector<double>> G(max_n + 1,
                                           std::vector<double>(max_n + 1));
        std::vector<cplx> t(nodes);
        for (int m = 0; m <= max_n; ++m)
            for (int n = m; n <= max_n; ++n) {
                for (int j = 0; j < nodes; ++j)
                    t[j] = R[m][j] * R[n][j] * w[j];
                G[m][n] = G[n][m] = integrate(t);
            }
        return G;
    }

    std::vector<double> w0(nodes), w1(nodes);
    for (int j = 0; j < nodes; ++j) {
        auto d = weight_matrix_diag(z[j], p);
        w0[j] = d[0];
        w1[j] = d[1];
    }
    // flat list of vector polynomials per kind
    std::vector<int> idx;
    if (k == GramKind::Vector) {
        for (int n = -max_n; n <= max_n; ++n) idx.push_back(n);
    } else {
        for (int n = 1; n <= max_n; ++n) {
            idx.push_back(n);
            idx.push_back(-n);
        }
    }
    std::vector<VecSamples> V;
    V.reserve(idx.size());
    for (int n : idx) V.push_back(sample_vec(vector_poly(p, n), z));
    size_t N = idx.size();
    std::vector<std::vector<double>> G(N, std::vector<double>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i; j < N; ++j)
            G[i][j] = G[j][i] = pair_w(V[i], V[j], w0, w1);
    return G;
}

Report check_weight(const ParamSet& p, int sample_nodes, double tol) {
    Report r{"orthogonality-weight", {}};
    std::vector<cplx> z = circle_nodes(sample_nodes);

    bool nonneg = true, sym = true, mat_nonneg = true;
    std::string wit;
    for (int j = 0; j < sample_nodes; ++j) {
        double w = aw_weight(z[j], p);
        if (w < 0) {
            nonneg = false;
            wit = "negative weight at node " + std::to_string(j);
        }
        double wc = aw_weight(std::conj(z[j]), p);
        if (std::abs(w - wc) > tol * (1 + std::abs(w))) sym = false;
        auto d = weight_matrix_diag(z[j], p);
        if (d[0] < 0 || d[1] < 0) mat_nonneg = false;
    }
    r.add("weight nonnegative on nodes", nonneg, wit);
    r.add("weight conjugation-symmetric", sym);
    r.add("matrix weight nonnegative on nodes", mat_nonneg);

    // unit normalization of the degree-0 inner product
    std::vector<cplx> zq = circle_nodes(4096);
    std::vector<cplx> t(zq.size());
    for (size_t j = 0; j < zq.size(); ++j) t[j] = aw_weight(zq[j], p);
    double h0 = integrate(t);
    r.add("unit normalization", std::abs(h0 - 1) <= tol,
          "integral " + fmt(h0));

    Rational C = weight_constant_C(p);
    r.add("matrix weight constant positive", C > 0, to_string(C));

    // ratio factorization: C w_{qa,qb}/w = -a^3 b (1-az)(1-a/z)(1-bz)(1-b/z)
    double a = dbl(p.a), b = dbl(p.b);
    bool ratio_ok = true;
    for (int j = 0; j < sample_nodes; ++j) {
        auto d = weight_matrix_diag(z[j], p);
        double lhs = d[1] / d[0];
        cplx zz = z[j];
        double rhs = (-a * a * a * b * (1.0 - a * zz) * (1.0 - a / zz) *
                      (1.0 - b * zz) * (1.0 - b / zz))
                         .real();
        if (std::abs(lhs - rhs) > tol * (1 + std::abs(rhs))) {
            ratio_ok = false;
            wit = "node " + std::to_string(j) + ": " + fmt(lhs) + " vs " +
                  fmt(rhs);
        }
    }
    r.add("weight ratio factorization", ratio_ok, wit);
    return r;
}

Report check_gram(const ParamSet& p, GramKind k, int max_n, int nodes,
                  double tol) {
    std::string kind = k == GramKind::Scalar  ? "scalar"
                       : k == GramKind::Vector ? "vector"
                                               : "matrix";
    Report r{"gram-" + kind, {}};
    auto G = gram_matrix(p, k, max_n, nodes);
    size_t N = G.size();
    double maxdiag = 0;
    bool diag_pos = true;
    for (size_t i = 0; i < N; ++i) {
        maxdiag = std::max(maxdiag, G[i][i]);
        if (G[i][i] <= 0) diag_pos = false;
    }
    r.add("diagonal positive", diag_pos);
    bool off_ok = true;
    std::string wit;
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            if (i == j) continue;
            if (k == GramKind::Matrix && (i / 2) == (j / 2)) continue;
            if (std::abs(G[i][j]) > tol * maxdiag) {
                off_ok = false;
                wit = "entry (" + std::to_string(i) + "," +
                      std::to_string(j) + ") = " + fmt(G[i][j]);
            }
        }
    r.add("off-diagonal vanishing", off_ok, wit);
    if (k == GramKind::Scalar)
        r.add("degree-0 norm is 1", std::abs(G[0][0] - 1) <= tol,
              fmt(G[0][0]));
    if (k == GramKind::Matrix) {
        // each 2x2 diagonal block must be h_n times the identity
        bool blocks_ok = true;
        for (size_t n = 0; 2 * n + 1 < N; ++n) {
            double h00 = G[2 * n][2 * n], h11 = G[2 * n + 1][2 * n + 1];
            double off = std::abs(G[2 * n][2 * n + 1]);
            if (std::abs(h00 - h11) > tol * maxdiag || off > tol * maxdiag)
                blocks_ok = false;
        }
        r.add("diagonal blocks scalar", blocks_ok);
    }
    return r;
}

Report check_adjointness_and_transform(const ParamSet& p, int max_n,
                                       int nodes, double tol) {
    Report r{"adjointness-and-transform", {}};
    std::vector<cplx> z = circle_nodes(nodes);
    std::vector<double> w(nodes), w0(nodes), w1(nodes);
    for (int j = 0; j < nodes; ++j) {
        auto d = weight_matrix_diag(z[j], p);
        w[j] = d[0];
        w0[j] = d[0];
        w1[j] = d[1];
    }

    // ---- matrix-weight adjointness: Z^{-1} moves across W as the
    // conjugated Hecke word
    MatOp T1 = op_matrix(MGen::T1, p);
    MatOp T1i = op_matrix(MGen::T1inv, p);
    MatOp Zi = op_matrix(MGen::Zinv, p);
    // components must be symmetric Laurent polynomials: the 2x2
    // realization acts on decompositions of symmetric functions
    Laurent s1 = Laurent::monomial(1) + Laurent::monomial(-1);
    Laurent s2m = Laurent::monomial(2) + Laurent::monomial(-2);
    std::vector<std::pair<VecPoly, VecPoly>> pairs = {
        {VecPoly(s1, Laurent{Rational(0)}),
         VecPoly(s2m, Laurent{Rational(0)})},
        {VecPoly(Laurent{Rational(0)}, Laurent{Rational(1)}),
         VecPoly(s1, Laurent{Rational(1)})},
        {VecPoly(s1 + Laurent{Rational(2)}, s1),
         VecPoly(s2m, Laurent{Rational(2)})},
    };
    int pi = 0;
    for (const auto& [f, g] : pairs) {
        VecPoly lf = T1i(Zi(T1(f)));
        double lhs = pair_w(sample_vec(lf, z), sample_vec(g, z), w0, w1);
        double rhs = pair_w(sample_vec(f, z), sample_vec(Zi(g), z), w0, w1);
        r.add("weight adjointness pair " + std::to_string(pi++),
              std::abs(lhs - rhs) <= tol * (1 + std::abs(rhs)),
              fmt(lhs) + " vs " + fmt(rhs));
    }

    // ---- scalar transform: hat f(n) = <f, R_n>_w
    auto hat_s = [&](const Laurent& f, int n) {
        Laurent R = family_poly(p, n);
        std::vector<cplx> t(nodes);
        for (int j = 0; j < nodes; ++j)
            t[j] = ceval(f, z[j]) * ceval(R, z[j]) * w[j];
        return integrate(t);
    };
    Laurent fs = Laurent::monomial(1) + Laurent::monomial(-1);
    Laurent Lfs = op_L(p)(fs);
    bool intertwine = true;
    std::string wit;
    for (int n = 0; n <= 4; ++n) {
        double lhs = dbl(eigenvalue(p, n)) * hat_s(fs, n);
        double rhs = hat_s(Lfs, n);
        if (std::abs(lhs - rhs) > tol * (1 + std::abs(rhs))) {
            intertwine = false;
            wit = "n=" + std::to_string(n) + ": " + fmt(lhs) + " vs " +
                  fmt(rhs);
        }
    }
    r.add("scalar transform intertwines the difference operator", intertwine,
          wit);

    // orthogonality-forced zeros of the transform of a family member
    Laurent R2 = family_poly(p, 2);
    bool zeros = true;
    for (int n = 0; n <= 5; ++n) {
        double v = hat_s(R2, n);
        if (n == 2 ? v <= 0 : std::abs(v) > tol) {
            zeros = false;
            wit = "n=" + std::to_string(n) + ": " + fmt(v);
        }
    }
    r.add("transform of a family member is a single spike", zeros, wit);

    // self-adjointness of L on symmetric pairs
    auto inner = [&](const Laurent& f, const Laurent& g) {
        std::vector<cplx> t(nodes);
        for (int j = 0; j < nodes; ++j)
            t[j] = ceval(f, z[j]) * ceval(g, z[j]) * w[j];
        return integrate(t);
    };
    bool selfadj = true;
    Laurent s2 = Laurent::monomial(2) + Laurent::monomial(-2);
    Laurent s3 = Laurent::monomial(3) + Laurent::monomial(-3);
    for (const auto& [f, g] :
         std::vector<std::pair<Laurent, Laurent>>{{fs, s2}, {s2, s3}}) {
        double lhs = inner(op_L(p)(f), g);
        double rhs = inner(f, op_L(p)(g));
        if (std::abs(lhs - rhs) > tol * (1 + std::abs(rhs))) selfadj = false;
    }
    r.add("difference operator self-adjoint", selfadj);

    // ---- vector transform identities on the signed window
    const int pad = 3;
    int lo = -max_n - pad, hi = max_n + pad;
    std::vector<VecSamples> E;
    for (int n = lo; n <= hi; ++n)
        E.push_back(sample_vec(vector_poly(p, n), z));
    auto hat_v = [&](const VecPoly& f) {
        VecSamples fs_ = sample_vec(f, z);
        std::vector<double> h(hi - lo + 1);
        for (int n = lo; n <= hi; ++n)
            h[n - lo] = pair_w(fs_, E[n - lo], w0, w1);
        return h;
    };
    auto window_apply = [&](const SeqOp& A, const std::vector<double>& h) {
        auto M = dense_window(A, -max_n, max_n, lo, hi);
        std::vector<double> out(2 * max_n + 1, 0.0);
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = 0; j < h.size(); ++j)
                out[i] += dbl(M[i][j]) * h[j];
        return out;
    };
    auto compare = [&](const std::string& id, const std::vector<double>& lhs,
                       const std::vector<double>& rhs_full) {
        bool ok = true;
        std::string w2;
        for (int n = -max_n; n <= max_n; ++n) {
            double a = lhs[n + max_n], b = rhs_full[n - lo];
            if (std::abs(a - b) > tol * (1 + std::abs(b))) {
                ok = false;
                w2 = "n=" + std::to_string(n) + ": " + fmt(a) + " vs " +
                     fmt(b);
            }
        }
        r.add(id, ok, w2);
    };

    std::vector<VecPoly> tests = {
        VecPoly(s1, Laurent{Rational(0)}),
        VecPoly(s2m + Laurent{Rational(2)}, s1),
    };
    MatOp Y = op_matrix(MGen::Y, p);
    SeqOp Mn = op_nonsym_recurrence(p);
    SeqOp Un = op_U(p);
    int ti = 0;
    for (const VecPoly& f : tests) {
        std::string tag = " (test vector " + std::to_string(ti++) + ")";
        auto h = hat_v(f);
        compare("recurrence operator vs conjugated inverse shift" + tag,
                window_apply(Mn, h), hat_v(T1i(Zi(T1(f)))));
        // spectral diagonal vs Y
        std::vector<double> nh(2 * max_n + 1);
        for (int n = -max_n; n <= max_n; ++n)
            nh[n + max_n] = h[n - lo] / dbl(spectral(GridKind::Nu, p, n));
        compare("spectral diagonal vs Hecke Y" + tag, nh, hat_v(Y(f)));
        compare("transform-side Hecke vs T1" + tag, window_apply(Un, h),
                hat_v(T1(f)));
    }
    return r;
}

Report check_quadrature_convergence(const ParamSet& p, int max_n, int nodes,
                                    double tol) {
    Report r{"quadrature-convergence", {}};
    auto G1 = gram_matrix(p, GramKind::Scalar, max_n, nodes);
    auto G2 = gram_matrix(p, GramKind::Scalar, max_n, 2 * nodes);
    double worst = 0;
    for (size_t i = 0; i < G1.size(); ++i)
        for (size_t j = 0; j < G1.size(); ++j)
            worst = std::max(worst, std::abs(G1[i][j] - G2[i][j]));
    r.add("doubling nodes is stable", worst < tol,
          "max entry change " + fmt(worst));
    return r;
}

} // namespace qaskey
