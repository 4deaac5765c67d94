#pragma once

#include "qaskey/ratfun.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qaskey {

struct WindowError : Error {
    explicit WindowError(const std::string& w) : Error(w) {}
};

// ---------------------------------------------------------------------------
// operators on Laurent polynomials

// One summand of a q-difference-reflection operator:
//   coeff(z) * f[q^qexp * z^zsign]
struct ShiftTerm {
    RatFun coeff;
    int qexp = 0;
    int zsign = 1;
};

class PolyOp {
public:
    using Fn = std::function<Laurent(const Laurent&)>;

    PolyOp() : fn_([](const Laurent& f) { return f; }) {}
    explicit PolyOp(Fn fn) : fn_(std::move(fn)) {}

    static PolyOp identity() { return PolyOp(); }
    static PolyOp scalar(const Rational& s) {
        return PolyOp([s](const Laurent& f) { return f * s; });
    }
    // multiplication by a fixed Laurent polynomial
    static PolyOp mult(const Laurent& m) {
        return PolyOp([m](const Laurent& f) { return f * m; });
    }
    // sum of shift terms over base q; result must clear to a Laurent
    // polynomial (NotPolynomial otherwise)
    static PolyOp shifts(const Rational& q, std::vector<ShiftTerm> terms);

    Laurent operator()(const Laurent& f) const { return fn_(f); }

    friend PolyOp operator*(const PolyOp& a, const PolyOp& b) { // composition
        return PolyOp([a, b](const Laurent& f) { return a(b(f)); });
    }
    friend PolyOp operator+(const PolyOp& a, const PolyOp& b) {
        return PolyOp([a, b](const Laurent& f) { return a(f) + b(f); });
    }
    friend PolyOp operator-(const PolyOp& a, const PolyOp& b) {
        return PolyOp([a, b](const Laurent& f) { return a(f) - b(f); });
    }
    friend PolyOp operator*(const Rational& s, const PolyOp& a) {
        return PolyOp([a, s](const Laurent& f) { return a(f) * s; });
    }

private:
    Fn fn_;
};

// ---------------------------------------------------------------------------
// operators on (partial) sequences

// A sequence known on a finite set of integer indices.  Operators drop
// output indices whose inputs are unavailable, so the valid set shrinks;
// comparisons must state the index range they need.
template <class T>
struct Sequence {
    std::map<int, T> v;

    bool has(int n) const { return v.count(n) != 0; }
    const T& at(int n) const {
        auto it = v.find(n);
        if (it == v.end())
            throw WindowError("sequence value at index " + std::to_string(n) +
                              " outside the computed window");
        return it->second;
    }
    void set(int n, T x) { v[n] = std::move(x); }

    static Sequence tabulate(int lo, int hi, const std::function<T(int)>& f) {
        Sequence s;
        for (int n = lo; n <= hi; ++n) s.v[n] = f(n);
        return s;
    }
};

using SeqR = Sequence<Rational>;

template <class T>
class SeqOp_ {
public:
    using Fn = std::function<Sequence<T>(const Sequence<T>&)>;
    // coefficient row: for output index n, the list of (input index, coeff)
    using Row = std::function<std::vector<std::pair<int, Rational>>(int)>;

    SeqOp_() : fn_([](const Sequence<T>& g) { return g; }) {}
    explicit SeqOp_(Fn fn) : fn_(std::move(fn)) {}

    static SeqOp_ identity() { return SeqOp_(); }
    static SeqOp_ scalar(const Rational& s) {
        return banded([s](int n) {
            return std::vector<std::pair<int, Rational>>{{n, s}};
        });
    }
    static SeqOp_ diagonal(const std::function<Rational(int)>& d) {
        return banded([d](int n) {
            return std::vector<std::pair<int, Rational>>{{n, d(n)}};
        });
    }
    // Builds the operator from coefficient rows.  Zero coefficients never
    // count as reads, so boundary conventions such as C_0 = 0 hold without
    // touching undefined entries.
    static SeqOp_ banded(Row row) {
        return SeqOp_([row](const Sequence<T>& g) {
            Sequence<T> out;
            for (const auto& [n, unused] : g.v) {
                T acc{};
                bool ok = true;
                for (const auto& [m, c] : row(n)) {
                    if (c == 0) continue;
                    if (!g.has(m)) {
                        ok = false;
                        break;
                    }
                    acc = acc + g.at(m) * c;
                }
                if (ok) out.v[n] = acc;
            }
            return out;
        });
    }

    Sequence<T> operator()(const Sequence<T>& g) const { return fn_(g); }

    friend SeqOp_ operator*(const SeqOp_& a, const SeqOp_& b) {
        return SeqOp_([a, b](const Sequence<T>& g) { return a(b(g)); });
    }
    friend SeqOp_ operator+(const SeqOp_& a, const SeqOp_& b) {
        return SeqOp_([a, b](const Sequence<T>& g) {
            Sequence<T> x = a(g), y = b(g), out;
            for (const auto& [n, vx] : x.v)
                if (y.has(n)) out.v[n] = vx + y.at(n) * Rational(1);
            return out;
        });
    }
    friend SeqOp_ operator-(const SeqOp_& a, const SeqOp_& b) {
        return SeqOp_([a, b](const Sequence<T>& g) {
            Sequence<T> x = a(g), y = b(g), out;
            for (const auto& [n, vx] : x.v)
                if (y.has(n)) out.v[n] = vx + y.at(n) * Rational(-1);
            return out;
        });
    }
    friend SeqOp_ operator*(const Rational& s, const SeqOp_& a) {
        return SeqOp_([a, s](const Sequence<T>& g) {
            Sequence<T> x = a(g);
            for (auto& [n, vx] : x.v) vx = vx * s;
            return x;
        });
    }

private:
    Fn fn_;
};

using SeqOp = SeqOp_<Rational>;

// ---------------------------------------------------------------------------
// 2-vectors of Laurent polynomials and 2x2 operator matrices

struct VecPoly {
    std::array<Laurent, 2> e;

    VecPoly() = default;
    VecPoly(Laurent a, Laurent b) : e{std::move(a), std::move(b)} {}
    bool operator==(const VecPoly& o) const { return e == o.e; }
    VecPoly operator+(const VecPoly& o) const { return {e[0] + o.e[0], e[1] + o.e[1]}; }
    VecPoly operator-(const VecPoly& o) const { return {e[0] - o.e[0], e[1] - o.e[1]}; }
    VecPoly operator*(const Rational& s) const { return {e[0] * s, e[1] * s}; }
};

// 2-vector of exact rationals (evaluated vector polynomials)
struct VecR {
    std::array<Rational, 2> e{0, 0};

    VecR() = default;
    VecR(Rational a, Rational b) : e{std::move(a), std::move(b)} {}
    bool operator==(const VecR& o) const { return e == o.e; }
    VecR operator+(const VecR& o) const { return {e[0] + o.e[0], e[1] + o.e[1]}; }
    VecR operator-(const VecR& o) const { return {e[0] - o.e[0], e[1] - o.e[1]}; }
    VecR operator*(const Rational& s) const { return {e[0] * s, e[1] * s}; }
};

using SeqV = Sequence<VecR>;
using SeqOpV = SeqOp_<VecR>;

class MatOp {
public:
    std::array<std::array<PolyOp, 2>, 2> a;

    static MatOp identity() {
        MatOp m = zero();
        m.a[0][0] = PolyOp::identity();
        m.a[1][1] = PolyOp::identity();
        return m;
    }
    static MatOp zero() {
        MatOp m;
        for (auto& row : m.a)
            for (auto& x : row) x = PolyOp::scalar(0);
        return m;
    }
    static MatOp scalar(const Rational& s) {
        return diag(PolyOp::scalar(s), PolyOp::scalar(s));
    }
    static MatOp diag(const PolyOp& d0, const PolyOp& d1) {
        MatOp m = zero();
        m.a[0][0] = d0;
        m.a[1][1] = d1;
        return m;
    }

    VecPoly operator()(const VecPoly& v) const {
        return {a[0][0](v.e[0]) + a[0][1](v.e[1]), a[1][0](v.e[0]) + a[1][1](v.e[1])};
    }

    friend MatOp operator*(const MatOp& x, const MatOp& y) {
        MatOp m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                m.a[i][j] = x.a[i][0] * y.a[0][j] + x.a[i][1] * y.a[1][j];
        return m;
    }
    friend MatOp operator+(const MatOp& x, const MatOp& y) {
        MatOp m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.a[i][j] = x.a[i][j] + y.a[i][j];
        return m;
    }
    friend MatOp operator-(const MatOp& x, const MatOp& y) {
        MatOp m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.a[i][j] = x.a[i][j] - y.a[i][j];
        return m;
    }
    friend MatOp operator*(const Rational& s, const MatOp& y) {
        MatOp m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.a[i][j] = s * y.a[i][j];
        return m;
    }
};

// 2x2 matrix of rational functions (for entrywise exact matrix identities)
struct MatRF {
    std::array<std::array<RatFun, 2>, 2> a;

    static MatRF diag(RatFun d0, RatFun d1) {
        MatRF m;
        m.a[0][0] = std::move(d0);
        m.a[1][1] = std::move(d1);
        return m;
    }
    MatRF operator*(const MatRF& o) const {
        MatRF m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                m.a[i][j] = a[i][0] * o.a[0][j] + a[i][1] * o.a[1][j];
        return m;
    }
    RatFun det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
    bool operator==(const MatRF& o) const { return a == o.a; }
};

// ---------------------------------------------------------------------------
// reports and equality on bases

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string witness; // empty on pass; failure evidence otherwise
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int passed() const {
        int k = 0;
        for (const auto& c : checks) k += c.pass;
        return k;
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void add(const std::string& id, bool pass, const std::string& witness = "") {
        checks.push_back({id, pass, pass ? "" : witness});
    }
};

std::vector<Laurent> laurent_basis(int max_deg);   // z^k, |k| <= max_deg
std::vector<Laurent> symmetric_basis(int max_deg); // z^k + z^-k, 0 <= k <= max_deg
std::vector<Laurent> x_basis(int max_deg);         // x^k, 0 <= k <= max_deg
std::vector<VecPoly> vec_basis(int max_deg);       // (z^k, 0), (0, z^k)
std::vector<VecPoly> vec_x_basis(int max_deg);     // same with k >= 0 only

CheckResult op_equal_on_basis(const std::string& id, const PolyOp& A, const PolyOp& B,
                              const std::vector<Laurent>& basis);
CheckResult op_equal_on_basis(const std::string& id, const MatOp& A, const MatOp& B,
                              const std::vector<VecPoly>& basis);
// zero-operator checks (relation words evaluated to a single operator)
CheckResult op_zero_on_basis(const std::string& id, const PolyOp& A,
                             const std::vector<Laurent>& basis);
CheckResult op_zero_on_basis(const std::string& id, const MatOp& A,
                             const std::vector<VecPoly>& basis);

} // namespace qaskey
