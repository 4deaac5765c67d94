#include "qaskey/laurent.hpp"

#include <sstream>
#include <vector>

namespace qaskey {

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [k, v] : o.c_) add(k, v);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [k, v] : o.c_) add(k, -v);
    return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::map<int, Rational> out;
    for (const auto& [i, u] : c_)
        for (const auto& [j, v] : o.c_) {
            auto it = out.find(i + j);
            if (it == out.end())
                out[i + j] = u * v;
            else
                it->second += u * v;
        }
    c_.clear();
    for (auto& [k, v] : out)
        if (v != 0) c_[k] = std::move(v);
    return *this;
}

Laurent& Laurent::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [k, v] : c_) v *= s;
    return *this;
}

Rational Laurent::eval(const Rational& z0) const {
    if (z0 == 0) {
        if (lo() < 0) throw ZeroPoint();
        // ordinary polynomial: value is the constant coefficient
        return coeff(0);
    }
    Rational acc = 0;
    for (const auto& [k, v] : c_) acc += v * rpow(z0, k);
    return acc;
}

Laurent Laurent::substitute(const Rational& q, int e, int s) const {
    if (s != 1 && s != -1) throw Error("substitute: s must be +1 or -1");
    Laurent out;
    for (const auto& [k, v] : c_) out.add(s * k, v * rpow(q, static_cast<long>(e) * k));
    return out;
}

bool Laurent::is_symmetric() const {
    for (const auto& [k, v] : c_)
        if (coeff(-k) != v) return false;
    return true;
}

std::string Laurent::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(v) << ")";
        if (k != 0) os << var << "^" << k;
    }
    return os.str();
}

namespace {

// dense ordinary-polynomial view, index = exponent
using Dense = std::vector<Rational>;

Dense to_dense(const Laurent& f) {
    Dense d(static_cast<size_t>(f.hi() - f.lo()) + 1);
    for (const auto& [k, v] : f.coeffs()) d[static_cast<size_t>(k - f.lo())] = v;
    return d;
}

void trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

// a = b*q + r with deg r < deg b (b nonzero)
void divmod(Dense a, const Dense& b, Dense& q, Dense& r) {
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / lead;
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
        if (a.empty()) break;
        if (a.size() < b.size()) break;
    }
    trim(q);
    r = std::move(a);
}

Laurent from_dense(const Dense& d, int shift) {
    Laurent f;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) f.set(static_cast<int>(i) + shift, d[i]);
    return f;
}

} // namespace

Laurent exact_divide(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    if (a.is_zero()) return Laurent();
    Dense A = to_dense(a), B = to_dense(b), Q, R;
    divmod(A, B, Q, R);
    if (!R.empty())
        throw NotPolynomial("inexact polynomial division, remainder " +
                            from_dense(R, a.lo()).str());
    return from_dense(Q, a.lo() - b.lo());
}

bool divides(const Laurent& b, const Laurent& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    Dense A = to_dense(a), B = to_dense(b), Q, R;
    divmod(A, B, Q, R);
    return R.empty();
}

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
    Dense A = to_dense(a), B = to_dense(b);
    trim(A);
    trim(B);
    while (!B.empty()) {
        Dense Q, R;
        divmod(A, B, Q, R);
        A = std::move(B);
        B = std::move(R);
    }
    if (A.empty()) return Laurent();
    Rational lead = A.back();
    Laurent g = from_dense(A, 0);
    return g * (Rational(1) / lead);
}

} // namespace qaskey
