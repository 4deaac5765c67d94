#pragma once

#include "qaskey/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace qaskey {

// Noncommutative polynomial in named generators: a rational combination of
// words.  Used to state algebra relations abstractly, so that one relation
// can be tested against several operator realizations.
class NCPoly {
public:
    using Word = std::vector<std::string>;

    NCPoly() = default;
    explicit NCPoly(const Rational& c) {
        if (c != 0) c_[{}] = c;
    }
    static NCPoly gen(const std::string& g) {
        NCPoly p;
        p.c_[{g}] = 1;
        return p;
    }
    static NCPoly word(Word w, const Rational& c = 1) {
        NCPoly p;
        if (c != 0) p.c_[std::move(w)] = c;
        return p;
    }

    const std::map<Word, Rational>& terms() const { return c_; }

    void add(const Word& w, const Rational& v) {
        auto it = c_.find(w);
        if (it == c_.end()) {
            if (v != 0) c_[w] = v;
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [w, v] : o.c_) add(w, v);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (const auto& [w, v] : o.c_) add(w, -v);
        return *this;
    }
    NCPoly& operator*=(const NCPoly& o) {
        std::map<Word, Rational> out;
        for (const auto& [w1, v1] : c_)
            for (const auto& [w2, v2] : o.c_) {
                Word w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                auto it = out.find(w);
                if (it == out.end())
                    out[std::move(w)] = v1 * v2;
                else
                    it->second += v1 * v2;
            }
        c_.clear();
        for (auto& [w, v] : out)
            if (v != 0) c_[w] = std::move(v);
        return *this;
    }
    NCPoly& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& [w, v] : c_) v *= s;
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const NCPoly& b) { return a *= b; }
    friend NCPoly operator*(NCPoly a, const Rational& s) { return a *= s; }
    friend NCPoly operator*(const Rational& s, NCPoly a) { return a *= s; }
    friend NCPoly operator-(const NCPoly& a) { return a * Rational(-1); }
    bool operator==(const NCPoly& o) const { return c_ == o.c_; }

    // every word reversed (order of factors flipped)
    NCPoly reversed() const {
        NCPoly p;
        for (const auto& [w, v] : c_) {
            Word r = w;
            std::reverse(r.begin(), r.end());
            p.add(r, v);
        }
        return p;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (const auto& [w, v] : c_) {
            if (!s.empty()) s += " + ";
            s += "(" + to_string(v) + ")";
            for (const auto& g : w) s += "*" + g;
        }
        return s;
    }

private:
    std::map<Word, Rational> c_;
};

// Evaluate an NCPoly against operator bindings.  Op must support
// composition (*), addition (+), scalar multiplication Rational*Op, and
// provide static identity() and scalar(Rational).
template <class Op>
Op nc_eval(const NCPoly& p, const std::map<std::string, Op>& bind) {
    Op acc = Op::scalar(0);
    for (const auto& [w, v] : p.terms()) {
        Op prod = Op::identity();
        for (const auto& g : w) {
            auto it = bind.find(g);
            if (it == bind.end()) throw Error("unbound generator: " + g);
            prod = prod * it->second;
        }
        acc = acc + v * prod;
    }
    return acc;
}

} // namespace qaskey
