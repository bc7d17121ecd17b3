#pragma once

// The coefficient ring of the symbolic algebras: exact rational Laurent
// polynomials in the formal parameter k (kappa). Identities verified over
// this ring hold for every numeric kappa at once.

#include <map>
#include <stdexcept>
#include <string>

#include "cherednik/rational.hpp"

namespace cherednik {

class LaurentScalar {
public:
    LaurentScalar() = default;
    LaurentScalar(const Rational& c) { set(0, c); }
    LaurentScalar(long long c) { set(0, Rational(c)); }

    static LaurentScalar kappa_power(int e) { return term(Rational(1), e); }

    static LaurentScalar term(const Rational& c, int e) {
        LaurentScalar s;
        s.set(e, c);
        return s;
    }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentScalar operator-() const {
        LaurentScalar r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r = a;
        for (const auto& [e, c] : b.terms_) r.add(e, c);
        return r;
    }
    friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) {
        return a + (-b);
    }
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
        return r;
    }

    LaurentScalar& operator+=(const LaurentScalar& o) { return *this = *this + o; }
    LaurentScalar& operator-=(const LaurentScalar& o) { return *this = *this - o; }
    LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }

    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }

    // "k + 2", "-1/2*k^-1", "0"; highest power first
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const int e = it->first;
            Rational c = it->second;
            bool neg = c < Rational(0);
            if (first) {
                if (neg) s += "-";
                first = false;
            } else {
                s += neg ? " - " : " + ";
            }
            Rational mag = neg ? -c : c;
            if (e == 0) {
                s += mag.to_string();
            } else {
                if (mag != Rational(1)) s += mag.to_string() + "*";
                s += e == 1 ? "k" : "k^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    void set(int e, const Rational& c) {
        if (!c.is_zero()) terms_[e] = c;
    }

    void add(int e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            set(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<int, Rational> terms_;
};

} // namespace cherednik
