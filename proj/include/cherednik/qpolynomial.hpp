#pragma once

// Sparse exact polynomials in one variable q with integer coefficients and
// nonnegative exponents. No zero coefficients are stored; the map keeps the
// serialization canonical.

#include <map>
#include <stdexcept>
#include <string>

namespace cherednik {

class IntPolynomial {
public:
    IntPolynomial() = default;

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return monomial(1, 0); }

    static IntPolynomial monomial(long long coeff, int exp) {
        if (exp < 0) throw std::invalid_argument("IntPolynomial: negative exponent");
        IntPolynomial p;
        if (coeff != 0) p.terms_[exp] = coeff;
        return p;
    }

    const std::map<int, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    long long coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }

    long long at_one() const {
        long long s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    // "1 + 2*q - q^3"; "0" for the zero polynomial
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            long long mag = c < 0 ? -c : c;
            if (first) {
                if (c < 0) s += "-";
                first = false;
            } else {
                s += c < 0 ? " - " : " + ";
            }
            if (e == 0) {
                s += std::to_string(mag);
            } else {
                if (mag != 1) s += std::to_string(mag) + "*";
                s += e == 1 ? "q" : "q^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    void add_term(int exp, long long coeff) {
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            if (coeff != 0) terms_[exp] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<int, long long> terms_;
};

// q^d * p(1/q); an involution when applied twice with the same d.
// Requires d >= deg p so no negative exponents appear.
inline IntPolynomial poly_reverse(const IntPolynomial& p, int d) {
    if (d < p.degree())
        throw std::invalid_argument("poly_reverse: d must be at least the degree");
    IntPolynomial r;
    for (const auto& [e, c] : p.terms()) r = r + IntPolynomial::monomial(c, d - e);
    return r;
}

} // namespace cherednik
