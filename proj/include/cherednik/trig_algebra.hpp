#pragma once

// The degenerate double affine Hecke algebra (trigonometric Cherednik
// algebra) of type GL_n on its PBW basis: terms X^eta * w * y^b with eta in
// the weight lattice (integer exponents of either sign), w a permutation
// and y_i spanning E. Two rewriting rules drive normal ordering:
//
//   y_i X^eta = X^eta y_i + kappa eta_i X^eta
//             + sum over positive roots a of <a|y_i> * divided_sum(eta, a) * s_a,
//
//   f(y) * s_i = s_i * s_i(f) - divided_difference_i(f),
//
// the second being the degenerate affine Hecke cross relation extended from
// generators to monomials. Every commutation strictly lowers the y-degree
// of the correction terms, so the rewriting terminates.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/laurent.hpp"
#include "cherednik/permutation.hpp"
#include "cherednik/rat_algebra.hpp"

namespace cherednik {

struct TrigTerm {
    std::vector<int> lat; // exponent of X^eta, entries of either sign
    Permutation w;
    std::vector<int> y_exp;

    friend bool operator<(const TrigTerm& a, const TrigTerm& b) {
        if (a.lat != b.lat) return a.lat < b.lat;
        if (a.w != b.w) return a.w < b.w;
        return a.y_exp < b.y_exp;
    }
    friend bool operator==(const TrigTerm& a, const TrigTerm& b) {
        return a.lat == b.lat && a.w == b.w && a.y_exp == b.y_exp;
    }
};

class TrigElement {
public:
    explicit TrigElement(int rank) : rank_(rank) {
        if (rank < 1) throw std::invalid_argument("TrigElement: rank must be >= 1");
    }

    static TrigElement unit(int rank) { return scalar(rank, LaurentScalar(1)); }

    static TrigElement scalar(int rank, const LaurentScalar& c) {
        TrigElement e(rank);
        e.add_term({zero_exp(rank), Permutation(rank), zero_exp(rank)}, c);
        return e;
    }

    // X^eta for an arbitrary lattice vector eta
    static TrigElement lattice_element(int rank, const std::vector<int>& eta) {
        if (static_cast<int>(eta.size()) != rank)
            throw std::invalid_argument("TrigElement: lattice vector has wrong length");
        TrigElement e(rank);
        e.add_term({eta, Permutation(rank), zero_exp(rank)}, LaurentScalar(1));
        return e;
    }

    // X_i^{sign}, 1-based
    static TrigElement lattice_generator(int rank, int i, int sign = 1) {
        std::vector<int> eta(rank, 0);
        if (i < 1 || i > rank) throw std::invalid_argument("generator index out of range");
        eta[i - 1] = sign;
        return lattice_element(rank, eta);
    }

    static TrigElement y_generator(int rank, int i) {
        TrigElement e(rank);
        e.add_term({zero_exp(rank), Permutation(rank), unit_exp(rank, i)}, LaurentScalar(1));
        return e;
    }

    static TrigElement group_element(const Permutation& w) {
        TrigElement e(w.rank());
        e.add_term({zero_exp(w.rank()), w, zero_exp(w.rank())}, LaurentScalar(1));
        return e;
    }

    static TrigElement reflection(int rank, int i, int j) {
        return group_element(Permutation::transposition(rank, i - 1, j - 1));
    }

    static TrigElement simple_reflection(int rank, int i) { return reflection(rank, i, i + 1); }

    int rank() const { return rank_; }
    const std::map<TrigTerm, LaurentScalar>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    TrigElement operator-() const {
        TrigElement r(rank_);
        for (const auto& [t, c] : terms_) r.terms_[t] = -c;
        return r;
    }

    friend TrigElement operator+(const TrigElement& a, const TrigElement& b) {
        a.check_rank(b);
        TrigElement r = a;
        for (const auto& [t, c] : b.terms_) r.add_term(t, c);
        return r;
    }
    friend TrigElement operator-(const TrigElement& a, const TrigElement& b) { return a + (-b); }

    friend TrigElement operator*(const TrigElement& a, const TrigElement& b) {
        return mul(a, b, kDefaultTermLimit);
    }

    friend TrigElement operator*(const LaurentScalar& c, const TrigElement& a) {
        TrigElement r(a.rank_);
        for (const auto& [t, s] : a.terms_) r.add_term(t, c * s);
        return r;
    }

    friend bool operator==(const TrigElement& a, const TrigElement& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TrigElement& a, const TrigElement& b) { return !(a == b); }

    static TrigElement mul(const TrigElement& a, const TrigElement& b, std::size_t term_limit) {
        a.check_rank(b);
        const int n = a.rank_;
        TrigElement out(n);
        for (const auto& [ta, ca] : a.terms_) {
            for (const auto& [tb, cb] : b.terms_) {
                const LaurentScalar c = ca * cb;
                const TrigElement mid = order_y_past_lattice(n, ta.y_exp, tb.lat, term_limit);
                const std::vector<int> word = tb.w.reduced_word();
                for (const auto& [tm, cm] : mid.terms_) {
                    const std::vector<int> lat = add_exp(ta.lat, act(ta.w, tm.lat));
                    const Permutation wu = ta.w * tm.w;
                    // y^{tm.y_exp} crosses tb.w with divided-difference corrections
                    PolyMap poly;
                    poly[tm.y_exp] = LaurentScalar(1);
                    for (const auto& [g, q] : cross_word(n, poly, word, 0)) {
                        for (const auto& [f, cf] : q)
                            out.add_term({lat, wu * g, add_exp(f, tb.y_exp)}, c * cm * cf);
                    }
                    out.enforce_limit(term_limit);
                }
            }
        }
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [t, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            std::string factors;
            append_monomial(factors, "X", t.lat);
            if (!t.w.is_identity()) {
                if (!factors.empty()) factors += " * ";
                factors += t.w.one_line();
            }
            std::string ypart;
            append_monomial(ypart, "y", t.y_exp);
            if (!ypart.empty()) {
                if (!factors.empty()) factors += " * ";
                factors += ypart;
            }
            std::string coeff = c.to_string();
            bool needs_parens = coeff.find(' ') != std::string::npos || coeff[0] == '-';
            if (coeff == "1" && !factors.empty()) {
                s += factors;
            } else {
                s += needs_parens ? "(" + coeff + ")" : coeff;
                if (!factors.empty()) s += " * " + factors;
            }
        }
        return s;
    }

private:
    using PolyMap = std::map<std::vector<int>, LaurentScalar>;

    static std::vector<int> zero_exp(int n) { return std::vector<int>(n, 0); }

    static std::vector<int> unit_exp(int n, int i) {
        if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
        std::vector<int> e(n, 0);
        e[i - 1] = 1;
        return e;
    }

    static std::vector<int> add_exp(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
        return r;
    }

    static void append_monomial(std::string& s, const char* letter, const std::vector<int>& e) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += " * ";
            s += letter + std::to_string(i + 1);
            if (e[i] != 1) s += "^" + std::to_string(e[i]);
        }
    }

    void check_rank(const TrigElement& o) const {
        if (rank_ != o.rank_) throw std::invalid_argument("TrigElement: rank mismatch");
    }

    void add_term(const TrigTerm& t, const LaurentScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_[t] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void enforce_limit(std::size_t term_limit) const {
        if (terms_.size() > term_limit)
            throw std::runtime_error("TrigElement: intermediate term count exceeds the bound");
    }

    // divided difference on the y-variables at position j (0-based):
    // (f - s_j f) / (y_j - y_{j+1}), exact on monomials
    static PolyMap divided_difference(const PolyMap& poly, int j) {
        PolyMap out;
        for (const auto& [e, c] : poly) {
            const int p = e[j];
            const int q = e[j + 1];
            if (p == q) continue;
            std::vector<int> mono = e;
            if (p > q) {
                for (int t = 0; t < p - q; ++t) {
                    mono[j] = q + t;
                    mono[j + 1] = p - 1 - t;
                    add_poly(out, mono, c);
                }
            } else {
                for (int t = 0; t < q - p; ++t) {
                    mono[j] = p + t;
                    mono[j + 1] = q - 1 - t;
                    add_poly(out, mono, -c);
                }
            }
        }
        return out;
    }

    static void add_poly(PolyMap& poly, const std::vector<int>& e, const LaurentScalar& c) {
        if (c.is_zero()) return;
        auto it = poly.find(e);
        if (it == poly.end()) {
            poly[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) poly.erase(it);
        }
    }

    // f(y) * s_{word[idx]} * ... rewritten as a sum of (group element, f'(y))
    // pairs with the group part on the left
    static std::map<Permutation, PolyMap> cross_word(int n, const PolyMap& poly,
                                                     const std::vector<int>& word,
                                                     std::size_t idx) {
        std::map<Permutation, PolyMap> out;
        if (poly.empty()) return out;
        if (idx == word.size()) {
            out[Permutation(n)] = poly;
            return out;
        }
        const int j = word[idx];
        PolyMap swapped;
        for (const auto& [e, c] : poly) {
            std::vector<int> se = e;
            std::swap(se[j], se[j + 1]);
            add_poly(swapped, se, c);
        }
        const Permutation sj = Permutation::simple(n, j);
        for (const auto& [g, q] : cross_word(n, swapped, word, idx + 1)) {
            PolyMap& slot = out[sj * g];
            for (const auto& [e, c] : q) add_poly(slot, e, c);
        }
        PolyMap corr = divided_difference(poly, j);
        for (auto& [e, c] : corr) c = -c;
        for (const auto& [g, q] : cross_word(n, corr, word, idx + 1)) {
            PolyMap& slot = out[g];
            for (const auto& [e, c] : q) add_poly(slot, e, c);
        }
        for (auto it = out.begin(); it != out.end();) {
            it = it->second.empty() ? out.erase(it) : std::next(it);
        }
        return out;
    }

    // y_j * X^eta in normal form (j is 0-based here)
    static TrigElement push_single_y(int n, int j, const std::vector<int>& eta) {
        TrigElement out(n);
        out.add_term({eta, Permutation(n), unit_exp(n, j + 1)}, LaurentScalar(1));
        if (eta[j] != 0)
            out.add_term({eta, Permutation(n), zero_exp(n)},
                         LaurentScalar::term(Rational(eta[j]), 1));
        for (int other = 0; other < n; ++other) {
            if (other == j) continue;
            const int i = std::min(j, other);
            const int l = std::max(j, other);
            const LaurentScalar sign(j == i ? 1 : -1); // <alpha_il | y_j>
            const Permutation s = Permutation::transposition(n, i, l);
            for (const auto& [nu, c] : divided_sum_terms(eta, i, l))
                out.add_term({nu, s, zero_exp(n)}, sign * LaurentScalar(c));
        }
        return out;
    }

    // y^b * X^mu in normal form
    static TrigElement order_y_past_lattice(int n, const std::vector<int>& b,
                                            const std::vector<int>& mu, std::size_t term_limit) {
        TrigElement out(n);
        int j = -1;
        for (int i = 0; i < n; ++i)
            if (b[i] > 0) {
                j = i;
                break;
            }
        if (j < 0) {
            out.add_term({mu, Permutation(n), zero_exp(n)}, LaurentScalar(1));
            return out;
        }
        std::vector<int> rest = b;
        --rest[j];
        const TrigElement inner = order_y_past_lattice(n, rest, mu, term_limit);
        for (const auto& [t, s] : inner.terms_) {
            const std::vector<int> word = t.w.reduced_word();
            for (const auto& [t2, s2] : push_single_y(n, j, t.lat).terms_) {
                if (t2.y_exp == zero_exp(n)) {
                    out.add_term({t2.lat, t2.w * t.w, t.y_exp}, s * s2);
                    continue;
                }
                PolyMap poly;
                poly[t2.y_exp] = LaurentScalar(1);
                for (const auto& [g, q] : cross_word(n, poly, word, 0))
                    for (const auto& [f, cf] : q)
                        out.add_term({t2.lat, t2.w * g, add_exp(f, t.y_exp)}, s * s2 * cf);
            }
            out.enforce_limit(term_limit);
        }
        return out;
    }

    // (X^eta - X^{s_a eta}) / (1 - X^{-a}) for a = a_il (0-based i < l),
    // expanded as a signed list of lattice monomials
    static std::vector<std::pair<std::vector<int>, long long>> divided_sum_terms(
        const std::vector<int>& eta, int i, int l) {
        std::vector<std::pair<std::vector<int>, long long>> out;
        const int k = eta[i] - eta[l]; // <eta | alpha^vee>
        std::vector<int> nu = eta;
        if (k > 0) {
            for (int t = 0; t < k; ++t) {
                out.push_back({nu, 1});
                --nu[i];
                ++nu[l];
            }
        } else if (k < 0) {
            for (int t = 1; t <= -k; ++t) {
                ++nu[i];
                --nu[l];
                out.push_back({nu, -1});
            }
        }
        return out;
    }

    int rank_;
    std::map<TrigTerm, LaurentScalar> terms_;

    friend TrigElement divided_sum(int rank, const std::vector<int>& eta, int i, int j);
};

inline TrigElement commutator(const TrigElement& a, const TrigElement& b) {
    return a * b - b * a;
}

// The truncated geometric sum (X^eta - X^{s_a eta}) / (1 - X^{-a}) for the
// positive root a = a_ij (1-based i < j), as a pure lattice element.
inline TrigElement divided_sum(int rank, const std::vector<int>& eta, int i, int j) {
    if (static_cast<int>(eta.size()) != rank)
        throw std::invalid_argument("divided_sum: lattice vector has wrong length");
    if (i < 1 || j < 1 || i >= j || j > rank)
        throw std::invalid_argument("divided_sum: need a positive root, 1 <= i < j <= n");
    TrigElement out(rank);
    for (const auto& [nu, c] : TrigElement::divided_sum_terms(eta, i - 1, j - 1))
        out = out + (LaurentScalar(c) * TrigElement::lattice_element(rank, nu));
    return out;
}

} // namespace cherednik
