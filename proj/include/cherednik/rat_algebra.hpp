#pragma once

// The rational Cherednik algebra of type GL_n over exact Laurent scalars in
// the formal parameter kappa, realized on its PBW basis: every element is a
// sum of terms x^a * w * y^b with x_i spanning E*, w a permutation and y_i
// spanning E. Products are rewritten to this normal form with the defining
// relation
//
//   y_i x_j = x_j y_i + kappa delta_ij
//           + sum over positive roots a_kl of <a_kl|y_i><x_j|a_kl^vee> s_kl,
//
// applied recursively; each application strictly lowers the combined x/y
// degree, so the rewriting terminates.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cherednik/laurent.hpp"
#include "cherednik/permutation.hpp"

namespace cherednik {

inline constexpr std::size_t kDefaultTermLimit = 1'000'000;

struct RatTerm {
    std::vector<int> x_exp;
    Permutation w;
    std::vector<int> y_exp;

    friend bool operator<(const RatTerm& a, const RatTerm& b) {
        if (a.x_exp != b.x_exp) return a.x_exp < b.x_exp;
        if (a.w != b.w) return a.w < b.w;
        return a.y_exp < b.y_exp;
    }
    friend bool operator==(const RatTerm& a, const RatTerm& b) {
        return a.x_exp == b.x_exp && a.w == b.w && a.y_exp == b.y_exp;
    }
};

class RatElement {
public:
    explicit RatElement(int rank) : rank_(rank) {
        if (rank < 1) throw std::invalid_argument("RatElement: rank must be >= 1");
    }

    static RatElement unit(int rank) { return scalar(rank, LaurentScalar(1)); }

    static RatElement scalar(int rank, const LaurentScalar& c) {
        RatElement e(rank);
        e.add_term({zero_exp(rank), Permutation(rank), zero_exp(rank)}, c);
        return e;
    }

    // x_i, 1-based
    static RatElement x_generator(int rank, int i) {
        RatElement e(rank);
        e.add_term({unit_exp(rank, i), Permutation(rank), zero_exp(rank)}, LaurentScalar(1));
        return e;
    }

    // y_i, 1-based
    static RatElement y_generator(int rank, int i) {
        RatElement e(rank);
        e.add_term({zero_exp(rank), Permutation(rank), unit_exp(rank, i)}, LaurentScalar(1));
        return e;
    }

    static RatElement group_element(const Permutation& w) {
        RatElement e(w.rank());
        e.add_term({zero_exp(w.rank()), w, zero_exp(w.rank())}, LaurentScalar(1));
        return e;
    }

    // s_ij, 1-based i != j
    static RatElement reflection(int rank, int i, int j) {
        return group_element(Permutation::transposition(rank, i - 1, j - 1));
    }

    // s_i = s_{i, i+1}, 1-based
    static RatElement simple_reflection(int rank, int i) { return reflection(rank, i, i + 1); }

    int rank() const { return rank_; }
    const std::map<RatTerm, LaurentScalar>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    RatElement operator-() const {
        RatElement r(rank_);
        for (const auto& [t, c] : terms_) r.terms_[t] = -c;
        return r;
    }

    friend RatElement operator+(const RatElement& a, const RatElement& b) {
        a.check_rank(b);
        RatElement r = a;
        for (const auto& [t, c] : b.terms_) r.add_term(t, c);
        return r;
    }
    friend RatElement operator-(const RatElement& a, const RatElement& b) { return a + (-b); }

    friend RatElement operator*(const RatElement& a, const RatElement& b) {
        return mul(a, b, kDefaultTermLimit);
    }

    friend RatElement operator*(const LaurentScalar& c, const RatElement& a) {
        RatElement r(a.rank_);
        for (const auto& [t, s] : a.terms_) r.add_term(t, c * s);
        return r;
    }

    friend bool operator==(const RatElement& a, const RatElement& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const RatElement& a, const RatElement& b) { return !(a == b); }

    // Full product with an explicit bound on intermediate term counts.
    static RatElement mul(const RatElement& a, const RatElement& b, std::size_t term_limit) {
        a.check_rank(b);
        const int n = a.rank_;
        RatElement out(n);
        for (const auto& [ta, ca] : a.terms_) {
            const Permutation wa = ta.w;
            for (const auto& [tb, cb] : b.terms_) {
                const LaurentScalar c = ca * cb;
                const Permutation wb_inv = tb.w.inverse();
                const RatElement mid = order_y_past_x(n, ta.y_exp, tb.x_exp, term_limit);
                for (const auto& [tm, cm] : mid.terms_) {
                    RatTerm t{add_exp(ta.x_exp, act(wa, tm.x_exp)), wa * tm.w * tb.w,
                              add_exp(act(wb_inv, tm.y_exp), tb.y_exp)};
                    out.add_term(t, c * cm);
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
            append_monomial(factors, "x", t.x_exp);
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
    friend class TrigElement;

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

    void check_rank(const RatElement& o) const {
        if (rank_ != o.rank_) throw std::invalid_argument("RatElement: rank mismatch");
    }

    void add_term(const RatTerm& t, const LaurentScalar& c) {
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
            throw std::runtime_error("RatElement: intermediate term count exceeds the bound");
    }

    // y_j * x^e in normal form; every produced term carries y-degree <= 1.
    static RatElement push_single_y(int n, int j, const std::vector<int>& e,
                                    std::size_t term_limit) {
        RatElement out(n);
        int l = -1;
        for (int i = 0; i < n; ++i)
            if (e[i] > 0) {
                l = i;
                break;
            }
        if (l < 0) {
            std::vector<int> yj(n, 0);
            yj[j] = 1;
            out.add_term({zero_exp(n), Permutation(n), yj}, LaurentScalar(1));
            return out;
        }
        std::vector<int> rest = e;
        --rest[l];
        // x_l * (y_j x^rest)
        for (const auto& [t, c] : push_single_y(n, j, rest, term_limit).terms_) {
            std::vector<int> xe = t.x_exp;
            ++xe[l];
            out.add_term({xe, t.w, t.y_exp}, c);
        }
        // plus [y_j, x_l] * x^rest
        if (j == l) {
            out.add_term({rest, Permutation(n), zero_exp(n)}, LaurentScalar::kappa_power(1));
            for (int t = 0; t < n; ++t) {
                if (t == j) continue;
                Permutation s = Permutation::transposition(n, j, t);
                out.add_term({act(s, rest), s, zero_exp(n)}, LaurentScalar(1));
            }
        } else {
            Permutation s = Permutation::transposition(n, j, l);
            out.add_term({act(s, rest), s, zero_exp(n)}, LaurentScalar(-1));
        }
        out.enforce_limit(term_limit);
        return out;
    }

    // y^b * x^c in normal form
    static RatElement order_y_past_x(int n, const std::vector<int>& b, const std::vector<int>& c,
                                     std::size_t term_limit) {
        RatElement out(n);
        int j = -1;
        for (int i = 0; i < n; ++i)
            if (b[i] > 0) {
                j = i;
                break;
            }
        if (j < 0) {
            out.add_term({c, Permutation(n), zero_exp(n)}, LaurentScalar(1));
            return out;
        }
        std::vector<int> rest = b;
        --rest[j];
        const RatElement inner = order_y_past_x(n, rest, c, term_limit);
        for (const auto& [t, s] : inner.terms_) {
            const Permutation u_inv = t.w.inverse();
            for (const auto& [t2, s2] : push_single_y(n, j, t.x_exp, term_limit).terms_) {
                RatTerm merged{t2.x_exp, t2.w * t.w, add_exp(act(u_inv, t2.y_exp), t.y_exp)};
                out.add_term(merged, s * s2);
            }
            out.enforce_limit(term_limit);
        }
        return out;
    }

    int rank_;
    std::map<RatTerm, LaurentScalar> terms_;
};

inline RatElement commutator(const RatElement& a, const RatElement& b) { return a * b - b * a; }

// u_i = x_i y_i + sum_{j<i} s_ji; the pairwise commuting family whose
// simultaneous spectra define calibration.
inline RatElement jucys_murphy(int rank, int i) {
    RatElement e = RatElement::x_generator(rank, i) * RatElement::y_generator(rank, i);
    for (int j = 1; j < i; ++j) e = e + RatElement::reflection(rank, j, i);
    return e;
}

// kappa^{-1} (sum_i x_i y_i + sum_{i<j} s_ij) = kappa^{-1} sum_i u_i
inline RatElement grading_element(int rank) {
    RatElement e(rank);
    for (int i = 1; i <= rank; ++i) e = e + jucys_murphy(rank, i);
    return LaurentScalar::kappa_power(-1) * e;
}

// (1/n!) sum over all w; n! terms, so the rank is bounded.
inline RatElement symmetrizer(int rank) {
    if (rank > 9) throw std::invalid_argument("symmetrizer: rank bound exceeded (n! terms)");
    long long fact = 1;
    for (int k = 2; k <= rank; ++k) fact *= k;
    RatElement e(rank);
    const LaurentScalar c = LaurentScalar(Rational(1, fact));
    for (const auto& w : all_permutations(rank)) e = e + (c * RatElement::group_element(w));
    return e;
}

} // namespace cherednik
