#pragma once

// Test-only oracle: the polynomial representation of the rational Cherednik
// algebra. x_i acts by multiplication with z_i, w permutes the variables and
// y_i acts by the Dunkl operator
//
//   T_i = kappa d/dz_i + sum_{j != i} (z_i - z_j)^{-1} (1 - s_ij),
//
// which preserves polynomials because (1 - s_ij)f is divisible by z_i - z_j.
// Everything is exact over Laurent scalars in kappa, so agreement with the
// PBW engine is checked at generic kappa. This file is independent of the
// normal-ordering code it cross-checks.

#include <map>
#include <vector>

#include "cherednik/laurent.hpp"
#include "cherednik/permutation.hpp"
#include "cherednik/rat_algebra.hpp"

namespace dunkl {

using cherednik::LaurentScalar;
using cherednik::Permutation;
using cherednik::Rational;

// multivariate polynomial in z_1..z_n over LaurentScalar
using Poly = std::map<std::vector<int>, LaurentScalar>;

inline void add_term(Poly& p, const std::vector<int>& mono, const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto it = p.find(mono);
    if (it == p.end()) {
        p[mono] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b) add_term(r, m, c);
    return r;
}

inline Poly scale(const Poly& p, const LaurentScalar& c) {
    Poly r;
    for (const auto& [m, cm] : p) add_term(r, m, c * cm);
    return r;
}

// multiplication by z_i (0-based)
inline Poly times_z(const Poly& p, int i) {
    Poly r;
    for (const auto& [m, c] : p) {
        std::vector<int> mono = m;
        ++mono[i];
        add_term(r, mono, c);
    }
    return r;
}

// variable permutation: z^m -> z^{act(w, m)}
inline Poly permute(const Poly& p, const Permutation& w) {
    Poly r;
    for (const auto& [m, c] : p) add_term(r, cherednik::act(w, m), c);
    return r;
}

inline Poly derivative(const Poly& p, int i) {
    Poly r;
    for (const auto& [m, c] : p) {
        if (m[i] == 0) continue;
        std::vector<int> mono = m;
        --mono[i];
        add_term(r, mono, LaurentScalar(Rational(m[i])) * c);
    }
    return r;
}

// (f - s_ab f) / (z_a - z_b) for 0-based a < b, exact on monomials
inline Poly divided_difference(const Poly& p, int a, int b) {
    Poly r;
    for (const auto& [m, c] : p) {
        const int hi = m[a];
        const int lo = m[b];
        if (hi == lo) continue;
        std::vector<int> mono = m;
        if (hi > lo) {
            for (int t = 0; t < hi - lo; ++t) {
                mono[a] = lo + t;
                mono[b] = hi - 1 - t;
                add_term(r, mono, c);
            }
        } else {
            for (int t = 0; t < lo - hi; ++t) {
                mono[a] = hi + t;
                mono[b] = lo - 1 - t;
                add_term(r, mono, -c);
            }
        }
    }
    return r;
}

// the Dunkl operator T_i (0-based i)
inline Poly dunkl(const Poly& p, int i, int n) {
    Poly r = scale(derivative(p, i), LaurentScalar::kappa_power(1));
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const int a = std::min(i, j);
        const int b = std::max(i, j);
        const Poly d = divided_difference(p, a, b);
        r = add(r, i == a ? d : scale(d, LaurentScalar(-1)));
    }
    return r;
}

// action of a PBW normal form: sum of c * z^a . w . T^b
inline Poly apply_element(const cherednik::RatElement& e, const Poly& f) {
    const int n = e.rank();
    Poly out;
    for (const auto& [t, c] : e.terms()) {
        Poly g = f;
        for (int i = 0; i < n; ++i)
            for (int rep = 0; rep < t.y_exp[i]; ++rep) g = dunkl(g, i, n);
        g = permute(g, t.w);
        for (int i = 0; i < n; ++i)
            for (int rep = 0; rep < t.x_exp[i]; ++rep) g = times_z(g, i);
        out = add(out, scale(g, c));
    }
    return out;
}

} // namespace dunkl
