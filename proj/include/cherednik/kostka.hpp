#pragma once

// Level-restricted Kostka polynomials for content (1^n): the cocharge
// generating function over restricted standard tableaux, and its reversal
// at degree n(n-1)/2.

#include <stdexcept>

#include "cherednik/qpolynomial.hpp"
#include "cherednik/tableau.hpp"

namespace cherednik {

// Sum of q^cocharge(T) over the level-restricted standard tableaux of the
// given shape; the zero polynomial when no tableau is restricted.
inline IntPolynomial restricted_kostka_check(const Partition& shape, int m, Level level) {
    if (m < shape.length())
        throw std::invalid_argument("restricted_kostka_check: m must cover the shape");
    IntPolynomial p;
    for (const auto& t : enumerate_syt(shape))
        if (is_l_restricted(t, m, level))
            p = p + IntPolynomial::monomial(1, static_cast<int>(cocharge(t)));
    return p;
}

// q^{n(n-1)/2} times the cocharge polynomial evaluated at 1/q.
inline IntPolynomial restricted_kostka(const Partition& shape, int m, Level level) {
    const IntPolynomial check = restricted_kostka_check(shape, m, level);
    const int n = shape.weight();
    const int d = n * (n - 1) / 2;
    if (check.degree() > d)
        throw std::logic_error("restricted_kostka: cocharge exceeded n(n-1)/2");
    return poly_reverse(check, d);
}

} // namespace cherednik
