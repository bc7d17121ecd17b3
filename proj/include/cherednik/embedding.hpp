#pragma once

// The algebra embedding of the rational Cherednik algebra into the
// degenerate double affine Hecke algebra:
//
//   s_i -> s_i,   x_i -> X_i,   y_i -> X_i^{-1} (y_i - sum_{j<i} s_ji),
//
// extended multiplicatively over PBW terms and normal-ordered in the
// target. Under this map u_i lands on y_i.

#include <vector>

#include "cherednik/rat_algebra.hpp"
#include "cherednik/trig_algebra.hpp"

namespace cherednik {

// image of y_i (1-based)
inline TrigElement embed_y_generator(int rank, int i) {
    TrigElement inner = TrigElement::y_generator(rank, i);
    for (int j = 1; j < i; ++j) inner = inner - TrigElement::reflection(rank, j, i);
    return TrigElement::lattice_generator(rank, i, -1) * inner;
}

inline TrigElement embed_rational(const RatElement& a) {
    const int n = a.rank();
    TrigElement out(n);
    for (const auto& [t, c] : a.terms()) {
        // x^a maps to a single lattice monomial
        std::vector<int> eta(t.x_exp.begin(), t.x_exp.end());
        TrigElement img = TrigElement::lattice_element(n, eta);
        img = img * TrigElement::group_element(t.w);
        for (int i = 1; i <= n; ++i)
            for (int rep = 0; rep < t.y_exp[i - 1]; ++rep)
                img = img * embed_y_generator(n, i);
        out = out + (c * img);
    }
    return out;
}

} // namespace cherednik
