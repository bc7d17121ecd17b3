#pragma once

// Verlinde-formula path count: the number of level-restricted lattice paths
// from the vacuum to `shape` by n fundamental steps, computed from the
// sl_m modular data. This is the toolkit's only floating-point code; it
// exists as an independent cross-check of the tableau enumeration.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cherednik/partition.hpp"

namespace cherednik {

namespace detail {

using Cplx = std::complex<double>;

inline Cplx det(std::vector<std::vector<Cplx>> m) {
    const std::size_t n = m.size();
    Cplx result{1.0, 0.0};
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
        if (std::abs(m[pivot][c]) == 0.0) return {0.0, 0.0};
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            result = -result;
        }
        result *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Cplx f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return result;
}

// Schur polynomial s_mu at the points z via the bialternant ratio.
inline Cplx schur_at(const std::vector<Cplx>& z, const std::vector<long long>& mu) {
    const std::size_t m = z.size();
    std::vector<std::vector<Cplx>> num(m, std::vector<Cplx>(m));
    std::vector<std::vector<Cplx>> den(m, std::vector<Cplx>(m));
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            num[j][k] = std::pow(z[k], double(mu[j] + (m - 1 - j)));
            den[j][k] = std::pow(z[k], double(m - 1 - j));
        }
    }
    return det(num) / det(den);
}

} // namespace detail

// N(shape): sum over the level-`level` dominant sl_m weights sigma of
// chi_V(sigma)^n * conj(chi_shape(sigma)) * |S_{0 sigma}|^2, with characters
// evaluated at determinant-one points on the unit circle and the |S_0.|^2
// weights normalized to total 1. Weights outside the level alcove label no
// integrable module, so their count is 0 by definition.
inline long long verlinde_path_count(int m, int level, int n, const Partition& shape,
                                     double tol = 1e-6) {
    if (m < 1) throw std::invalid_argument("verlinde_path_count: m must be >= 1");
    if (shape.weight() != n)
        throw std::invalid_argument("verlinde_path_count: |shape| must equal n");
    if (shape.length() > m)
        throw std::invalid_argument("verlinde_path_count: shape must fit in m rows");
    if (level < 1 && m != 1)
        throw std::invalid_argument("verlinde_path_count: level must be >= 1 for m >= 2");
    if (level < 0) throw std::invalid_argument("verlinde_path_count: level must be >= 0");

    // target sl_m weight: remove full columns
    std::vector<long long> target(m, 0);
    for (int i = 1; i <= m; ++i) target[i - 1] = shape.part(i) - shape.part(m);
    if (target[0] > level) return 0;

    if (m == 1) return 1; // one-dimensional theory

    // level-restricted dominant sl_m weights (at most m-1 positive rows)
    std::vector<std::vector<long long>> sigmas;
    std::vector<long long> sigma(m, 0);
    auto rec = [&](auto&& self, int pos, long long cap) -> void {
        if (pos == m - 1) {
            sigmas.push_back(sigma);
            return;
        }
        for (long long v = cap; v >= 0; --v) {
            sigma[pos] = v;
            self(self, pos + 1, v);
        }
        sigma[pos] = 0;
    };
    rec(rec, 0, level);

    using detail::Cplx;
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<long long> fundamental(m, 0);
    fundamental[0] = 1;

    std::vector<double> weight(sigmas.size());
    std::vector<Cplx> step(sigmas.size());
    std::vector<Cplx> goal(sigmas.size());
    double weight_total = 0.0;
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
        // exponents (sigma + rho) / (level + m), shifted to determinant one
        std::vector<double> theta(m);
        double mean = 0.0;
        for (int j = 0; j < m; ++j) {
            theta[j] = double(sigmas[s][j] + (m - 1 - j)) / double(level + m);
            mean += theta[j];
        }
        mean /= m;
        std::vector<Cplx> z(m);
        for (int j = 0; j < m; ++j)
            z[j] = std::exp(Cplx(0.0, two_pi * (theta[j] - mean)));
        double vdm2 = 1.0;
        for (int j = 0; j < m; ++j)
            for (int k = j + 1; k < m; ++k) vdm2 *= std::norm(z[j] - z[k]);
        weight[s] = vdm2;
        weight_total += vdm2;
        step[s] = detail::schur_at(z, fundamental);
        goal[s] = detail::schur_at(z, target);
    }

    Cplx acc{0.0, 0.0};
    for (std::size_t s = 0; s < sigmas.size(); ++s)
        acc += std::pow(step[s], double(n)) * std::conj(goal[s]) * (weight[s] / weight_total);

    const double rounded = std::round(acc.real());
    if (std::abs(acc.real() - rounded) > tol || std::abs(acc.imag()) > tol)
        throw std::runtime_error("verlinde_path_count: sum is not integral within tolerance");
    return static_cast<long long>(rounded);
}

} // namespace cherednik
