#pragma once

// Graded characters of spherical parts of the calibrated irreducible
// modules: the conformal weight offset, the character series
// q^C / prod (1 - q^i) * Kcheck, and the classification of calibrated
// parameters (m, lambda).

#include <stdexcept>
#include <string>
#include <vector>

#include "cherednik/kostka.hpp"
#include "cherednik/partition.hpp"
#include "cherednik/qseries.hpp"
#include "cherednik/rational.hpp"

namespace cherednik {

// C_lambda = (1 / 2 kappa) * sum_i lambda_i (lambda_i - 2i + 1); exact.
// Padding rows contribute nothing, so only kappa >= 1 and m covering the
// shape are required.
inline Rational conformal_weight(const Partition& shape, int m, int kappa) {
    if (kappa < 1) throw std::invalid_argument("conformal_weight: kappa must be >= 1");
    if (m < shape.length())
        throw std::invalid_argument("conformal_weight: m must cover the shape");
    long long s = 0;
    for (int i = 1; i <= shape.length(); ++i) {
        long long li = shape.part(i);
        s += li * (li - 2 * i + 1);
    }
    return Rational(s, 2LL * kappa);
}

// Throws with a message naming the violated condition unless
// shape lies in Lambda^+_kappa(m, n) with n = |shape|.
inline void require_calibrated_parameter(int kappa, int m, const Partition& shape) {
    if (kappa < 1) throw std::invalid_argument("kappa must be >= 1");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (shape.length() != m)
        throw std::invalid_argument(
            "shape " + shape.to_string() + " must have exactly m = " + std::to_string(m) +
            " positive parts (lambda_m >= 1); it has " + std::to_string(shape.length()));
    const long long margin = kappa - m - shape.part(1) + shape.part(m);
    if (margin < 0)
        throw std::invalid_argument(
            "shape " + shape.to_string() + " violates the level bound: kappa - m - lambda_1 + "
            "lambda_m = " + std::to_string(margin) + " < 0");
}

// ch eL_kappa(lambda) truncated at `order`: coefficients are the graded
// dimensions at degrees k in Z + C_lambda.
inline OffsetSeries character(int kappa, int m, const Partition& shape, int order) {
    require_calibrated_parameter(kappa, m, shape);
    const int n = shape.weight();
    const IntPolynomial kcheck = restricted_kostka_check(shape, m, Level::of(kappa - m));
    return series_scale(bounded_partition_series(n, order), kcheck,
                        conformal_weight(shape, m, kappa));
}

struct CalibratedClass {
    int m;
    Partition shape;

    friend bool operator==(const CalibratedClass& a, const CalibratedClass& b) {
        return a.m == b.m && a.shape == b.shape;
    }
};

// Parameters of the calibrated irreducibles: Lambda^+_kappa(m, n) for
// m = 1..min(kappa, n), each tagged with m. The cap at n is forced by
// lambda_m >= 1.
inline std::vector<CalibratedClass> classify_calibrated(int kappa, int n) {
    if (kappa < 1 || n < 1)
        throw std::invalid_argument("classify_calibrated: kappa and n must be >= 1");
    std::vector<CalibratedClass> out;
    for (int m = 1; m <= std::min(kappa, n); ++m)
        for (const auto& shape : enumerate_lambda_plus(kappa, m, n))
            out.push_back({m, shape});
    return out;
}

} // namespace cherednik
