#pragma once

// Truncated integer power series with a rational exponent offset:
// q^offset * (a_0 + a_1 q + ... + a_N q^N). Truncation is part of the type
// so different orders never compare silently.

#include <stdexcept>
#include <string>
#include <vector>

#include "cherednik/qpolynomial.hpp"
#include "cherednik/rational.hpp"

namespace cherednik {

class OffsetSeries {
public:
    OffsetSeries(Rational offset, std::vector<long long> coeffs)
        : offset_(offset), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("OffsetSeries: order must be >= 0");
    }

    static OffsetSeries zero(Rational offset, int order) {
        if (order < 0) throw std::invalid_argument("OffsetSeries: order must be >= 0");
        return OffsetSeries(offset, std::vector<long long>(order + 1, 0));
    }

    const Rational& offset() const { return offset_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    long long coeff(int k) const {
        if (k < 0 || k > order()) throw std::invalid_argument("OffsetSeries: index out of range");
        return coeffs_[k];
    }

    bool is_zero() const {
        for (auto c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const OffsetSeries& a, const OffsetSeries& b) {
        return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const OffsetSeries& a, const OffsetSeries& b) { return !(a == b); }

private:
    Rational offset_;
    std::vector<long long> coeffs_;
};

// Equality as formal series: offsets must differ by an integer, coefficients
// must agree on the overlap of the truncation windows and vanish outside it.
inline bool aligned_equal(const OffsetSeries& a, const OffsetSeries& b) {
    Rational diff = a.offset() - b.offset(); // exponent e = a.off + k = b.off + (k + diff)
    if (!diff.is_integer()) return false;
    long long d = diff.num();
    for (int k = 0; k <= a.order(); ++k) {
        long long j = k + d;
        long long bc = (j >= 0 && j <= b.order()) ? b.coeff(static_cast<int>(j)) : 0;
        if (j < 0 || j > b.order()) {
            if (a.coeff(k) != 0) return false;
        } else if (a.coeff(k) != bc) {
            return false;
        }
    }
    for (int j = 0; j <= b.order(); ++j) {
        long long k = j - d;
        if ((k < 0 || k > a.order()) && b.coeff(j) != 0) return false;
    }
    return true;
}

// Expansion of prod_{i=1}^{n} (1 - q^i)^{-1} to the given order; the
// coefficient of q^k counts partitions of k into parts <= n.
inline OffsetSeries bounded_partition_series(int n, int order) {
    if (n < 1) throw std::invalid_argument("bounded_partition_series: n must be >= 1");
    if (order < 0) throw std::invalid_argument("bounded_partition_series: order must be >= 0");
    std::vector<long long> a(order + 1, 0);
    a[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = i; k <= order; ++k) a[k] += a[k - i];
    return OffsetSeries(Rational(0), std::move(a));
}

// Multiply by an integer polynomial and add `shift` to the offset,
// truncating to the original order.
inline OffsetSeries series_scale(const OffsetSeries& s, const IntPolynomial& p,
                                 const Rational& shift) {
    std::vector<long long> out(s.order() + 1, 0);
    for (const auto& [e, c] : p.terms()) {
        if (e > s.order()) continue;
        for (int k = 0; k + e <= s.order(); ++k) out[k + e] += c * s.coeff(k);
    }
    return OffsetSeries(s.offset() + shift, std::move(out));
}

} // namespace cherednik
