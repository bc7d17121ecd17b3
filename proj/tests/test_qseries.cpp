#include <catch2/catch_amalgamated.hpp>

#include "cherednik/qpolynomial.hpp"
#include "cherednik/qseries.hpp"
#include "cherednik/rational.hpp"

using namespace cherednik;

namespace {

IntPolynomial q(int e) { return IntPolynomial::monomial(1, e); }

// number of partitions of k with parts <= n, by direct enumeration
long long partitions_bounded(int k, int n) {
    if (k == 0) return 1;
    long long total = 0;
    for (int first = std::min(k, n); first >= 1; --first) {
        // recursion via the same function with a tighter bound
        total += partitions_bounded(k - first, std::min(first, n));
    }
    return total;
}

} // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-6, 6) == Rational(-1));
    CHECK(Rational(3, 5).fraction_string() == "3/5");
    CHECK(Rational(2).to_string() == "2");
    CHECK(Rational(1, 3) * Rational(3) == Rational(1));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("polynomial ring operations") {
    CHECK(q(1) + q(2) + (IntPolynomial::zero() - q(2)) == q(1)); // cancellation
    CHECK((IntPolynomial::one() + q(1)) * (IntPolynomial::one() - q(1)) ==
          IntPolynomial::one() - q(2));
    CHECK(q(3) * q(4) == q(7));
    CHECK(IntPolynomial::zero().degree() == -1);
    CHECK((q(1) + q(1)).coeff(1) == 2);
    CHECK((q(2) + q(5) + IntPolynomial::one()).at_one() == 3);
}

TEST_CASE("polynomial text form") {
    CHECK(IntPolynomial::zero().to_string() == "0");
    CHECK(IntPolynomial::one().to_string() == "1");
    CHECK((q(1) + q(2)).to_string() == "q + q^2");
    CHECK((IntPolynomial::monomial(2, 1) + IntPolynomial::monomial(-1, 3)).to_string() ==
          "2*q - q^3");
    CHECK(IntPolynomial::monomial(-1, 0).to_string() == "-1");
}

TEST_CASE("poly_reverse") {
    CHECK(poly_reverse(q(1) + q(2), 3) == q(1) + q(2));
    CHECK(poly_reverse(IntPolynomial::one(), 4) == q(4));
    const IntPolynomial p = IntPolynomial::monomial(3, 0) + q(2) + IntPolynomial::monomial(-2, 5);
    CHECK(poly_reverse(poly_reverse(p, 7), 7) == p);
    CHECK_THROWS_AS(poly_reverse(q(3), 2), std::invalid_argument);
    CHECK(poly_reverse(IntPolynomial::zero(), 0) == IntPolynomial::zero());
}

TEST_CASE("bounded partition series") {
    const OffsetSeries s = bounded_partition_series(3, 6);
    CHECK(s.offset() == Rational(0));
    CHECK(s.coeffs() == std::vector<long long>{1, 1, 2, 3, 4, 5, 7});
    const OffsetSeries ones = bounded_partition_series(1, 9);
    for (int k = 0; k <= 9; ++k) CHECK(ones.coeff(k) == 1);
    for (int n = 1; n <= 5; ++n) CHECK(bounded_partition_series(n, 0).coeff(0) == 1);
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= 12; ++k)
            CHECK(bounded_partition_series(n, 12).coeff(k) == partitions_bounded(k, n));
}

TEST_CASE("series times prod(1 - q^i) telescopes to 1") {
    for (int n = 1; n <= 6; ++n) {
        IntPolynomial prod = IntPolynomial::one();
        for (int i = 1; i <= n; ++i)
            prod = prod * (IntPolynomial::one() - IntPolynomial::monomial(1, i));
        const OffsetSeries s = series_scale(bounded_partition_series(n, 30), prod, Rational(0));
        CHECK(s.coeff(0) == 1);
        for (int k = 1; k <= 30; ++k) CHECK(s.coeff(k) == 0);
    }
}

TEST_CASE("series_scale") {
    const OffsetSeries s = bounded_partition_series(1, 5); // all ones
    const OffsetSeries shifted = series_scale(s, q(2), Rational(0));
    CHECK(shifted.coeffs() == std::vector<long long>{0, 0, 1, 1, 1, 1});

    CHECK(series_scale(s, IntPolynomial::zero(), Rational(0)).is_zero());

    const OffsetSeries third = series_scale(s, IntPolynomial::one(), Rational(1, 3));
    const OffsetSeries two_thirds = series_scale(third, IntPolynomial::one(), Rational(1, 3));
    CHECK(two_thirds.offset() == Rational(2, 3));
}

TEST_CASE("aligned equality shifts by integers only") {
    const OffsetSeries a(Rational(1, 2), {0, 1, 1});
    const OffsetSeries b(Rational(3, 2), {1, 1, 0});
    const OffsetSeries c(Rational(1, 3), {0, 1, 1});
    CHECK(aligned_equal(a, b));
    CHECK_FALSE(aligned_equal(a, c));
    CHECK(a != b); // structural equality keeps offsets apart
    CHECK_FALSE(aligned_equal(a, OffsetSeries(Rational(1, 2), {0, 1, 2})));
}
