#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cherednik/rat_algebra.hpp"

using namespace cherednik;

namespace {

RatElement x(int n, int i) { return RatElement::x_generator(n, i); }
RatElement y(int n, int i) { return RatElement::y_generator(n, i); }
RatElement s(int n, int i) { return RatElement::simple_reflection(n, i); }

std::vector<RatElement> generators(int n) {
    std::vector<RatElement> g;
    for (int i = 1; i <= n; ++i) {
        g.push_back(x(n, i));
        g.push_back(y(n, i));
    }
    for (int i = 1; i < n; ++i) g.push_back(s(n, i));
    return g;
}

} // namespace

TEST_CASE("permutations") {
    Permutation id(3);
    Permutation s1 = Permutation::simple(3, 0);
    Permutation s2 = Permutation::simple(3, 1);
    CHECK(s1 * s1 == id);
    CHECK(s1 * s2 * s1 == s2 * s1 * s2);
    CHECK((s1 * s2).inverse() * (s1 * s2) == id);
    CHECK(all_permutations(4).size() == 24);

    // reduced words multiply back to the permutation
    for (const auto& w : all_permutations(4)) {
        Permutation prod(4);
        for (int i : w.reduced_word()) prod = prod * Permutation::simple(4, i);
        CHECK(prod == w);
    }

    CHECK(act(s1, std::vector<int>{5, 0, 7}) == std::vector<int>{0, 5, 7});
    CHECK(s1.one_line() == "[2 1 3]");
}

TEST_CASE("laurent scalars") {
    LaurentScalar k = LaurentScalar::kappa_power(1);
    LaurentScalar kinv = LaurentScalar::kappa_power(-1);
    CHECK(k * kinv == LaurentScalar(1));
    CHECK((k + LaurentScalar(2)).to_string() == "k + 2");
    CHECK((kinv * LaurentScalar(Rational(-1, 2))).to_string() == "-1/2*k^-1");
    CHECK((k - k).is_zero());
    CHECK(LaurentScalar(0).to_string() == "0");
}

TEST_CASE("defining relation in rank 2") {
    const int n = 2;
    const RatElement lhs = y(n, 1) * x(n, 1);
    const RatElement rhs = x(n, 1) * y(n, 1) +
                           RatElement::scalar(n, LaurentScalar::kappa_power(1)) +
                           RatElement::reflection(n, 1, 2);
    CHECK(lhs == rhs);
    CHECK(lhs.to_string() == "k + [2 1] + x1 * y1");
}

TEST_CASE("unit law and conjugation") {
    for (int n : {2, 3}) {
        const RatElement one = RatElement::unit(n);
        for (const auto& g : generators(n)) {
            CHECK(g * one == g);
            CHECK(one * g == g);
        }
        CHECK(s(n, 1) * x(n, 1) * s(n, 1) == x(n, 2));
        CHECK(s(n, 1) * y(n, 2) * s(n, 1) == y(n, 1));
    }
    // the general conjugation w h w^{-1} = w(h) follows from the generator form
    for (const auto& w : all_permutations(3)) {
        const RatElement g = RatElement::group_element(w);
        const RatElement ginv = RatElement::group_element(w.inverse());
        for (int i = 1; i <= 3; ++i) {
            CHECK(g * x(3, i) * ginv == x(3, w(i - 1) + 1));
            CHECK(g * y(3, i) * ginv == y(3, w(i - 1) + 1));
        }
    }
}

TEST_CASE("commutators of the polynomial parts vanish") {
    const int n = 3;
    CHECK(commutator(x(n, 1), x(n, 2)).is_zero());
    CHECK(commutator(y(n, 1), y(n, 2)).is_zero());
    CHECK((x(n, 1) * x(n, 2)) == (x(n, 2) * x(n, 1)));
}

TEST_CASE("[y_i, x_i] expands over the positive roots") {
    for (int n : {2, 3, 4}) {
        for (int i = 1; i <= n; ++i) {
            RatElement expected = RatElement::scalar(n, LaurentScalar::kappa_power(1));
            for (int j = 1; j <= n; ++j)
                if (j != i) expected = expected + RatElement::reflection(n, std::min(i, j),
                                                                          std::max(i, j));
            CHECK(commutator(y(n, i), x(n, i)) == expected);
        }
    }
}

TEST_CASE("the u_i are pairwise commutative at generic kappa") {
    CHECK(jucys_murphy(3, 1) == x(3, 1) * y(3, 1));
    CHECK(jucys_murphy(3, 2) == x(3, 2) * y(3, 2) + RatElement::reflection(3, 1, 2));
    for (int n = 1; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                CHECK(commutator(jucys_murphy(n, i), jucys_murphy(n, j)).is_zero());
}

TEST_CASE("grading element brackets") {
    for (int n = 1; n <= 4; ++n) {
        const RatElement grading = grading_element(n);
        for (int i = 1; i <= n; ++i) {
            CHECK(commutator(grading, x(n, i)) == x(n, i));
            CHECK(commutator(grading, y(n, i)) == -y(n, i));
        }
        for (int i = 1; i < n; ++i) CHECK(commutator(grading, s(n, i)).is_zero());
    }
}

TEST_CASE("symmetrizer") {
    const RatElement e2 = symmetrizer(2);
    const LaurentScalar half(Rational(1, 2));
    CHECK(e2 == half * (RatElement::unit(2) + RatElement::reflection(2, 1, 2)));
    for (int n = 2; n <= 4; ++n) {
        const RatElement e = symmetrizer(n);
        CHECK(e * e == e);
        CHECK(commutator(grading_element(n), e).is_zero());
        for (int i = 1; i < n; ++i) CHECK(s(n, i) * e == e);
    }
    CHECK_THROWS_AS(symmetrizer(10), std::invalid_argument);
}

TEST_CASE("normal form is stable and linear") {
    const int n = 3;
    const RatElement a = y(n, 2) * x(n, 1) * s(n, 1) * y(n, 1);
    RatElement rebuilt(n);
    for (const auto& [t, c] : a.terms()) {
        RatElement term = RatElement::scalar(n, c) * RatElement::group_element(t.w);
        for (int i = 1; i <= n; ++i)
            for (int rep = 0; rep < t.x_exp[i - 1]; ++rep) term = x(n, i) * term;
        for (int i = 1; i <= n; ++i)
            for (int rep = 0; rep < t.y_exp[i - 1]; ++rep) term = term * y(n, i);
        rebuilt = rebuilt + term;
    }
    CHECK(rebuilt == a);

    const LaurentScalar c = LaurentScalar::kappa_power(2) + LaurentScalar(3);
    CHECK(c * (a + a) == (c * a) + (c * a));
}

TEST_CASE("rank mismatch and term limit") {
    CHECK_THROWS_AS(x(2, 1) * x(3, 1), std::invalid_argument);
    const RatElement big = symmetrizer(4);
    CHECK_THROWS_AS(RatElement::mul(big, big, 5), std::runtime_error);
}

TEST_CASE("rational algebra words associate under every parenthesization") {
    std::mt19937 rng(987654321);
    for (int n : {2, 3}) {
        const auto gens = generators(n);
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        std::uniform_int_distribution<int> length_dist(3, 5);
        for (int trial = 0; trial < 40; ++trial) {
            const int len = length_dist(rng);
            std::vector<RatElement> word;
            for (int i = 0; i < len; ++i) word.push_back(gens[pick(rng)]);

            RatElement left = word[0];
            for (int i = 1; i < len; ++i) left = left * word[i];
            RatElement right = word[len - 1];
            for (int i = len - 2; i >= 0; --i) right = word[i] * right;
            CHECK(left == right);

            std::uniform_int_distribution<int> cut(1, len - 1);
            const int mid = cut(rng);
            RatElement a = word[0];
            for (int i = 1; i < mid; ++i) a = a * word[i];
            RatElement b = word[mid];
            for (int i = mid + 1; i < len; ++i) b = b * word[i];
            CHECK(a * b == left);
        }
    }
}
