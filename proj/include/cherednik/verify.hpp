#pragma once

// Mechanical verification of the algebra presentations: every defining
// relation is evaluated as LHS - RHS through the normal-ordering engine and
// reported as zero or not. The embedding suite applies the rational-to-trig
// embedding to each rational relation and checks vanishing in the target.
// Associativity of the engine itself is checked over all generator triples.

#include <functional>
#include <string>
#include <vector>

#include "cherednik/embedding.hpp"
#include "cherednik/rat_algebra.hpp"
#include "cherednik/trig_algebra.hpp"

namespace cherednik {

enum class Suite { rational, trigonometric, embedding };

struct RelationCheck {
    std::string name;
    long long residual_terms = 0;
    bool ok() const { return residual_terms == 0; }
};

struct VerificationReport {
    std::vector<RelationCheck> checks;

    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok()) return false;
        return true;
    }
};

namespace detail {

template <class Elem>
struct RatImages {
    std::function<Elem(int)> x; // 1-based
    std::function<Elem(int)> y;
    std::function<Elem(const Permutation&)> g;
    std::function<Elem(const LaurentScalar&)> scalar;
};

// The rational defining relations as residuals, built from generator images
// so the same list serves the native algebra and its embedded copy.
template <class Elem>
std::vector<std::pair<std::string, Elem>> rational_residuals(int n, const RatImages<Elem>& im) {
    std::vector<std::pair<std::string, Elem>> out;
    auto s = [&](int i) { return im.g(Permutation::simple(n, i - 1)); }; // 1-based

    for (int i = 1; i < n; ++i)
        out.push_back({"s" + std::to_string(i) + "^2 = 1",
                       s(i) * s(i) - im.scalar(LaurentScalar(1))});
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            out.push_back({"s" + std::to_string(i) + " s" + std::to_string(j) + " commute",
                           s(i) * s(j) - s(j) * s(i)});
    for (int i = 1; i + 1 < n; ++i)
        out.push_back({"braid s" + std::to_string(i) + " s" + std::to_string(i + 1),
                       s(i) * s(i + 1) * s(i) - s(i + 1) * s(i) * s(i + 1)});

    for (int i = 1; i < n; ++i) {
        for (int k = 1; k <= n; ++k) {
            const int sk = k == i ? i + 1 : (k == i + 1 ? i : k);
            out.push_back({"s" + std::to_string(i) + " x" + std::to_string(k) + " s" +
                               std::to_string(i) + " = x" + std::to_string(sk),
                           s(i) * im.x(k) * s(i) - im.x(sk)});
            out.push_back({"s" + std::to_string(i) + " y" + std::to_string(k) + " s" +
                               std::to_string(i) + " = y" + std::to_string(sk),
                           s(i) * im.y(k) * s(i) - im.y(sk)});
        }
    }

    for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
            Elem rhs = im.scalar(LaurentScalar(0));
            std::string rhs_name;
            if (k == l) {
                rhs = rhs + im.scalar(LaurentScalar::kappa_power(1));
                rhs_name = "k";
                for (int t = 1; t <= n; ++t) {
                    if (t == k) continue;
                    const int a = std::min(k, t);
                    const int b = std::max(k, t);
                    rhs = rhs + im.g(Permutation::transposition(n, a - 1, b - 1));
                    rhs_name += " + s" + std::to_string(a) + std::to_string(b);
                }
            } else {
                const int a = std::min(k, l);
                const int b = std::max(k, l);
                rhs = rhs - im.g(Permutation::transposition(n, a - 1, b - 1));
                rhs_name = "-s" + std::to_string(a) + std::to_string(b);
            }
            out.push_back({"[y" + std::to_string(k) + ",x" + std::to_string(l) + "] = " + rhs_name,
                           im.y(k) * im.x(l) - im.x(l) * im.y(k) - rhs});
        }
    }

    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            out.push_back({"[x" + std::to_string(k) + ",x" + std::to_string(l) + "] = 0",
                           im.x(k) * im.x(l) - im.x(l) * im.x(k)});
            out.push_back({"[y" + std::to_string(k) + ",y" + std::to_string(l) + "] = 0",
                           im.y(k) * im.y(l) - im.y(l) * im.y(k)});
        }
    return out;
}

template <class Elem>
long long associativity_failures(const std::vector<Elem>& gens) {
    long long fails = 0;
    for (const auto& a : gens)
        for (const auto& b : gens)
            for (const auto& c : gens)
                if ((a * b) * c != a * (b * c)) ++fails;
    return fails;
}

} // namespace detail

inline VerificationReport verify_relations(int rank, Suite suite) {
    if (rank < 1) throw std::invalid_argument("verify_relations: rank must be >= 1");
    if (rank > 6) throw std::invalid_argument("verify_relations: rank bound exceeded");
    const int n = rank;
    VerificationReport report;
    auto push = [&](const std::string& name, long long residual) {
        report.checks.push_back({name, residual});
    };

    if (suite == Suite::rational) {
        detail::RatImages<RatElement> im{
            [n](int i) { return RatElement::x_generator(n, i); },
            [n](int i) { return RatElement::y_generator(n, i); },
            [](const Permutation& w) { return RatElement::group_element(w); },
            [n](const LaurentScalar& c) { return RatElement::scalar(n, c); }};
        for (const auto& [name, residual] : detail::rational_residuals(n, im))
            push(name, static_cast<long long>(residual.term_count()));

        // the commuting family, the grading element and the symmetrizer
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                push("[u" + std::to_string(i) + ",u" + std::to_string(j) + "] = 0",
                     commutator(jucys_murphy(n, i), jucys_murphy(n, j)).term_count());
        const RatElement grading = grading_element(n);
        for (int i = 1; i <= n; ++i) {
            push("[grading,x" + std::to_string(i) + "] = x" + std::to_string(i),
                 (commutator(grading, RatElement::x_generator(n, i)) -
                  RatElement::x_generator(n, i))
                     .term_count());
            push("[grading,y" + std::to_string(i) + "] = -y" + std::to_string(i),
                 (commutator(grading, RatElement::y_generator(n, i)) +
                  RatElement::y_generator(n, i))
                     .term_count());
        }
        for (int i = 1; i < n; ++i)
            push("[grading,s" + std::to_string(i) + "] = 0",
                 commutator(grading, RatElement::simple_reflection(n, i)).term_count());
        const RatElement e = symmetrizer(n);
        push("e^2 = e", (e * e - e).term_count());
        push("[grading,e] = 0", commutator(grading, e).term_count());

        std::vector<RatElement> gens;
        for (int i = 1; i <= n; ++i) {
            gens.push_back(RatElement::x_generator(n, i));
            gens.push_back(RatElement::y_generator(n, i));
        }
        for (int i = 1; i < n; ++i) gens.push_back(RatElement::simple_reflection(n, i));
        push("generator associativity (all triples)", detail::associativity_failures(gens));
        return report;
    }

    if (suite == Suite::trigonometric) {
        auto s = [n](int i) { return TrigElement::simple_reflection(n, i); };
        auto y = [n](int i) { return TrigElement::y_generator(n, i); };
        auto X = [n](int i, int sg) { return TrigElement::lattice_generator(n, i, sg); };
        const TrigElement one = TrigElement::unit(n);

        for (int i = 1; i < n; ++i)
            push("s" + std::to_string(i) + "^2 = 1", (s(i) * s(i) - one).term_count());
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j)
                push("s" + std::to_string(i) + " s" + std::to_string(j) + " commute",
                     (s(i) * s(j) - s(j) * s(i)).term_count());
        for (int i = 1; i + 1 < n; ++i)
            push("braid s" + std::to_string(i) + " s" + std::to_string(i + 1),
                 (s(i) * s(i + 1) * s(i) - s(i + 1) * s(i) * s(i + 1)).term_count());

        for (int i = 1; i < n; ++i) {
            for (int k = 1; k <= n; ++k) {
                const int sk = k == i ? i + 1 : (k == i + 1 ? i : k);
                for (int sg : {1, -1}) {
                    const std::string pw = sg == 1 ? "" : "^-1";
                    push("s" + std::to_string(i) + " X" + std::to_string(k) + pw + " s" +
                             std::to_string(i) + " = X" + std::to_string(sk) + pw,
                         (s(i) * X(k, sg) * s(i) - X(sk, sg)).term_count());
                }
                // degenerate affine cross relation s_i y = s_i(y) s_i - <alpha_i|y>
                const int pairing = k == i ? 1 : (k == i + 1 ? -1 : 0);
                TrigElement residual = s(i) * y(k) - y(sk) * s(i) +
                                       TrigElement::scalar(n, LaurentScalar(pairing));
                push("s" + std::to_string(i) + " y" + std::to_string(k) + " = y" +
                         std::to_string(sk) + " s" + std::to_string(i) + " - (" +
                         std::to_string(pairing) + ")",
                     residual.term_count());
            }
        }

        for (int k = 1; k <= n; ++k) {
            for (int l = 1; l <= n; ++l) {
                for (int sg : {1, -1}) {
                    std::vector<int> eta(n, 0);
                    eta[l - 1] = sg;
                    TrigElement rhs(n);
                    if (k == l)
                        rhs = rhs + (LaurentScalar::term(Rational(sg), 1) *
                                     TrigElement::lattice_element(n, eta));
                    for (int t = 1; t <= n; ++t) {
                        if (t == k) continue;
                        const int a = std::min(k, t);
                        const int b = std::max(k, t);
                        const LaurentScalar sign(k == a ? 1 : -1);
                        rhs = rhs + (sign * (divided_sum(n, eta, a, b) *
                                             TrigElement::reflection(n, a, b)));
                    }
                    const TrigElement lat = TrigElement::lattice_element(n, eta);
                    const std::string pw = sg == 1 ? "" : "^-1";
                    push("[y" + std::to_string(k) + ",X" + std::to_string(l) + pw +
                             "] commutation",
                         (y(k) * lat - lat * y(k) - rhs).term_count());
                }
            }
        }

        for (int k = 1; k <= n; ++k) {
            push("X" + std::to_string(k) + " * X" + std::to_string(k) + "^-1 = 1",
                 (X(k, 1) * X(k, -1) - one).term_count());
            for (int l = k + 1; l <= n; ++l) {
                std::vector<int> eta(n, 0);
                eta[k - 1] = 1;
                eta[l - 1] = 1;
                push("X" + std::to_string(k) + " * X" + std::to_string(l) + " = X^(e" +
                         std::to_string(k) + "+e" + std::to_string(l) + ")",
                     (X(k, 1) * X(l, 1) - TrigElement::lattice_element(n, eta)).term_count());
                push("[y" + std::to_string(k) + ",y" + std::to_string(l) + "] = 0",
                     (y(k) * y(l) - y(l) * y(k)).term_count());
            }
        }

        std::vector<TrigElement> gens;
        for (int i = 1; i <= n; ++i) {
            gens.push_back(X(i, 1));
            gens.push_back(X(i, -1));
            gens.push_back(y(i));
        }
        for (int i = 1; i < n; ++i) gens.push_back(s(i));
        push("generator associativity (all triples)", detail::associativity_failures(gens));
        return report;
    }

    // embedding: rational relations evaluated at the embedded generators
    detail::RatImages<TrigElement> im{
        [n](int i) { return TrigElement::lattice_generator(n, i, 1); },
        [n](int i) { return embed_y_generator(n, i); },
        [](const Permutation& w) { return TrigElement::group_element(w); },
        [n](const LaurentScalar& c) { return TrigElement::scalar(n, c); }};
    for (const auto& [name, residual] : detail::rational_residuals(n, im))
        push("iota: " + name, static_cast<long long>(residual.term_count()));
    for (int i = 1; i <= n; ++i)
        push("iota(u" + std::to_string(i) + ") = y" + std::to_string(i),
             (embed_rational(jucys_murphy(n, i)) - TrigElement::y_generator(n, i)).term_count());
    return report;
}

} // namespace cherednik
