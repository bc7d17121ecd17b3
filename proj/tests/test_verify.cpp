#include <catch2/catch_amalgamated.hpp>

#include "cherednik/verify.hpp"

using namespace cherednik;

TEST_CASE("all suites verify at small rank") {
    for (int n = 1; n <= 3; ++n) {
        for (Suite suite : {Suite::rational, Suite::trigonometric, Suite::embedding}) {
            const VerificationReport report = verify_relations(n, suite);
            CHECK(report.all_ok());
            for (const auto& check : report.checks) {
                INFO(check.name);
                CHECK(check.residual_terms == 0);
            }
        }
    }
}

TEST_CASE("the rank 2 rational report names the worked relation") {
    const VerificationReport report = verify_relations(2, Suite::rational);
    bool found = false;
    for (const auto& check : report.checks)
        if (check.name == "[y1,x1] = k + s12") found = check.ok();
    CHECK(found);
}

TEST_CASE("reports are deterministic") {
    const VerificationReport a = verify_relations(3, Suite::trigonometric);
    const VerificationReport b = verify_relations(3, Suite::trigonometric);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i)
        CHECK(a.checks[i].name == b.checks[i].name);
}

TEST_CASE("rank guard") {
    CHECK_THROWS_AS(verify_relations(7, Suite::rational), std::invalid_argument);
    CHECK_THROWS_AS(verify_relations(0, Suite::rational), std::invalid_argument);
}
