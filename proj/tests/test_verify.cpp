#include <doctest.h>

#include <sstream>

#include "mdqd/verify.hpp"

using namespace mdqd;

TEST_CASE("seeded verification passes with small residuals")
{
    const VerifyReport r = run_verification({42, 1000, false});
    CHECK(r.passed());
    REQUIRE(r.suites.size() == 6);
    for (const SuiteResult& s : r.suites) {
        INFO(s.name);
        CHECK(s.passed);
        CHECK(s.max_residual < 1e-10);
    }
}

TEST_CASE("verification is reproducible for a given seed")
{
    const VerifyReport x = run_verification({7, 200, false});
    const VerifyReport y = run_verification({7, 200, false});
    for (std::size_t i = 0; i < x.suites.size(); ++i)
        CHECK(x.suites[i].max_residual == y.suites[i].max_residual);
}

TEST_CASE("zero trials is a usage error")
{
    CHECK_THROWS_AS(run_verification({42, 0, false}), std::invalid_argument);
}

TEST_CASE("corrupted Kraus sets fail with the residual and case reported")
{
    const VerifyReport r = run_verification({42, 100, true});
    CHECK_FALSE(r.passed());
    const SuiteResult& completeness = r.suites.front();
    CHECK(completeness.name == "completeness");
    CHECK_FALSE(completeness.passed);
    CHECK(completeness.max_residual > 0.5);
    CHECK(completeness.failing_case.find("strength=") != std::string::npos);

    std::ostringstream os;
    r.print(os);
    CHECK(os.str().find("FAIL completeness") != std::string::npos);
    CHECK(os.str().find("failing case:") != std::string::npos);
    CHECK(os.str().find("verification FAILED") != std::string::npos);
}
