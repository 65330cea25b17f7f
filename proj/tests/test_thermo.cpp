#include <doctest.h>

#include <cmath>

#include "mdqd/thermo.hpp"
#include "support/oracles.hpp"

using namespace mdqd;
using doctest::Approx;

namespace {

constexpr double kTanh1 = 0.76159415595576488812;
constexpr double kH1 = 0.36533385508720760832; // h((1 - tanh 1)/2)

CycleInputs inputs(double eps, double tau, double t, double a, double b)
{
    return {{eps, tau}, t, a, b};
}

} // namespace

TEST_CASE("binary_entropy")
{
    CHECK(binary_entropy(0.5) == Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.11920292202211755594) == Approx(kH1).epsilon(1e-14));
    CHECK_THROWS_AS(binary_entropy(-1e-9), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(1.0 + 1e-9), std::domain_error);
}

TEST_CASE("run_cycle_matrix examples")
{
    SUBCASE("unbiased channels")
    {
        const StrokeLedger l = run_cycle_matrix(inputs(1, 0, 1, 0.5, 0.5));
        CHECK(std::abs(l.dU3) < 1e-15);
        CHECK(std::abs(l.dS3) < 1e-15);
        CHECK(l.dU2 == Approx(kTanh1).epsilon(1e-14));
    }
    SUBCASE("a = b = 0.7")
    {
        const StrokeLedger l = run_cycle_matrix(inputs(1, 0, 1, 0.7, 0.7));
        CHECK(l.dU1 == Approx(-0.36159415595576488812).epsilon(1e-13));
        CHECK(l.dU2 == Approx(1.16159415595576488812).epsilon(1e-13));
        CHECK(l.dU3 == Approx(-0.8).epsilon(1e-13));
        CHECK(std::abs(l.dU1 + l.dU2 + l.dU3) < 1e-15);
    }
}

TEST_CASE("run_cycle_closed_form examples")
{
    CHECK(run_cycle_closed_form(inputs(1, 0, 1, 0.7, 0.7)).dU3 == Approx(-0.8).epsilon(1e-15));
    CHECK(run_cycle_closed_form(inputs(1.3, 0.4, 2.5, 0.37, 0.37)).dS3 == 0.0);
    CHECK(run_cycle_closed_form(inputs(2, 0.5, 2, 0.1, 0.9)).dU3 == 0.0);
}

TEST_CASE("stroke states match the measurement targets")
{
    const CycleInputs in = inputs(0.8, 0.3, 1.7, 0.2, 0.65);
    for (const StrokeLedger& l : {run_cycle_matrix(in), run_cycle_closed_form(in)}) {
        CHECK(max_norm(l.rho1.matrix() - testing::gibbs_by_expm(0.8, 0.3, 1.7)) < 1e-12);
        CHECK(std::abs(l.rho2.matrix()(0, 0).real() - 0.8) < 1e-12);
        CHECK(std::abs(l.rho2.matrix()(1, 1).real() - 0.2) < 1e-12);
        CHECK(std::abs(l.rho3.matrix()(0, 0).real() - 0.65) < 1e-12);
        CHECK(std::abs(l.rho3.matrix()(1, 1).real() - 0.35) < 1e-12);
    }
}

TEST_CASE("invalid cycle inputs are rejected")
{
    CHECK_THROWS_AS(run_cycle_matrix(inputs(1, 0, 0, 0.5, 0.5)), std::domain_error);
    CHECK_THROWS_AS(run_cycle_closed_form(inputs(1, 0, 1, 1.5, 0.5)), std::domain_error);
    CHECK_THROWS_AS(run_cycle_closed_form(inputs(1, 0, 1, 0.5, -0.5)), std::domain_error);
    CHECK_THROWS_AS(run_cycle_matrix(inputs(INFINITY, 0, 1, 0.5, 0.5)), std::domain_error);
}

TEST_CASE("matrix and closed-form paths agree, and both close the cycle")
{
    testing::Rng rng(2024);
    for (int i = 0; i < 2000; ++i) {
        const CycleInputs in = rng.cycle_inputs();
        const StrokeLedger m = run_cycle_matrix(in);
        const StrokeLedger c = run_cycle_closed_form(in);
        REQUIRE(ledger_discrepancy(m, c) < 1e-10);
        for (const StrokeLedger& l : {m, c}) {
            REQUIRE(std::abs(l.dU1 + l.dU2 + l.dU3) < 1e-12);
            REQUIRE(std::abs(l.dS1 + l.dS2 + l.dS3) < 1e-12);
        }
        // Thermalization entropy change balances the two measurement strokes.
        const double h_th = testing::binary_entropy_direct(0.5 * (1.0 - std::tanh(std::hypot(in.params.epsilon, in.params.tau) / in.temperature)));
        REQUIRE(std::abs(c.dS2 + c.dS3 - (testing::binary_entropy_direct(in.b) - h_th)) < 1e-12);
        REQUIRE(std::abs(c.dS2 + c.dS3 + c.dS1) < 1e-12);
    }
}

TEST_CASE("entropy changes depend on tau only through E")
{
    testing::Rng rng(99);
    for (int i = 0; i < 500; ++i) {
        const double gap = rng.uniform(0.2, 3.0);
        const double angle1 = rng.uniform(0.05, 1.5);
        const double angle2 = rng.uniform(0.05, 1.5);
        const double t = rng.uniform(0.5, 6.0);
        const double a = rng.uniform(0, 1);
        const double b = rng.uniform(0, 1);
        const auto l1 = run_cycle_matrix(inputs(gap * std::cos(angle1), gap * std::sin(angle1), t, a, b));
        const auto l2 = run_cycle_matrix(inputs(gap * std::cos(angle2), gap * std::sin(angle2), t, a, b));
        REQUIRE(std::abs(l1.dS1 - l2.dS1) < 1e-12);
        REQUIRE(std::abs(l1.dS2 - l2.dS2) < 1e-12);
        REQUIRE(std::abs(l1.dS3 - l2.dS3) < 1e-12);
    }
}

TEST_CASE("ledger_discrepancy sees the largest field difference")
{
    StrokeLedger x = run_cycle_closed_form(inputs(1, 0.2, 1, 0.3, 0.6));
    StrokeLedger y = x;
    CHECK(ledger_discrepancy(x, y) == 0.0);
    y.dS2 += 0.25;
    CHECK(ledger_discrepancy(x, y) == Approx(0.25));
}
