#include <doctest.h>

#include <cmath>
#include <limits>

#include "pqcalc/hypothesis.hpp"
#include "pqcalc/integral.hpp"

using namespace pqcalc;

namespace {
const PqParams kParams = PqParams::integration(0.8, 0.4);
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("bounded constants pass the boundedness probe") {
    const RealFunction c5([](double) { return 5.0; }, Interval::positive(), "const");
    const HypothesisCheck check = check_alpha_boundedness(c5, 0.0, 4.0, kParams);
    CHECK(check.verdict);
    REQUIRE(check.bound_m.has_value());
    CHECK(*check.bound_m == doctest::Approx(5.0).epsilon(0.05));
    CHECK(!check.witness.has_value());
}

TEST_CASE("the gap reciprocal fails for every alpha, with a witness near 1") {
    const RealFunction f(
        [](double x) { return 1.0 / (std::pow(x, 0.8) - std::pow(x, 0.4)); },
        Interval::positive(), "1/(x^p-x^q)");
    for (double alpha : {0.0, 0.5, 0.9}) {
        const HypothesisCheck check = check_alpha_boundedness(f, alpha, 4.0, kParams);
        CHECK(!check.verdict);
        REQUIRE(check.witness.has_value());
        CHECK(std::abs(*check.witness - 1.0) < 0.2);
    }
}

TEST_CASE("inverse square root is alpha-bounded exactly at alpha = 1/2") {
    const RealFunction f([](double x) { return 1.0 / std::sqrt(x); }, Interval::positive(),
                         "x^-1/2");
    const HypothesisCheck good = check_alpha_boundedness(f, 0.5, 4.0, kParams);
    CHECK(good.verdict);
    REQUIRE(good.bound_m.has_value());
    CHECK(*good.bound_m == doctest::Approx(1.0).epsilon(0.05));

    const HypothesisCheck bad = check_alpha_boundedness(f, 0.0, 4.0, kParams);
    CHECK(!bad.verdict);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness < 0.1); // blows up toward zero
}

TEST_CASE("boundedness probe validates its inputs") {
    const RealFunction f([](double) { return 1.0; }, Interval::positive(), "one");
    CHECK_THROWS_AS(check_alpha_boundedness(f, 1.0, 4.0, kParams), std::invalid_argument);
    CHECK_THROWS_AS(check_alpha_boundedness(f, -0.1, 4.0, kParams), std::invalid_argument);
    CHECK_THROWS_AS(check_alpha_boundedness(f, 0.0, 0.5, kParams), std::invalid_argument);
    CHECK_THROWS_AS(check_alpha_boundedness(f, 0.0, 4.0, PqParams::derivative(2.0, 3.0)),
                    std::invalid_argument);
}

TEST_CASE("zero passes the improper bound") {
    const RealFunction zero([](double) { return 0.0; }, Interval::positive(), "zero");
    const HypothesisCheck check = check_improper_hypothesis(zero, 0.5, -0.25, 1.0, kParams);
    CHECK(check.verdict);
}

TEST_CASE("a constant fails the decaying large-x bound") {
    // alpha_near_one = 0.2 keeps the near-1 bound comfortably above 1, so
    // the only violation is the decaying large-x bound.
    const RealFunction one([](double) { return 1.0; }, Interval::positive(), "one");
    const HypothesisCheck check = check_improper_hypothesis(one, 0.2, -0.25, 10.0, kParams);
    CHECK(!check.verdict);
    REQUIRE(check.witness.has_value());
    CHECK(*check.witness > 1.5); // violation in the large-x regime
    CHECK(check.alpha == -0.25);
}

TEST_CASE("near the fixed point the log-power bound can bite on its own") {
    // At alpha_near_one = 1/2 the second bound tends to 1/|1/p - 1/q| = 0.8,
    // so a constant 1 already violates it next to x = 1.
    const RealFunction one([](double) { return 1.0; }, Interval::positive(), "one");
    const HypothesisCheck check = check_improper_hypothesis(one, 0.5, -0.25, 10.0, kParams);
    CHECK(!check.verdict);
    REQUIRE(check.witness.has_value());
    CHECK(std::abs(*check.witness - 1.0) < 0.2);
}

TEST_CASE("a passing improper verdict is consistent with actual convergence") {
    const RealFunction f(
        [](double x) {
            return (std::pow(x, -0.4) - std::pow(x, -0.8)) /
                   (std::pow(x, 0.8) - std::pow(x, 0.4));
        },
        Interval::positive(), "D(-1/x)");
    const HypothesisCheck check = check_improper_hypothesis(f, 0.5, -0.25, 10.0, kParams);
    if (check.verdict) {
        const SeriesResult r =
            improper_integral(IntegralRequest::classify(1.0, kInf), f, kParams);
        CHECK(r.converged());
    }
    // Either way the integral itself converges; the bound is sufficient,
    // not necessary.
    const SeriesResult r = improper_integral(IntegralRequest::classify(1.0, kInf), f, kParams);
    CHECK(r.converged());
}

TEST_CASE("improper probe validates its inputs") {
    const RealFunction one([](double) { return 1.0; }, Interval::positive(), "one");
    CHECK_THROWS_AS(check_improper_hypothesis(one, 0.5, 0.1, 1.0, kParams),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_improper_hypothesis(one, 0.5, -0.9, 1.0, kParams),
                    std::invalid_argument); // below the default epsilon
    CHECK_THROWS_AS(check_improper_hypothesis(one, 1.2, -0.25, 1.0, kParams),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_improper_hypothesis(one, 0.5, -0.25, 0.0, kParams),
                    std::invalid_argument);
    // a wider epsilon admits the same alpha
    CHECK_NOTHROW(check_improper_hypothesis(one, 0.5, -0.9, 1.0, kParams, 200, 1.0));
}
