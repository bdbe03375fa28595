#include <doctest.h>

#include <cmath>
#include <limits>

#include "pqcalc/derivative.hpp"
#include "pqcalc/errors.hpp"
#include "pqcalc/laws.hpp"
#include "pqcalc/orbit.hpp"

using namespace pqcalc;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const PqParams kP23 = PqParams::derivative(2.0, 3.0);
const PqParams kP84 = PqParams::integration(0.8, 0.4);

RealFunction constant(double c) {
    return RealFunction([c](double) { return c; }, Interval::nonnegative(), "const");
}
RealFunction identity() {
    return RealFunction([](double x) { return x; }, Interval::nonnegative(), "x");
}
RealFunction square() {
    return RealFunction([](double x) { return x * x; }, Interval::nonnegative(), "x^2");
}
RealFunction cube() {
    return RealFunction([](double x) { return x * x * x; }, Interval::nonnegative(), "x^3");
}
RealFunction log_fn() {
    return RealFunction([](double x) { return std::log(x); }, Interval::positive(), "ln");
}

} // namespace

TEST_CASE("product rules") {
    const LawReport trivial =
        verify_product_rules(constant(2.0), constant(-3.0), {2.0, 0.5}, kP23, 1e-14);
    CHECK(trivial.passed);
    CHECK(trivial.max_residual == 0.0);

    const LawReport poly = verify_product_rules(identity(), square(), {2.0, 3.0}, kP23, 1e-12);
    CHECK(poly.passed);

    const LawReport with_log = verify_product_rules(log_fn(), identity(), {2.0}, kP23, 1e-10);
    CHECK(with_log.passed);

    CHECK_THROWS_AS(verify_product_rules(identity(), square(), {1.0}, kP23, 1e-10),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_product_rules(identity(), square(), {}, kP23, 1e-10),
                    std::invalid_argument);
}

TEST_CASE("the two product decompositions agree with each other") {
    for (const PqParams& params : {kP23, kP84}) {
        for (double x : {0.3, 0.6, 1.7, 2.4}) {
            const RealFunction f = square();
            const RealFunction g = cube();
            const double xp = orbit::stable_pow(x, params.p);
            const double xq = orbit::stable_pow(x, params.q);
            const double df = pq_derivative(f, x, params);
            const double dg = pq_derivative(g, x, params);
            const double form1 = g(xp) * df + f(xq) * dg;
            const double form2 = g(xq) * df + f(xp) * dg;
            CHECK(std::abs(form1 - form2) <=
                  1e-12 * (1.0 + std::abs(form1) + std::abs(form2)));
        }
    }
}

TEST_CASE("quotient rules") {
    const RealFunction f = cube();
    const LawReport same = verify_quotient_rules(square(), square(), {2.0, 0.5}, kP23, 1e-12);
    CHECK(same.passed); // f/g is constant 1

    const LawReport poly = verify_quotient_rules(f, identity(), {2.0}, kP23, 1e-12);
    CHECK(poly.passed); // quotient is x^2

    // g(x^p) vanishes at x = 2, p = 2: the node is named in the error
    const RealFunction shifted([](double x) { return x - 4.0; }, Interval::nonnegative(),
                               "x-4");
    CHECK_THROWS_AS(verify_quotient_rules(identity(), shifted, {2.0}, kP23, 1e-10),
                    DomainError);
}

TEST_CASE("inverse lemmas across both sides of the fixed point") {
    const SeriesConfig config;
    const LawReport c_report =
        verify_inverse_lemmas(constant(4.0), {2.0, 0.5}, kP84, config, 1e-9);
    CHECK(c_report.passed);

    const LawReport sq_report =
        verify_inverse_lemmas(square(), {2.0, 1.5, 0.5, 0.25}, kP84, config, 1e-8);
    CHECK(sq_report.passed);

    const LawReport id_report = verify_inverse_lemmas(identity(), {0.5}, kP84, config, 1e-9);
    CHECK(id_report.passed);
}

TEST_CASE("fundamental theorem on finite pairs") {
    const SeriesConfig config;
    const LawReport cubic = verify_fundamental_theorem(
        cube(), {{2.0, 4.0}, {0.25, 0.5}, {0.5, 2.0}}, kP84, config, 1e-8);
    CHECK(cubic.passed);

    const LawReport flat =
        verify_fundamental_theorem(constant(9.0), {{2.0, 4.0}, {0.25, 0.5}}, kP84, config, 1e-12);
    CHECK(flat.passed);
    CHECK(flat.max_residual <= 1e-12);
}

TEST_CASE("fundamental theorem with an infinite upper bound") {
    const RealFunction F([](double x) { return -1.0 / x; }, Interval::positive(), "-1/x");
    const LawReport report =
        verify_fundamental_theorem(F, {{2.0, kInf}}, kP84, SeriesConfig{}, 1e-6, 0.0);
    CHECK(report.passed);

    CHECK_THROWS_AS(verify_fundamental_theorem(F, {{2.0, kInf}}, kP84, SeriesConfig{}, 1e-6),
                    std::invalid_argument); // limit not supplied
}

TEST_CASE("fundamental-theorem residual shrinks with the series tolerance") {
    auto residual_at = [&](double rel_tol) {
        SeriesConfig config;
        config.rel_tol = rel_tol;
        return verify_fundamental_theorem(cube(), {{2.0, 4.0}}, kP84, config, 1.0).max_residual;
    };
    const double r6 = residual_at(1e-6);
    const double r10 = residual_at(1e-10);
    const double r12 = residual_at(1e-12);
    CHECK(r10 < r6);
    CHECK(r12 <= 10.0 * r10);
}

TEST_CASE("integration by parts") {
    const SeriesConfig config;
    // f constant: the first integral collapses and the law reduces to the
    // fundamental theorem for g.
    const LawReport reduced = verify_integration_by_parts(constant(1.0), cube(), {{2.0, 4.0}},
                                                          kP84, config, 1e-8);
    CHECK(reduced.passed);

    const LawReport polys = verify_integration_by_parts(square(), cube(), {{1.0, 2.0}}, kP84,
                                                        config, 1e-8);
    CHECK(polys.passed);

    const LawReport below = verify_integration_by_parts(identity(), identity(),
                                                        {{0.25, 0.5}}, kP84, config, 1e-8);
    CHECK(below.passed);

    const LawReport split = verify_integration_by_parts(square(), identity(), {{0.5, 2.0}},
                                                        kP84, config, 1e-8);
    CHECK(split.passed);
}

TEST_CASE("law reports are deterministic") {
    const SeriesConfig config;
    const LawReport a =
        verify_inverse_lemmas(square(), {2.0, 0.5}, kP84, config, 1e-8);
    const LawReport b =
        verify_inverse_lemmas(square(), {2.0, 0.5}, kP84, config, 1e-8);
    CHECK(a.max_residual == b.max_residual);
    CHECK(a.worst_point == b.worst_point);
    CHECK(a.passed == b.passed);
    CHECK(a.sample_points == b.sample_points);
}

TEST_CASE("report invariants") {
    const LawReport r = verify_product_rules(identity(), square(), {2.0, 3.0}, kP23, 1e-12);
    CHECK(!r.sample_points.empty());
    CHECK(r.passed == (r.max_residual <= r.tolerance));
}
