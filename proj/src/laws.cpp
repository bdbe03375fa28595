#include "pqcalc/laws.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pqcalc/derivative.hpp"
#include "pqcalc/errors.hpp"
#include "pqcalc/integral.hpp"
#include "pqcalc/orbit.hpp"

namespace pqcalc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ResidualTracker {
    double max_residual = 0.0;
    double worst_point = 0.0;
    bool any = false;

    void record(double residual, double point) {
        if (!any || residual > max_residual) {
            max_residual = residual;
            worst_point = point;
        }
        any = true;
    }
};

LawReport finish(std::string name, std::vector<double> points, const ResidualTracker& tracker,
                 double tol) {
    if (!tracker.any)
        throw std::invalid_argument(name + ": no applicable sample points supplied");
    LawReport report;
    report.law_name = std::move(name);
    report.sample_points = std::move(points);
    report.max_residual = tracker.max_residual;
    report.tolerance = tol;
    report.passed = tracker.max_residual <= tol;
    report.worst_point = tracker.worst_point;
    return report;
}

void check_point(double x) {
    if (x == 0.0 || x == 1.0)
        throw std::invalid_argument("law verification points must avoid x = 0 and x = 1");
    if (!(x > 0.0)) throw std::invalid_argument("law verification points must be positive");
}

RealFunction product_of(const RealFunction& f, const RealFunction& g) {
    return RealFunction([f, g](double x) { return f(x) * g(x); }, f.domain(),
                        f.name() + "*" + g.name());
}

std::vector<double> flatten(const std::vector<std::pair<double, double>>& pairs) {
    std::vector<double> flat;
    flat.reserve(pairs.size() * 2);
    for (const auto& [a, b] : pairs) {
        flat.push_back(a);
        flat.push_back(b);
    }
    return flat;
}

} // namespace

LawReport verify_product_rules(const RealFunction& f, const RealFunction& g,
                               const std::vector<double>& xs, const PqParams& params,
                               double tol) {
    const RealFunction fg = product_of(f, g);
    ResidualTracker tracker;
    for (double x : xs) {
        check_point(x);
        const double xp = orbit::stable_pow(x, params.p);
        const double xq = orbit::stable_pow(x, params.q);
        const double lhs = pq_derivative(fg, x, params);
        const double df = pq_derivative(f, x, params);
        const double dg = pq_derivative(g, x, params);
        const double form1 = g(xp) * df + f(xq) * dg;
        const double form2 = g(xq) * df + f(xp) * dg;
        tracker.record(std::abs(lhs - form1), x);
        tracker.record(std::abs(lhs - form2), x);
    }
    return finish("product_rules", xs, tracker, tol);
}

LawReport verify_quotient_rules(const RealFunction& f, const RealFunction& g,
                                const std::vector<double>& xs, const PqParams& params,
                                double tol) {
    const RealFunction quotient([f, g](double x) {
        const double gx = g(x);
        if (gx == 0.0)
            throw DomainError("quotient rule: " + g.name() + " vanishes at x = " +
                              std::to_string(x));
        return f(x) / gx;
    }, f.domain(), f.name() + "/" + g.name());

    ResidualTracker tracker;
    for (double x : xs) {
        check_point(x);
        const double xp = orbit::stable_pow(x, params.p);
        const double xq = orbit::stable_pow(x, params.q);
        const double gp = g(xp);
        const double gq = g(xq);
        if (gp == 0.0 || gq == 0.0)
            throw DomainError("quotient rule: " + g.name() + " vanishes at the node x^" +
                              (gp == 0.0 ? std::to_string(params.p) : std::to_string(params.q)) +
                              " = " + std::to_string(gp == 0.0 ? xp : xq));
        const double lhs = pq_derivative(quotient, x, params);
        const double df = pq_derivative(f, x, params);
        const double dg = pq_derivative(g, x, params);
        const double form1 = (gq * df - f(xq) * dg) / (gq * gp);
        const double form2 = (gp * df - f(xp) * dg) / (gq * gp);
        tracker.record(std::abs(lhs - form1), x);
        tracker.record(std::abs(lhs - form2), x);
    }
    return finish("quotient_rules", xs, tracker, tol);
}

LawReport verify_inverse_lemmas(const RealFunction& f, const std::vector<double>& xs,
                                const PqParams& params, const SeriesConfig& config, double tol) {
    const RealFunction df = derivative_function(f, params);

    auto converged_value = [](const SeriesResult& r, const char* what) {
        if (!r.converged())
            throw ConvergenceError(0, std::string(what) + " did not converge (status " +
                                          to_string(r.status) + ")");
        return r.value;
    };

    ResidualTracker tracker;
    for (double x : xs) {
        check_point(x);
        if (x > 1.0) {
            // D of the from-1 integral reproduces f; the from-1 integral of
            // Df drops f(1).
            const RealFunction F([&f, &params, &config, &converged_value](double y) {
                return converged_value(antiderivative_series(f, y, params, config),
                                       "from-1 integral");
            }, Interval::positive(), "int_1(" + f.name() + ")");
            tracker.record(std::abs(pq_derivative(F, x, params) - f(x)), x);
            const double iDf =
                converged_value(definite_integral(1.0, x, df, params, config), "from-1 integral");
            tracker.record(std::abs(iDf - (f(x) - f(1.0))), x);
        } else {
            // To-1 integral: D flips the sign; applied to Df it yields
            // f(1) - f(x).
            const RealFunction G([&f, &params, &config, &converged_value](double y) {
                return converged_value(definite_integral(y, 1.0, f, params, config),
                                       "to-1 integral");
            }, Interval::positive(), "int_to1(" + f.name() + ")");
            tracker.record(std::abs(pq_derivative(G, x, params) + f(x)), x);
            const double i2Df =
                converged_value(definite_integral(x, 1.0, df, params, config), "to-1 integral");
            tracker.record(std::abs(i2Df - (f(1.0) - f(x))), x);

            // From-0 integral: D reproduces f; applied to Df it drops f(0).
            const RealFunction H([&f, &params, &config, &converged_value](double y) {
                return converged_value(definite_integral(0.0, y, f, params, config),
                                       "from-0 integral");
            }, Interval{0.0, 1.0, false, false}, "int_0(" + f.name() + ")");
            tracker.record(std::abs(pq_derivative(H, x, params) - f(x)), x);
            const double i3Df =
                converged_value(definite_integral(0.0, x, df, params, config), "from-0 integral");
            tracker.record(std::abs(i3Df - (f(x) - f(0.0))), x);
        }
    }
    return finish("inverse_lemmas", xs, tracker, tol);
}

LawReport verify_fundamental_theorem(const RealFunction& F,
                                     const std::vector<std::pair<double, double>>& pairs,
                                     const PqParams& params, const SeriesConfig& config,
                                     double tol, std::optional<double> limit_at_infinity) {
    const RealFunction f = derivative_function(F, params);
    ResidualTracker tracker;
    for (const auto& [a, b] : pairs) {
        SeriesResult integral;
        double expected;
        if (b == kInf) {
            if (!limit_at_infinity)
                throw std::invalid_argument(
                    "fundamental-theorem pair with upper = inf needs the limit of " + F.name() +
                    " at infinity");
            integral = improper_integral(IntegralRequest::classify(a, kInf), f, params, config);
            expected = *limit_at_infinity - F(a);
        } else {
            integral = definite_integral(a, b, f, params, config);
            expected = F(b) - F(a);
        }
        if (!integral.converged())
            throw ConvergenceError(0, "fundamental-theorem integral over (" + std::to_string(a) +
                                          ", " + std::to_string(b) + ") did not converge (status " +
                                          to_string(integral.status) + ")");
        tracker.record(std::abs(integral.value - expected), a);
    }
    return finish("fundamental_theorem", flatten(pairs), tracker, tol);
}

LawReport verify_integration_by_parts(const RealFunction& f, const RealFunction& g,
                                      const std::vector<std::pair<double, double>>& pairs,
                                      const PqParams& params, const SeriesConfig& config,
                                      double tol) {
    const RealFunction f_at_p([f, params](double x) { return f(orbit::stable_pow(x, params.p)); },
                              f.domain(), f.name() + "(x^p)");
    const RealFunction f_at_q([f, params](double x) { return f(orbit::stable_pow(x, params.q)); },
                              f.domain(), f.name() + "(x^q)");
    const RealFunction g_at_p([g, params](double x) { return g(orbit::stable_pow(x, params.p)); },
                              g.domain(), g.name() + "(x^p)");
    const RealFunction g_at_q([g, params](double x) { return g(orbit::stable_pow(x, params.q)); },
                              g.domain(), g.name() + "(x^q)");

    auto value = [&](const RealFunction& integrand, const RealFunction& against, double a,
                     double b) {
        const SeriesResult r = integral_with_dg_between(integrand, against, a, b, params, config);
        if (!r.converged())
            throw ConvergenceError(0, "by-parts integral over (" + std::to_string(a) + ", " +
                                          std::to_string(b) + ") did not converge (status " +
                                          to_string(r.status) + ")");
        return r.value;
    };

    ResidualTracker tracker;
    for (const auto& [a, b] : pairs) {
        const double boundary = f(b) * g(b) - f(a) * g(a);
        const double form1 = value(f_at_q, g, a, b) + value(g_at_p, f, a, b);
        const double form2 = value(f_at_p, g, a, b) + value(g_at_q, f, a, b);
        tracker.record(std::abs(form1 - boundary), a);
        tracker.record(std::abs(form2 - boundary), a);
    }
    return finish("integration_by_parts", flatten(pairs), tracker, tol);
}

} // namespace pqcalc
