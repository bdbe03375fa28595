#include "pqcalc/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pqcalc/errors.hpp"
#include "pqcalc/orbit.hpp"

namespace pqcalc {

namespace {

void require_integration(const PqParams& params) {
    if (!params.is_integration())
        throw std::invalid_argument("hypothesis checks require integration-mode parameters");
}

// |f(x)| x^alpha, or nullopt when x is outside f's domain.
std::optional<double> probe(const RealFunction& f, double x, double alpha) {
    if (!f.domain().contains(x)) return std::nullopt;
    return std::abs(f(x)) * orbit::stable_pow(x, alpha);
}

// Samples g along points approaching a singular candidate at distances
// 10^-1 .. 10^-kMaxDecade and reports a blow-up when the value grows more
// than 10x across the three finest sampled decades (or goes non-finite).
struct ApproachScan {
    bool blew_up = false;
    double witness = 0.0;
    double max_value = 0.0;
};

constexpr int kMaxDecade = 12;

ApproachScan scan_approach(const RealFunction& f, double alpha,
                           const std::function<double(double)>& point_at,
                           const Interval& allowed) {
    ApproachScan scan;
    std::vector<double> values;
    std::vector<double> points;
    for (int k = 1; k <= kMaxDecade; ++k) {
        const double x = point_at(std::pow(10.0, -k));
        if (!(x > 0.0) || !allowed.contains(x)) continue;
        const auto g = probe(f, x, alpha);
        if (!g) continue;
        if (!std::isfinite(*g)) {
            scan.blew_up = true;
            scan.witness = x;
            return scan;
        }
        values.push_back(*g);
        points.push_back(x);
        scan.max_value = std::max(scan.max_value, *g);
    }
    if (values.size() >= 4) {
        const std::size_t n = values.size();
        const double coarse = values[n - 4];
        const double fine = values[n - 1];
        if (fine > 10.0 * coarse && fine > 0.0) {
            scan.blew_up = true;
            scan.witness = points[n - 1];
        }
    }
    return scan;
}

} // namespace

HypothesisCheck check_alpha_boundedness(const RealFunction& f, double alpha, double A,
                                        const PqParams& params, int sample_count) {
    require_integration(params);
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("boundedness check requires 0 <= alpha < 1");
    if (!(A > 1.0)) throw std::invalid_argument("boundedness check requires A > 1");
    if (sample_count < 2) throw std::invalid_argument("sample_count must be at least 2");

    HypothesisCheck result;
    result.alpha = alpha;
    result.sample_count = sample_count;

    const double upper = orbit::stable_pow(A, 1.0 / params.p); // node overshoot included
    const Interval allowed{0.0, upper, false, true};

    // Approaches to the two accumulation points of the node orbit.
    const ApproachScan toward_zero =
        scan_approach(f, alpha, [](double d) { return d; }, allowed);
    const ApproachScan above_one =
        scan_approach(f, alpha, [](double d) { return 1.0 + d; }, allowed);
    const ApproachScan below_one =
        scan_approach(f, alpha, [](double d) { return 1.0 - d; }, allowed);

    double max_value = std::max({toward_zero.max_value, above_one.max_value,
                                 below_one.max_value});

    for (const ApproachScan* scan : {&above_one, &below_one, &toward_zero}) {
        if (scan->blew_up) {
            result.verdict = false;
            result.witness = scan->witness;
            return result;
        }
    }

    // Bulk log-spaced grid over (0, A^{1/p}].
    const double lo = std::min(1e-12, upper / 2.0);
    for (int i = 0; i < sample_count; ++i) {
        const double t = static_cast<double>(i) / (sample_count - 1);
        const double x = std::exp(std::log(lo) + t * (std::log(upper) - std::log(lo)));
        const auto g = probe(f, x, alpha);
        if (!g) continue;
        if (!std::isfinite(*g)) {
            result.verdict = false;
            result.witness = x;
            return result;
        }
        max_value = std::max(max_value, *g);
    }

    result.verdict = true;
    result.bound_m = max_value;
    return result;
}

HypothesisCheck check_improper_hypothesis(const RealFunction& f, double alpha_near_one,
                                          double alpha_large_x, double r,
                                          const PqParams& params, int sample_count,
                                          double epsilon) {
    require_integration(params);
    if (!(alpha_near_one >= 0.0 && alpha_near_one < 1.0))
        throw std::invalid_argument("improper check requires 0 <= alpha_near_one < 1");
    if (!(alpha_large_x < 0.0 && alpha_large_x >= -epsilon))
        throw std::invalid_argument("improper check requires -epsilon <= alpha_large_x < 0");
    if (!(r > 0.0)) throw std::invalid_argument("improper check requires r > 0");
    if (sample_count < 2) throw std::invalid_argument("sample_count must be at least 2");

    HypothesisCheck result;
    result.alpha = alpha_near_one;
    result.r = r;
    result.sample_count = sample_count;

    const auto bound = [&](double x, double alpha) {
        const double power_part = r * orbit::stable_pow(x, alpha);
        const double gap = std::abs(orbit::stable_pow(x, 1.0 / params.p) -
                                    orbit::stable_pow(x, 1.0 / params.q));
        const double log_part =
            gap > 0.0 ? std::pow(std::log(x), 2.0 * alpha) / gap
                      : std::numeric_limits<double>::infinity();
        return std::min(power_part, log_part);
    };

    const auto violates = [&](double x, double alpha) -> bool {
        if (!f.domain().contains(x)) return false;
        const double fx = std::abs(f(x));
        return !(fx < bound(x, alpha));
    };

    // Near-1 grid: x = 1 + d with d log-spaced toward 1, capped at 0.25 so
    // the probe stays in the neighborhood the bound is about.
    const double d_hi = std::min(0.25, params.p / params.q - 1.0);
    for (int i = 0; i < sample_count; ++i) {
        const double t = static_cast<double>(i) / (sample_count - 1);
        const double d = std::exp(std::log(1e-8) + t * (std::log(d_hi) - std::log(1e-8)));
        const double x = 1.0 + d;
        if (violates(x, alpha_near_one)) {
            result.verdict = false;
            result.witness = x;
            return result;
        }
    }

    // Large-x geometric grid (p/q)^k, k = 1..40.
    for (int k = 1; k <= 40; ++k) {
        double x;
        try {
            x = orbit::stable_pow(params.p / params.q, static_cast<double>(k));
        } catch (const RangeError&) {
            break;
        }
        if (violates(x, alpha_large_x)) {
            result.verdict = false;
            result.alpha = alpha_large_x;
            result.witness = x;
            return result;
        }
    }

    result.verdict = true;
    return result;
}

} // namespace pqcalc
