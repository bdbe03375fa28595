#include "pqcalc/integral.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "pqcalc/errors.hpp"
#include "pqcalc/orbit.hpp"

namespace pqcalc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_integration(const PqParams& params) {
    if (!params.is_integration())
        throw std::invalid_argument("pq-integration requires integration-mode parameters");
}

void check_covers(const RealFunction& f, const Interval& needed, const std::string& what) {
    if (!f.domain().contains(needed))
        throw DomainError(what + " samples " + f.name() + " on " + needed.str() +
                          " but its domain is " + f.domain().str());
}

SeriesResult zero_result() { return {0.0, 0, SeriesStatus::Converged, 0.0}; }

SeriesResult negate(SeriesResult r) {
    r.value = -r.value;
    return r;
}

SeriesStatus worst(SeriesStatus a, SeriesStatus b) {
    if (a == SeriesStatus::DivergenceDetected || b == SeriesStatus::DivergenceDetected)
        return SeriesStatus::DivergenceDetected;
    if (a == SeriesStatus::MaxTermsExceeded || b == SeriesStatus::MaxTermsExceeded)
        return SeriesStatus::MaxTermsExceeded;
    return SeriesStatus::Converged;
}

SeriesResult combine(const SeriesResult& a, const SeriesResult& b, double sign_b) {
    return {a.value + sign_b * b.value, a.terms_used + b.terms_used,
            worst(a.status, b.status), a.tail_estimate + b.tail_estimate};
}

// Signed lattice sum from 1 to x: sum_j weight(x,j) * f(node(x,j)). When a
// weight underflows to exactly zero the term is taken as zero without
// evaluating f; the true remaining mass is below double resolution there.
SeriesResult from_one_series(const RealFunction& f, double x, const PqParams& params,
                             const SeriesConfig& config) {
    if (!(x > 0.0))
        throw DomainError("series pq-integral requires x > 0, got x = " + std::to_string(x));
    if (x == 1.0) return zero_result();
    check_covers(f, orbit::node_range(x, params), "series pq-integral");
    return sum_series(
        [&](std::size_t j) {
            const double w = orbit::weight(x, static_cast<int>(j), params);
            if (w == 0.0) return 0.0;
            return w * f(orbit::node(x, static_cast<int>(j), params));
        },
        config);
}

// From-zero sum on 0 < b < 1 over the descending lattice b^{(p/q)^j} -> 0.
// The node b^{(p/q)^j / q} is chosen so its q- and p-images are the upper
// and lower endpoints of the j-th lattice step; that is what makes
// weight * (difference quotient of F at the node) telescope to
// F(b) - F(0) and keeps the inverse laws exact.
SeriesResult from_zero_series(const RealFunction& f, double b, const PqParams& params,
                              const SeriesConfig& config) {
    if (!(b > 0.0 && b < 1.0))
        throw DomainError("from-zero pq-integral requires 0 < b < 1, got b = " +
                          std::to_string(b));
    check_covers(f, Interval{0.0, orbit::stable_pow(b, 1.0 / params.q), false, true},
                 "from-zero pq-integral");
    return sum_series(
        [&](std::size_t j) {
            const int m = -static_cast<int>(j);
            const double w = orbit::stable_pow(b, orbit::exponent(m, params)) -
                             orbit::stable_pow(b, orbit::exponent(m - 1, params));
            const double node = orbit::stable_pow(b, orbit::exponent(m, params) / params.q);
            if (w == 0.0 || node == 0.0) return 0.0; // past double resolution
            return w * f(node);
        },
        config);
}

// Signed sum from 1 to x of f against g-increments:
// sum_j f(node(x,j)) * (g(x^{(q/p)^j}) - g(x^{(q/p)^{j+1}})).
SeriesResult dg_from_one_series(const RealFunction& f, const RealFunction& g, double x,
                                const PqParams& params, const SeriesConfig& config) {
    if (!(x > 0.0))
        throw DomainError("pq-integral against dg requires x > 0");
    if (x == 1.0) return zero_result();
    check_covers(f, orbit::node_range(x, params), "pq-integral against dg");
    const Interval g_needed = x > 1.0 ? Interval{1.0, x, false, true}
                                      : Interval{x, 1.0, true, false};
    check_covers(g, g_needed, "pq-integral against dg");
    return sum_series(
        [&](std::size_t j) {
            const double upper = orbit::stable_pow(x, orbit::exponent(static_cast<int>(j), params));
            const double lower =
                orbit::stable_pow(x, orbit::exponent(static_cast<int>(j) + 1, params));
            if (upper == lower) return 0.0;
            return f(orbit::node(x, static_cast<int>(j), params)) * (g(upper) - g(lower));
        },
        config);
}

// From-zero mirror of dg_from_one_series on 0 < b < 1, with the same node
// correction as from_zero_series.
SeriesResult dg_from_zero_series(const RealFunction& f, const RealFunction& g, double b,
                                 const PqParams& params, const SeriesConfig& config) {
    if (!(b > 0.0 && b < 1.0))
        throw DomainError("from-zero pq-integral against dg requires 0 < b < 1");
    check_covers(f, Interval{0.0, orbit::stable_pow(b, 1.0 / params.q), false, true},
                 "from-zero pq-integral against dg");
    check_covers(g, Interval{0.0, b, false, true}, "from-zero pq-integral against dg");
    return sum_series(
        [&](std::size_t j) {
            const int m = -static_cast<int>(j);
            const double upper = orbit::stable_pow(b, orbit::exponent(m, params));
            const double lower = orbit::stable_pow(b, orbit::exponent(m - 1, params));
            const double node = orbit::stable_pow(b, orbit::exponent(m, params) / params.q);
            if (upper == lower || node == 0.0) return 0.0;
            return f(node) * (g(upper) - g(lower));
        },
        config);
}

// Outward tail of the bilateral lattice sum at base x > 1: the terms with
// negative lattice index, covering [x^{1/q... }, inf). Together with
// from_one_series(x) this exhausts (1, inf).
SeriesResult outward_series(const RealFunction& f, double x, const PqParams& params,
                            const SeriesConfig& config) {
    return sum_series(
        [&](std::size_t m) {
            const int j = -1 - static_cast<int>(m);
            const double w = orbit::weight(x, j, params);
            if (w == 0.0) return 0.0;
            return w * f(orbit::node(x, j, params));
        },
        config);
}

// Toward-zero tail of the bilateral sum on [0,1] at base p: negated lattice
// weights of p with negative indices.
SeriesResult toward_zero_series(const RealFunction& f, const PqParams& params,
                                const SeriesConfig& config) {
    return sum_series(
        [&](std::size_t m) {
            const int j = -1 - static_cast<int>(m);
            const double w = -orbit::weight(params.p, j, params);
            const double node = orbit::node(params.p, j, params);
            if (w == 0.0 || node == 0.0) return 0.0;
            return w * f(node);
        },
        config);
}

SeriesResult run_part(std::vector<TaggedSeries>* parts, const std::string& tag,
                      SeriesResult r) {
    if (parts) parts->push_back({tag, r});
    return r;
}

// Bilateral sum for the [0,1] improper integral: the from-p-to-1 sum plus
// the toward-zero tail.
SeriesResult zero_one_bilateral(const RealFunction& f, const PqParams& params,
                                const SeriesConfig& config, std::vector<TaggedSeries>* parts) {
    check_covers(f, Interval{0.0, 1.0, false, false}, "improper pq-integral on [0,1]");
    const SeriesResult near =
        run_part(parts, "toward_one", negate(from_one_series(f, params.p, params, config)));
    const SeriesResult far =
        run_part(parts, "toward_zero", toward_zero_series(f, params, config));
    return combine(near, far, +1.0);
}

// Bilateral sum for the [1,inf) improper integral at base p/q.
SeriesResult one_inf_bilateral(const RealFunction& f, const PqParams& params,
                               const SeriesConfig& config, std::vector<TaggedSeries>* parts) {
    check_covers(f, Interval{1.0, kInf, false, false}, "improper pq-integral on [1,inf)");
    const double base = params.p / params.q;
    const SeriesResult near =
        run_part(parts, "toward_one", from_one_series(f, base, params, config));
    const SeriesResult far =
        run_part(parts, "toward_infinity", outward_series(f, base, params, config));
    return combine(near, far, +1.0);
}

} // namespace

const char* to_string(IntegralCase c) {
    switch (c) {
        case IntegralCase::AboveOne: return "AboveOne";
        case IntegralCase::BelowOneToOne: return "BelowOneToOne";
        case IntegralCase::ZeroToB: return "ZeroToB";
        case IntegralCase::SplitAcrossOne: return "SplitAcrossOne";
        case IntegralCase::ImproperFromOne: return "ImproperFromOne";
        case IntegralCase::ImproperZeroOne: return "ImproperZeroOne";
        case IntegralCase::ImproperZeroInf: return "ImproperZeroInf";
        case IntegralCase::ImproperFromA: return "ImproperFromA";
    }
    return "Unknown";
}

IntegralRequest IntegralRequest::classify(double lower, double upper) {
    if (!(lower >= 0.0) || std::isnan(upper))
        throw std::invalid_argument("integral bounds must satisfy 0 <= lower < upper");
    IntegralRequest r{lower, upper, IntegralCase::AboveOne};
    if (upper == kInf) {
        if (lower == 0.0)
            r.case_tag = IntegralCase::ImproperZeroInf;
        else if (lower == 1.0)
            r.case_tag = IntegralCase::ImproperFromOne;
        else
            r.case_tag = IntegralCase::ImproperFromA;
    } else if (lower == 0.0 && upper == 1.0) {
        r.case_tag = IntegralCase::ImproperZeroOne;
    } else if (lower >= 1.0 && upper > lower) {
        r.case_tag = IntegralCase::AboveOne;
    } else if (lower > 0.0 && lower < 1.0 && upper == 1.0) {
        r.case_tag = IntegralCase::BelowOneToOne;
    } else if (lower == 0.0 && upper > 0.0 && upper < 1.0) {
        r.case_tag = IntegralCase::ZeroToB;
    } else if (lower < 1.0 && upper > 1.0) {
        r.case_tag = IntegralCase::SplitAcrossOne;
    } else {
        throw std::invalid_argument(
            "bounds (" + std::to_string(lower) + ", " + std::to_string(upper) +
            ") fit no tagged case; sub-unit intervals go through definite_integral");
    }
    r.validate();
    return r;
}

void IntegralRequest::validate() const {
    auto fail = [&](const char* need) {
        throw std::invalid_argument(std::string("case ") + to_string(case_tag) +
                                    " requires " + need + "; got lower = " +
                                    std::to_string(lower) + ", upper = " + std::to_string(upper));
    };
    switch (case_tag) {
        case IntegralCase::AboveOne:
            if (!(1.0 <= lower && lower < upper && upper < kInf)) fail("1 <= lower < upper < inf");
            break;
        case IntegralCase::BelowOneToOne:
            if (!(0.0 < lower && lower < 1.0 && upper == 1.0)) fail("0 < lower < 1 = upper");
            break;
        case IntegralCase::ZeroToB:
            if (!(lower == 0.0 && 0.0 < upper && upper < 1.0)) fail("lower = 0, 0 < upper < 1");
            break;
        case IntegralCase::SplitAcrossOne:
            if (!(0.0 <= lower && lower < 1.0 && 1.0 < upper && upper < kInf))
                fail("0 <= lower < 1 < upper < inf");
            break;
        case IntegralCase::ImproperFromOne:
            if (!(lower == 1.0 && upper == kInf)) fail("lower = 1, upper = inf");
            break;
        case IntegralCase::ImproperZeroOne:
            if (!(lower == 0.0 && upper == 1.0)) fail("lower = 0, upper = 1");
            break;
        case IntegralCase::ImproperZeroInf:
            if (!(lower == 0.0 && upper == kInf)) fail("lower = 0, upper = inf");
            break;
        case IntegralCase::ImproperFromA:
            if (!(lower > 0.0 && lower != 1.0 && upper == kInf))
                fail("0 < lower != 1, upper = inf");
            break;
    }
}

Interval required_node_interval(const IntegralRequest& request, const PqParams& params) {
    require_integration(params);
    request.validate();
    const double a = request.lower;
    const double b = request.upper;
    switch (request.case_tag) {
        case IntegralCase::AboveOne:
            return Interval{1.0, orbit::stable_pow(b, 1.0 / params.p), false, true};
        case IntegralCase::BelowOneToOne:
            return Interval{orbit::stable_pow(a, 1.0 / params.p), 1.0, true, false};
        case IntegralCase::ZeroToB:
            return Interval{0.0, orbit::stable_pow(b, 1.0 / params.q), false, true};
        case IntegralCase::SplitAcrossOne:
            return Interval{a > 0.0 ? orbit::stable_pow(a, 1.0 / params.p) : 0.0,
                            orbit::stable_pow(b, 1.0 / params.p), a > 0.0, true};
        case IntegralCase::ImproperFromOne:
            return Interval{1.0, kInf, false, false};
        case IntegralCase::ImproperZeroOne:
            return Interval{0.0, 1.0, false, false};
        case IntegralCase::ImproperZeroInf:
            return Interval{0.0, kInf, false, false};
        case IntegralCase::ImproperFromA:
            if (a > 1.0) return Interval{orbit::stable_pow(a, 1.0 / params.q), kInf, true, false};
            return Interval{orbit::stable_pow(a, 1.0 / params.p), kInf, true, false};
    }
    return Interval::positive();
}

SeriesResult antiderivative_series(const RealFunction& f, double x, const PqParams& params,
                                   const SeriesConfig& config) {
    require_integration(params);
    return from_one_series(f, x, params, config);
}

SeriesResult integral_with_dg(const RealFunction& f, const RealFunction& g, double b,
                              const PqParams& params, const SeriesConfig& config) {
    require_integration(params);
    if (!(b > 0.0) || b == 1.0)
        throw std::invalid_argument("integral_with_dg requires b > 0, b != 1");
    if (b > 1.0) return dg_from_one_series(f, g, b, params, config);
    return dg_from_zero_series(f, g, b, params, config);
}

SeriesResult integral_with_dg_between(const RealFunction& f, const RealFunction& g, double a,
                                      double b, const PqParams& params,
                                      const SeriesConfig& config) {
    require_integration(params);
    if (!(a > 0.0) || !(b >= a) || b == kInf)
        throw std::invalid_argument("integral_with_dg_between requires 0 < a <= b < inf");
    if (a == b) return zero_result();
    if (a >= 1.0)
        return combine(dg_from_one_series(f, g, b, params, config),
                       dg_from_one_series(f, g, a, params, config), -1.0);
    if (b == 1.0) return negate(dg_from_one_series(f, g, a, params, config));
    if (b < 1.0)
        return combine(dg_from_zero_series(f, g, b, params, config),
                       dg_from_zero_series(f, g, a, params, config), -1.0);
    return combine(negate(dg_from_one_series(f, g, a, params, config)),
                   dg_from_one_series(f, g, b, params, config), +1.0);
}

SeriesResult definite_integral(double a, double b, const RealFunction& f,
                               const PqParams& params, const SeriesConfig& config) {
    require_integration(params);
    if (std::isnan(a) || std::isnan(b) || a < 0.0 || b < a || b == kInf)
        throw std::invalid_argument("definite_integral requires 0 <= a <= b < inf; got a = " +
                                    std::to_string(a) + ", b = " + std::to_string(b));
    if (a == b) return zero_result();
    if (a >= 1.0)
        return combine(from_one_series(f, b, params, config),
                       from_one_series(f, a, params, config), -1.0);
    if (b == 1.0) {
        if (a == 0.0) return zero_one_bilateral(f, params, config, nullptr);
        return negate(from_one_series(f, a, params, config));
    }
    if (b < 1.0) {
        const SeriesResult upper = from_zero_series(f, b, params, config);
        if (a == 0.0) return upper;
        return combine(upper, from_zero_series(f, a, params, config), -1.0);
    }
    // a < 1 < b
    const SeriesResult left = (a == 0.0)
                                  ? zero_one_bilateral(f, params, config, nullptr)
                                  : negate(from_one_series(f, a, params, config));
    return combine(left, from_one_series(f, b, params, config), +1.0);
}

SeriesResult integral_n(const RealFunction& f, double b, int n, const PqParams& params,
                        const SeriesConfig& config) {
    require_integration(params);
    if (n < 0) throw std::invalid_argument("integral order must be nonnegative");
    if (!(b > 0.0 && b < 1.0))
        throw std::invalid_argument("integral_n requires 0 < b < 1, got b = " + std::to_string(b));
    if (n == 0) return {f(b), 0, SeriesStatus::Converged, 0.0};

    // Memoization lives in this call only; concurrent evaluations share nothing.
    std::vector<std::unordered_map<double, double>> memo(static_cast<std::size_t>(n));
    std::function<double(double, int)> level = [&](double y, int depth) -> double {
        if (depth == 0) return f(y);
        auto& cache = memo[static_cast<std::size_t>(depth) - 1];
        if (auto it = cache.find(y); it != cache.end()) return it->second;
        RealFunction inner([&level, depth](double z) { return level(z, depth - 1); }, f.domain(),
                           "I^" + std::to_string(depth - 1) + "(" + f.name() + ")");
        const SeriesResult r = from_zero_series(inner, y, params, config);
        if (!r.converged())
            throw ConvergenceError(depth, "iterated pq-integral did not converge at depth " +
                                              std::to_string(depth) + " (status " +
                                              to_string(r.status) + ", y = " + std::to_string(y) +
                                              ")");
        cache.emplace(y, r.value);
        return r.value;
    };

    RealFunction top([&level, n](double z) { return level(z, n - 1); }, f.domain(),
                     "I^" + std::to_string(n - 1) + "(" + f.name() + ")");
    return from_zero_series(top, b, params, config);
}

SeriesResult improper_integral(const IntegralRequest& request, const RealFunction& f,
                               const PqParams& params, const SeriesConfig& config,
                               std::vector<TaggedSeries>* parts) {
    require_integration(params);
    request.validate();
    switch (request.case_tag) {
        case IntegralCase::ImproperFromOne:
            return one_inf_bilateral(f, params, config, parts);
        case IntegralCase::ImproperZeroOne:
            return zero_one_bilateral(f, params, config, parts);
        case IntegralCase::ImproperZeroInf: {
            const SeriesResult low = zero_one_bilateral(f, params, config, parts);
            const SeriesResult high = one_inf_bilateral(f, params, config, parts);
            return combine(low, high, +1.0);
        }
        case IntegralCase::ImproperFromA: {
            const double a = request.lower;
            if (a > 1.0) {
                check_covers(f, required_node_interval(request, params),
                             "improper pq-integral on [a,inf)");
                return run_part(parts, "toward_infinity",
                                outward_series(f, a, params, config));
            }
            const SeriesResult head = run_part(
                parts, "a_to_one", negate(from_one_series(f, a, params, config)));
            const SeriesResult rest = one_inf_bilateral(f, params, config, parts);
            return combine(head, rest, +1.0);
        }
        default:
            throw std::invalid_argument(
                "improper_integral requires an improper case tag, got " +
                std::string(to_string(request.case_tag)));
    }
}

} // namespace pqcalc
