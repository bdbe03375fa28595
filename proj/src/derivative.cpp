#include "pqcalc/derivative.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "pqcalc/errors.hpp"
#include "pqcalc/orbit.hpp"

namespace pqcalc {

void LimitPolicy::validate() const {
    if (!(seq_start > 0.0))
        throw std::invalid_argument("seq_start must be positive");
    if (!(shrink > 0.0 && shrink < 1.0))
        throw std::invalid_argument("shrink must lie in (0,1)");
    if (max_steps < 1 || stability_window < 1)
        throw std::invalid_argument("max_steps and stability_window must be positive");
    if (!(tol > 0.0))
        throw std::invalid_argument("tol must be positive");
    if (max_steps < stability_window)
        throw std::invalid_argument("max_steps must be at least stability_window");
}

double pq_differential(const RealFunction& f, double x, const PqParams& params) {
    if (!(x > 0.0))
        throw DomainError("pq_differential requires x > 0, got x = " + std::to_string(x));
    return f(orbit::stable_pow(x, params.p)) - f(orbit::stable_pow(x, params.q));
}

namespace {

double difference_quotient(const RealFunction& f, double x, const PqParams& params) {
    const double xp = orbit::stable_pow(x, params.p);
    const double xq = orbit::stable_pow(x, params.q);
    const double denom = xp - xq;
    if (denom == 0.0)
        throw DomainError("pq difference quotient degenerate at x = " + std::to_string(x) +
                          " (x^p and x^q coincide in double precision)");
    return (f(xp) - f(xq)) / denom;
}

// Extrapolates the quotient along the given point sequence. Succeeds when
// `window` successive values pairwise agree within tol.
double extrapolate(const RealFunction& f, const PqParams& params,
                   const std::function<double(int)>& point, const LimitPolicy& policy,
                   const char* where) {
    std::vector<double> recent;
    double prev_x = -1.0;
    for (int k = 0; k < policy.max_steps; ++k) {
        const double xk = point(k);
        if (xk == prev_x || xk <= 0.0 || xk == 1.0) break; // sequence exhausted double precision
        prev_x = xk;
        const double v = difference_quotient(f, xk, params);
        recent.push_back(v);
        if (recent.size() > static_cast<std::size_t>(policy.stability_window))
            recent.erase(recent.begin());
        if (recent.size() == static_cast<std::size_t>(policy.stability_window)) {
            double lo = recent[0], hi = recent[0];
            for (double r : recent) {
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
            if (hi - lo <= policy.tol) return recent.back();
        }
    }
    throw LimitError(std::string("pq-derivative limit at ") + where +
                         " did not converge within " + std::to_string(policy.max_steps) +
                         " steps",
                     recent);
}

double limit_at_zero(const RealFunction& f, const PqParams& params, const LimitPolicy& policy) {
    return extrapolate(
        f, params,
        [&](int k) { return policy.seq_start * std::pow(policy.shrink, k); }, policy,
        "x = 0 (right-sided)");
}

double limit_at_one(const RealFunction& f, const PqParams& params, const LimitPolicy& policy) {
    std::optional<double> right, left;
    std::vector<double> payload;

    auto try_side = [&](double sign, const char* where) -> std::optional<double> {
        auto seq = [&](int k) { return 1.0 + sign * policy.seq_start * std::pow(policy.shrink, k); };
        // Probe the first point: if f's domain forbids this side entirely,
        // fall back to the other side alone.
        try {
            difference_quotient(f, seq(0), params);
        } catch (const DomainError&) {
            return std::nullopt;
        }
        return extrapolate(f, params, seq, policy, where);
    };

    right = try_side(+1.0, "x = 1 (right-sided)");
    left = try_side(-1.0, "x = 1 (left-sided)");

    if (right && left) {
        const double scale = 1.0 + std::max(std::abs(*right), std::abs(*left));
        if (std::abs(*right - *left) <= 4.0 * policy.tol * scale)
            return 0.5 * (*right + *left);
        payload = {*right, *left};
        std::ostringstream msg;
        msg << "pq-derivative limit at x = 1: one-sided estimates disagree (right = "
            << *right << ", left = " << *left << ")";
        throw LimitError(msg.str(), payload);
    }
    if (right) return *right;
    if (left) return *left;
    throw LimitError("pq-derivative limit at x = 1: neither side lies inside the domain of " +
                         f.name(),
                     payload);
}

} // namespace

double pq_derivative(const RealFunction& f, double x, const PqParams& params,
                     const LimitPolicy& policy) {
    policy.validate();
    if (x < 0.0)
        throw DomainError("pq_derivative requires x >= 0, got x = " + std::to_string(x));
    if (x == 0.0) return limit_at_zero(f, params, policy);
    if (x == 1.0) return limit_at_one(f, params, policy);
    return difference_quotient(f, x, params);
}

namespace {

double derivative_rec(const RealFunction& f, double x, int n, const PqParams& params) {
    if (x == 0.0 || x == 1.0)
        throw DomainError("higher-order pq-derivative recursion hit the limit point x = " +
                          std::to_string(x));
    if (n == 1) return difference_quotient(f, x, params);
    RealFunction lower(
        [&f, n, &params](double y) { return derivative_rec(f, y, n - 1, params); },
        Interval::positive(), "D^" + std::to_string(n - 1) + "(" + f.name() + ")");
    return difference_quotient(lower, x, params);
}

} // namespace

double pq_derivative_n(const RealFunction& f, double x, int n, const PqParams& params) {
    if (n < 0)
        throw std::invalid_argument("derivative order must be nonnegative");
    if (n == 0) return f(x);
    if (n == 1) return pq_derivative(f, x, params);
    if (x == 0.0 || x == 1.0)
        throw DomainError("higher-order pq-derivative is defined pointwise away from x = 0, 1");
    return derivative_rec(f, x, n, params);
}

RealFunction derivative_function(const RealFunction& f, const PqParams& params) {
    return RealFunction([f, params](double y) { return pq_derivative(f, y, params); },
                        f.domain(), "D(" + f.name() + ")");
}

} // namespace pqcalc
